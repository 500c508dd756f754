#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "multivend/errors.hpp"
#include "multivend/rng.hpp"
#include "multivend/scenario.hpp"
#include "multivend/solver.hpp"
#include "multivend/sweep.hpp"
#include "testutil.hpp"

using namespace multivend;

namespace {

Scenario two_by_two() {
    Scenario s;
    s.suppliers = {{"s0", 10}, {"s1", 10}};
    s.items = {"k0"};
    s.demands = {{"d0", "k0", 5}, {"d1", "k0", 5}};
    s.resize_tensors();
    s.costs[s.cost_index(0, 0, 0)] = 1.0;
    s.costs[s.cost_index(0, 0, 1)] = 2.0;
    s.costs[s.cost_index(1, 0, 0)] = 3.0;
    s.costs[s.cost_index(1, 0, 1)] = 4.0;
    return s;
}

}  // namespace

TEST_SUITE("subset sweep") {
    TEST_CASE("2x2 worked instance sweeps to 15, 35, 15") {
        const SweepResult r = sweep_subsets(two_by_two(), 1);
        REQUIRE(r.entries.size() == 3);

        CHECK(r.entries[0].subset == std::vector<std::string>{"s0"});
        CHECK(r.entries[0].status == PlanStatus::Optimal);
        CHECK(r.entries[0].objective == 15.0);

        CHECK(r.entries[1].subset == std::vector<std::string>{"s1"});
        CHECK(r.entries[1].status == PlanStatus::Optimal);
        CHECK(r.entries[1].objective == 35.0);

        CHECK(r.entries[2].subset == std::vector<std::string>{"s0", "s1"});
        CHECK(r.entries[2].status == PlanStatus::Optimal);
        CHECK(r.entries[2].objective == 15.0);

        CHECK(r.baseline_status == PlanStatus::Optimal);
        CHECK(r.baseline_objective == 15.0);
    }

    TEST_CASE("a single-supplier sweep is just the full solve") {
        Scenario s;
        s.suppliers = {{"s0", 5}};
        s.items = {"k0"};
        s.demands = {{"d0", "k0", 5}};
        s.resize_tensors();
        s.costs[0] = 2.0;
        const SweepResult r = sweep_subsets(s, 1);
        REQUIRE(r.entries.size() == 1);
        CHECK(r.entries[0].objective == solve_scenario(s).objective);
        CHECK(r.entries[0].objective == r.baseline_objective);
    }

    TEST_CASE("min_size beyond the supplier count is rejected") {
        CHECK_THROWS_AS(sweep_subsets(two_by_two(), 3), InvalidParameters);
        CHECK_THROWS_AS(sweep_subsets(two_by_two(), 0), InvalidParameters);
    }

    TEST_CASE("seventeen suppliers trip the explosion guard") {
        Scenario s;
        for (int i = 0; i < 17; ++i) {
            s.suppliers.push_back({"s" + std::to_string(i), 1});
        }
        s.items = {"k0"};
        s.demands = {{"d0", "k0", 1}};
        s.resize_tensors();
        CHECK_THROWS_AS(sweep_subsets(s, 1), TooManySuppliers);
    }

    TEST_CASE("infeasible subsets are recorded, not refused") {
        Scenario s = two_by_two();
        s.costs[s.cost_index(1, 0, 1)].reset();  // s1 cannot reach d1
        const SweepResult r = sweep_subsets(s, 1);
        REQUIRE(r.entries.size() == 3);
        CHECK(r.entries[1].status == PlanStatus::Infeasible);
        CHECK(r.entries[0].status == PlanStatus::Optimal);
        CHECK(r.entries[2].status == PlanStatus::Optimal);
    }

    TEST_CASE("every entry matches an independent restricted solve") {
        SplitMix64 rng(2024);
        for (int i = 0; i < 40; ++i) {
            const Scenario s = testutil::random_instance(rng);
            const SweepResult r = sweep_subsets(s, 1);
            for (const auto& entry : r.entries) {
                const std::set<std::string> names(entry.subset.begin(),
                                                  entry.subset.end());
                const ShipmentPlan check =
                    solve_scenario(restrict_suppliers(s, names));
                CAPTURE(i);
                REQUIRE(entry.status == check.status);
                if (entry.status == PlanStatus::Optimal) {
                    CHECK(entry.objective == check.objective);
                }
            }
        }
    }

    TEST_CASE("shrinking the supplier set never lowers the cost") {
        SplitMix64 rng(60601);
        int checked = 0;
        for (int i = 0; i < 100; ++i) {
            testutil::GenOptions opt;
            opt.max_suppliers = 4;
            opt.generous_supply = true;
            opt.unavailable_prob = 0.1;
            const Scenario s = testutil::random_instance(rng, opt);
            const SweepResult r = sweep_subsets(s, 1);
            for (const auto& a : r.entries) {
                for (const auto& b : r.entries) {
                    if ((a.mask & b.mask) != a.mask) {
                        continue;  // only pairs with A inside B
                    }
                    CAPTURE(i);
                    if (b.status == PlanStatus::Infeasible) {
                        CHECK(a.status == PlanStatus::Infeasible);
                    } else if (a.status == PlanStatus::Optimal) {
                        CHECK(a.objective >= b.objective);
                        ++checked;
                    }
                }
            }
        }
        CHECK(checked > 200);
    }
}

TEST_SUITE("marginal supplier value") {
    TEST_CASE("a redundant cheap supplier is worth nothing extra") {
        CHECK(marginal_value(two_by_two(), "s1") == 0.0);
    }

    TEST_CASE("losing the cheap supplier costs twenty") {
        CHECK(marginal_value(two_by_two(), "s0") == 20.0);
    }

    TEST_CASE("losing the only supplier is infinitely bad") {
        Scenario s;
        s.suppliers = {{"s0", 5}};
        s.items = {"k0"};
        s.demands = {{"d0", "k0", 5}};
        s.resize_tensors();
        s.costs[0] = 2.0;
        const double v = marginal_value(s, "s0");
        CHECK(std::isinf(v));
        CHECK(v > 0);
    }

    TEST_CASE("an unknown supplier is reported") {
        CHECK_THROWS_AS(marginal_value(two_by_two(), "ghost"),
                        UnknownSupplier);
    }

    TEST_CASE("marginal value is never negative") {
        SplitMix64 rng(505);
        for (int i = 0; i < 60; ++i) {
            const Scenario s = testutil::random_instance(rng);
            if (solve_scenario(s).status != PlanStatus::Optimal) {
                continue;
            }
            for (const auto& sup : s.suppliers) {
                CAPTURE(i);
                CHECK(marginal_value(s, sup.name) >= 0.0);
            }
        }
    }
}
