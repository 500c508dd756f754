#include <doctest.h>

#include <string>
#include <vector>

#include "multivend/csv.hpp"
#include "multivend/errors.hpp"
#include "multivend/scenario.hpp"
#include "multivend/serialize.hpp"
#include "multivend/solver.hpp"
#include "multivend/sweep.hpp"

using namespace multivend;

TEST_SUITE("number rendering") {
    TEST_CASE("integral values drop the decimal point") {
        CHECK(format_number(15.0) == "15");
        CHECK(format_number(0.0) == "0");
        CHECK(format_number(-3.0) == "-3");
    }

    TEST_CASE("fractions use the shortest round-trip form") {
        CHECK(format_number(0.1) == "0.1");
        CHECK(format_number(2.5) == "2.5");
        CHECK(format_number(1.0 / 3.0) == "0.3333333333333333");
    }
}

TEST_SUITE("csv rendering") {
    TEST_CASE("fields with commas are quoted") {
        const std::string text =
            render_csv({"subset", "size", "status", "z"},
                       {{std::string("s0,s1"), std::int64_t{2},
                         std::string("OPTIMAL"), 15.0}});
        CHECK(text ==
              "subset,size,status,z\n\"s0,s1\",2,OPTIMAL,15\n");
    }

    TEST_CASE("embedded quotes are doubled") {
        const std::string text =
            render_csv({"name"}, {{std::string("say \"hi\"")}});
        CHECK(text == "name\n\"say \"\"hi\"\"\"\n");
    }

    TEST_CASE("newlines inside a field are preserved under quotes") {
        const std::string text = render_csv({"note"}, {{std::string("a\nb")}});
        CHECK(text == "note\n\"a\nb\"\n");
    }

    TEST_CASE("rows are mandatory and must be rectangular") {
        CHECK_THROWS_AS(render_csv({"a"}, {}), InvalidParameters);
        CHECK_THROWS_AS(render_csv({"a", "b"}, {{std::string("x")}}),
                        InvalidParameters);
    }

    TEST_CASE("an unwritable path raises an io error") {
        CHECK_THROWS_AS(emit_csv({"a"}, {{std::int64_t{1}}},
                                 "/nonexistent-dir/out.csv"),
                        IoError);
    }
}

TEST_SUITE("report shapes") {
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

    TEST_CASE("plans list only the active shipments") {
        const Scenario s = two_by_two();
        const ShipmentPlan plan = solve_scenario(s);
        const auto j = plan_to_json(s, plan);
        CHECK(j.at("status") == "OPTIMAL");
        CHECK(j.at("z") == 15.0);
        REQUIRE(j.at("shipments").size() == 2);
        for (const auto& entry : j.at("shipments")) {
            CHECK(entry.at("supplier") == "s0");
            CHECK(entry.at("units") == 5);
        }
    }

    TEST_CASE("infeasible plans carry no z and no shipments") {
        Scenario s;
        s.suppliers = {{"s0", 3}};
        s.items = {"k0"};
        s.demands = {{"d0", "k0", 5}};
        s.resize_tensors();
        s.costs[0] = 1.0;
        const auto j = plan_to_json(s, solve_scenario(s));
        CHECK(j.at("status") == "INFEASIBLE");
        CHECK_FALSE(j.contains("z"));
        CHECK_FALSE(j.contains("shipments"));
    }

    TEST_CASE("the sweep table leaves z empty when infeasible") {
        Scenario s = two_by_two();
        s.costs[s.cost_index(1, 0, 1)].reset();  // s1 alone cannot serve d1
        const auto table = sweep_table(sweep_subsets(s, 1));
        CHECK(table.header ==
              std::vector<std::string>{"subset", "size", "status", "z"});
        const std::string text = render_csv(table.header, table.rows);
        CHECK(text.find("s1,1,INFEASIBLE,\n") != std::string::npos);
        CHECK(text.find("\"s0,s1\",2,OPTIMAL,15\n") != std::string::npos);
    }

    TEST_CASE("risk summaries expose every statistic") {
        RiskSummary r;
        r.trials = 4;
        r.mean = 2.0;
        r.stddev = 1.0;
        r.q50 = 2.0;
        r.q90 = 3.0;
        r.q99 = 3.5;
        r.tail_mean_q99 = 3.75;
        r.infeasible_period_fraction = 0.25;
        const auto j = risk_summary_to_json(r);
        CHECK(j.at("trials") == 4);
        CHECK(j.at("mean") == 2.0);
        CHECK(j.at("stddev") == 1.0);
        CHECK(j.at("q50") == 2.0);
        CHECK(j.at("q90") == 3.0);
        CHECK(j.at("q99") == 3.5);
        CHECK(j.at("tail_mean_q99") == 3.75);
        CHECK(j.at("infeasible_period_fraction") == 0.25);
    }

    TEST_CASE("the curve table pins its column names") {
        const auto table = curve_table({{0.5, 1.25, 0.01}});
        CHECK(table.header ==
              std::vector<std::string>{"σ", "expected_payoff", "mc_stderr"});
        CHECK(render_csv(table.header, table.rows) ==
              "σ,expected_payoff,mc_stderr\n0.5,1.25,0.01\n");
    }
}
