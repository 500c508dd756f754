#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "multivend/disruption.hpp"
#include "multivend/errors.hpp"
#include "multivend/rng.hpp"
#include "multivend/scenario.hpp"
#include "multivend/solver.hpp"

using namespace multivend;

namespace {

Scenario single_vendor() {
    Scenario s;
    s.suppliers = {{"s0", 5}};
    s.items = {"k0"};
    s.demands = {{"d0", "k0", 5}};
    s.resize_tensors();
    s.costs[0] = 1.0;
    DisruptionModel dm;
    dm.disruption_probability = {0.5};
    dm.severity = {2.5, 1.0};
    dm.shortage_penalty = 10.0;
    dm.capacity_rule = CapacityRule::TotalLoss;
    s.disruption = dm;
    return s;
}

Scenario dual_vendor() {
    Scenario s;
    s.suppliers = {{"s0", 5}, {"s1", 5}};
    s.items = {"k0"};
    s.demands = {{"d0", "k0", 5}};
    s.resize_tensors();
    s.costs[s.cost_index(0, 0, 0)] = 1.0;
    s.costs[s.cost_index(1, 0, 0)] = 2.0;
    DisruptionModel dm;
    dm.disruption_probability = {0.5, 0.5};
    dm.severity = {2.5, 1.0};
    dm.shortage_penalty = 10.0;
    dm.capacity_rule = CapacityRule::TotalLoss;
    s.disruption = dm;
    return s;
}

double mean_of(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    return sum / static_cast<double>(xs.size());
}

double stderr_of(const std::vector<double>& xs) {
    const double m = mean_of(xs);
    double sq = 0.0;
    for (double x : xs) {
        sq += (x - m) * (x - m);
    }
    const auto n = static_cast<double>(xs.size());
    return std::sqrt(sq / n / n);
}

}  // namespace

TEST_SUITE("severity sampling") {
    TEST_CASE("u = 0 lands on the minimum severity") {
        CHECK(sample_severity({2.0, 1.0}, 0.0) == 1.0);
        CHECK(sample_severity({3.5, 7.0}, 0.0) == 7.0);
    }

    TEST_CASE("quartile inversions match hand algebra") {
        CHECK(sample_severity({2.0, 1.0}, 0.75) == doctest::Approx(4.0));
        CHECK(sample_severity({3.0, 2.0}, 0.75) == doctest::Approx(4.0));
    }

    TEST_CASE("samples never fall below the minimum") {
        SplitMix64 rng(8);
        const PowerLaw pl{1.7, 0.3};
        for (int i = 0; i < 10000; ++i) {
            CHECK(sample_severity(pl, rng.next_unit()) >= pl.x_min);
        }
    }

    TEST_CASE("empirical distribution tracks the analytic tail") {
        // Kolmogorov-Smirnov distance between 1e5 inverse-CDF samples and
        // F(x) = 1 - x^(-1.5) stays under 0.01.
        const PowerLaw pl{2.5, 1.0};
        const int n = 100000;
        std::vector<double> xs;
        xs.reserve(n);
        SplitMix64 rng(123);
        for (int i = 0; i < n; ++i) {
            xs.push_back(sample_severity(pl, rng.next_unit()));
        }
        std::sort(xs.begin(), xs.end());
        double ks = 0.0;
        for (int i = 0; i < n; ++i) {
            const double cdf =
                1.0 - std::pow(pl.x_min / xs[static_cast<std::size_t>(i)],
                               pl.exponent - 1.0);
            const double lo = static_cast<double>(i) / n;
            const double hi = static_cast<double>(i + 1) / n;
            ks = std::max({ks, std::abs(cdf - lo), std::abs(cdf - hi)});
        }
        CHECK(ks < 0.01);
    }
}

TEST_SUITE("quadrant classification") {
    TEST_CASE("rare but severe lands in low-probability high-consequence") {
        CHECK(classify_quadrant(0.01, 0.9, 0.5, 0.5) == Quadrant::LowPHighC);
    }

    TEST_CASE("threshold ties count as high") {
        CHECK(classify_quadrant(0.5, 0.5, 0.5, 0.5) == Quadrant::HighPHighC);
    }

    TEST_CASE("frequent but mild lands in high-probability low-consequence") {
        CHECK(classify_quadrant(0.9, 0.1, 0.5, 0.5) == Quadrant::HighPLowC);
    }

    TEST_CASE("both below threshold is the quiet quadrant") {
        CHECK(classify_quadrant(0.1, 0.1, 0.5, 0.5) == Quadrant::LowPLowC);
    }
}

TEST_SUITE("horizon simulation") {
    TEST_CASE("single vendor: mean cost matches the two-outcome enumeration") {
        const Scenario s = single_vendor();
        const CostDistribution costs =
            simulate_horizon(s, *s.disruption, 1, 20000, 11);
        // Up: 5 units at cost 1 = 5. Down: 5 unmet at penalty 10 = 50.
        const double expected = 0.5 * 5.0 + 0.5 * 50.0;
        const double se = stderr_of(costs.trial_costs);
        CHECK(std::abs(mean_of(costs.trial_costs) - expected) <= 3.0 * se);
    }

    TEST_CASE("two vendors: mean cost matches the four-outcome enumeration") {
        const Scenario s = dual_vendor();
        const CostDistribution costs =
            simulate_horizon(s, *s.disruption, 1, 20000, 11);
        // (5 + 5 + 10 + 50) / 4.
        const double expected = 17.5;
        const double se = stderr_of(costs.trial_costs);
        CHECK(std::abs(mean_of(costs.trial_costs) - expected) <= 3.0 * se);
    }

    TEST_CASE("redundancy helps on every single trial under shared draws") {
        const Scenario one = single_vendor();
        const Scenario two = dual_vendor();
        const CostDistribution c1 =
            simulate_horizon(one, *one.disruption, 1, 5000, 99);
        const CostDistribution c2 =
            simulate_horizon(two, *two.disruption, 1, 5000, 99);
        REQUIRE(c1.trial_costs.size() == c2.trial_costs.size());
        for (std::size_t i = 0; i < c1.trial_costs.size(); ++i) {
            CAPTURE(i);
            CHECK(c2.trial_costs[i] <= c1.trial_costs[i]);
        }
        CHECK(mean_of(c2.trial_costs) < mean_of(c1.trial_costs));
    }

    TEST_CASE("zero disruption probability reproduces the baseline exactly") {
        Scenario s = dual_vendor();
        s.disruption->disruption_probability = {0.0, 0.0};
        const double baseline = solve_scenario(s).objective;
        const CostDistribution costs =
            simulate_horizon(s, *s.disruption, 3, 200, 5);
        for (double c : costs.trial_costs) {
            CHECK(c == baseline * 3.0);
        }
        for (auto shortfalls : costs.shortfall_periods) {
            CHECK(shortfalls == 0);
        }
    }

    TEST_CASE("identical inputs give bit-identical distributions") {
        const Scenario s = dual_vendor();
        const CostDistribution a =
            simulate_horizon(s, *s.disruption, 4, 500, 31);
        const CostDistribution b =
            simulate_horizon(s, *s.disruption, 4, 500, 31);
        CHECK(a == b);
    }

    TEST_CASE("different seeds give different distributions") {
        const Scenario s = dual_vendor();
        const CostDistribution a =
            simulate_horizon(s, *s.disruption, 1, 500, 1);
        const CostDistribution b =
            simulate_horizon(s, *s.disruption, 1, 500, 2);
        CHECK(a.trial_costs != b.trial_costs);
    }

    TEST_CASE("proportional rule with severity_ref at x_min equals total loss") {
        // Every severity draw is at least x_min, so scaling by
        // max(0, 1 - severity / x_min) always floors to zero capacity.
        // The severity uniform is consumed under both rules, keeping the
        // streams aligned, so the distributions match bit for bit.
        const Scenario total = dual_vendor();
        Scenario prop = dual_vendor();
        prop.disruption->capacity_rule = CapacityRule::Proportional;
        prop.disruption->severity_ref = prop.disruption->severity.x_min;
        const CostDistribution a =
            simulate_horizon(total, *total.disruption, 2, 500, 77);
        const CostDistribution b =
            simulate_horizon(prop, *prop.disruption, 2, 500, 77);
        CHECK(a == b);
    }

    TEST_CASE("a gentle proportional hit keeps some capacity") {
        // severity_ref far above x_min: a severity at the minimum removes
        // only a sliver of capacity, so with k large (thin tail) most
        // trials keep the plan affordable versus total loss.
        Scenario prop = single_vendor();
        prop.disruption->capacity_rule = CapacityRule::Proportional;
        prop.disruption->severity = {6.0, 1.0};
        prop.disruption->severity_ref = 1000.0;
        const CostDistribution gentle =
            simulate_horizon(prop, *prop.disruption, 1, 4000, 13);
        const Scenario total = single_vendor();
        const CostDistribution harsh =
            simulate_horizon(total, *total.disruption, 1, 4000, 13);
        CHECK(mean_of(gentle.trial_costs) < mean_of(harsh.trial_costs));
    }

    TEST_CASE("parameter guards") {
        const Scenario s = single_vendor();
        CHECK_THROWS_AS(simulate_horizon(s, *s.disruption, 0, 10, 1),
                        InvalidParameters);
        CHECK_THROWS_AS(simulate_horizon(s, *s.disruption, 1, 0, 1),
                        InvalidParameters);
        DisruptionModel bad = *s.disruption;
        bad.severity.exponent = 1.0;
        CHECK_THROWS_AS(simulate_horizon(s, bad, 1, 10, 1),
                        InvalidParameters);
        DisruptionModel prop = *s.disruption;
        prop.capacity_rule = CapacityRule::Proportional;
        prop.severity_ref.reset();
        CHECK_THROWS_AS(simulate_horizon(s, prop, 1, 10, 1),
                        InvalidParameters);
    }
}

TEST_SUITE("risk summary") {
    TEST_CASE("a constant distribution is flat everywhere") {
        CostDistribution costs;
        costs.trial_costs = {10.0, 10.0, 10.0};
        const RiskSummary r = summarize_risk(costs);
        CHECK(r.trials == 3);
        CHECK(r.mean == 10.0);
        CHECK(r.stddev == 0.0);
        CHECK(r.q50 == 10.0);
        CHECK(r.q90 == 10.0);
        CHECK(r.q99 == 10.0);
        CHECK(r.tail_mean_q99 == 10.0);
    }

    TEST_CASE("nearest-rank median of 0..99 is 49") {
        CostDistribution costs;
        for (int i = 0; i < 100; ++i) {
            costs.trial_costs.push_back(static_cast<double>(i));
        }
        const RiskSummary r = summarize_risk(costs);
        CHECK(r.q50 == 49.0);
        CHECK(r.q90 == 89.0);
        CHECK(r.q99 == 98.0);
        CHECK(r.tail_mean_q99 == 98.5);
        CHECK(r.mean == 49.5);
    }

    TEST_CASE("a single trial pins every statistic") {
        CostDistribution costs;
        costs.trial_costs = {7.0};
        const RiskSummary r = summarize_risk(costs);
        CHECK(r.trials == 1);
        CHECK(r.mean == 7.0);
        CHECK(r.stddev == 0.0);
        CHECK(r.q50 == 7.0);
        CHECK(r.q90 == 7.0);
        CHECK(r.q99 == 7.0);
        CHECK(r.tail_mean_q99 == 7.0);
    }

    TEST_CASE("no trials is an error") {
        CHECK_THROWS_AS(summarize_risk(CostDistribution{}),
                        EmptyDistribution);
    }

    TEST_CASE("quantiles are ordered and the tail dominates the cutoff") {
        SplitMix64 rng(4);
        CostDistribution costs;
        costs.periods = 2;
        for (int i = 0; i < 5000; ++i) {
            costs.trial_costs.push_back(rng.next_unit() * 100.0);
            costs.shortfall_periods.push_back(
                static_cast<std::int32_t>(rng.next_u64() % 3));
        }
        const RiskSummary r = summarize_risk(costs);
        CHECK(r.q50 <= r.q90);
        CHECK(r.q90 <= r.q99);
        CHECK(r.tail_mean_q99 >= r.q99);
        CHECK(r.infeasible_period_fraction >= 0.0);
        CHECK(r.infeasible_period_fraction <= 1.0);
    }

    TEST_CASE("the shortfall fraction counts period hits") {
        CostDistribution costs;
        costs.periods = 4;
        costs.trial_costs = {1.0, 2.0};
        costs.shortfall_periods = {1, 3};
        const RiskSummary r = summarize_risk(costs);
        CHECK(r.infeasible_period_fraction == 0.5);
    }
}
