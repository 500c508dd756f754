#include "multivend/disruption.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "multivend/errors.hpp"
#include "multivend/flow_network.hpp"
#include "multivend/rng.hpp"
#include "multivend/solver.hpp"

namespace multivend {

double sample_severity(const PowerLaw& pl, double u) {
    return pl.x_min * std::pow(1.0 - u, -1.0 / (pl.exponent - 1.0));
}

Quadrant classify_quadrant(double probability, double consequence,
                           double p_threshold, double c_threshold) {
    const bool high_p = probability >= p_threshold;
    const bool high_c = consequence >= c_threshold;
    if (high_p) {
        return high_c ? Quadrant::HighPHighC : Quadrant::HighPLowC;
    }
    return high_c ? Quadrant::LowPHighC : Quadrant::LowPLowC;
}

namespace {

std::int64_t scaled_capacity(std::int64_t capacity, double severity,
                             double severity_ref) {
    const double keep = std::max(0.0, 1.0 - severity / severity_ref);
    return static_cast<std::int64_t>(
        std::floor(static_cast<double>(capacity) * keep));
}

}  // namespace

CostDistribution simulate_horizon(const Scenario& s, const DisruptionModel& dm,
                                  int periods, int trials,
                                  std::uint64_t seed) {
    if (periods < 1 || trials < 1) {
        throw InvalidParameters("periods and trials must both be at least 1");
    }
    if (dm.disruption_probability.size() != s.supplier_count()) {
        throw InvalidParameters(
            "disruption probabilities do not match the supplier list");
    }
    if (!(dm.severity.exponent > 1.0) || !(dm.severity.x_min > 0.0)) {
        throw InvalidParameters("power law requires exponent > 1 and x_min > 0");
    }
    if (dm.capacity_rule == CapacityRule::Proportional &&
        (!dm.severity_ref || !(*dm.severity_ref > 0.0))) {
        throw InvalidParameters(
            "proportional capacity rule requires a positive severity_ref");
    }

    FlowNetwork net = build_flow_network(s);
    const std::size_t ns = s.supplier_count();
    const double penalty = dm.shortage_penalty;

    // The first ns arcs are the source arcs; a period only perturbs those
    // capacities, so solves are memoized on the surviving-capacity vector.
    std::vector<std::int64_t> base_capacity(ns);
    for (std::size_t i = 0; i < ns; ++i) {
        base_capacity[i] = net.arcs[i].capacity;
    }
    struct PeriodOutcome {
        double cost = 0.0;
        bool shortfall = false;
    };
    std::map<std::vector<std::int64_t>, PeriodOutcome> memo;

    CostDistribution out;
    out.periods = periods;
    out.trial_costs.reserve(static_cast<std::size_t>(trials));
    out.shortfall_periods.assign(static_cast<std::size_t>(trials), 0);

    std::vector<std::int64_t> capacity(ns);
    for (int t = 0; t < trials; ++t) {
        double trial_cost = 0.0;
        for (int p = 0; p < periods; ++p) {
            SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t),
                                         static_cast<std::uint64_t>(p)));
            for (std::size_t i = 0; i < ns; ++i) {
                capacity[i] = base_capacity[i];
                if (rng.next_unit() < dm.disruption_probability[i]) {
                    const double severity =
                        sample_severity(dm.severity, rng.next_unit());
                    capacity[i] =
                        dm.capacity_rule == CapacityRule::TotalLoss
                            ? 0
                            : scaled_capacity(base_capacity[i], severity,
                                              *dm.severity_ref);
                }
            }

            auto [it, inserted] = memo.try_emplace(capacity);
            if (inserted) {
                for (std::size_t i = 0; i < ns; ++i) {
                    net.arcs[i].capacity = capacity[i];
                }
                const FlowSolution sol = min_cost_max_flow(net);
                const std::int64_t unmet = net.total_demand - sol.flow;
                it->second.cost =
                    sol.cost + penalty * static_cast<double>(unmet);
                it->second.shortfall = unmet > 0;
            }
            trial_cost += it->second.cost;
            if (it->second.shortfall) {
                ++out.shortfall_periods[static_cast<std::size_t>(t)];
            }
        }
        out.trial_costs.push_back(trial_cost);
    }
    return out;
}

RiskSummary summarize_risk(const CostDistribution& costs) {
    const std::size_t n = costs.trial_costs.size();
    if (n == 0) {
        throw EmptyDistribution("risk summary requires at least one trial");
    }

    RiskSummary summary;
    summary.trials = static_cast<std::int64_t>(n);

    double sum = 0.0;
    for (double c : costs.trial_costs) {
        sum += c;
    }
    summary.mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (double c : costs.trial_costs) {
        const double d = c - summary.mean;
        sq += d * d;
    }
    summary.stddev = std::sqrt(sq / static_cast<double>(n));

    std::vector<double> sorted = costs.trial_costs;
    std::sort(sorted.begin(), sorted.end());
    const auto rank = [n](double p) {
        const auto r = static_cast<std::size_t>(
            std::ceil(p * static_cast<double>(n)));
        return std::min(n - 1, r == 0 ? 0 : r - 1);
    };
    summary.q50 = sorted[rank(0.5)];
    summary.q90 = sorted[rank(0.9)];
    summary.q99 = sorted[rank(0.99)];

    const std::size_t tail_start = rank(0.99);
    double tail_sum = 0.0;
    for (std::size_t i = tail_start; i < n; ++i) {
        tail_sum += sorted[i];
    }
    summary.tail_mean_q99 = tail_sum / static_cast<double>(n - tail_start);

    std::int64_t shortfalls = 0;
    for (std::int32_t c : costs.shortfall_periods) {
        shortfalls += c;
    }
    const auto total_periods =
        static_cast<double>(n) * static_cast<double>(costs.periods);
    summary.infeasible_period_fraction =
        total_periods > 0 ? static_cast<double>(shortfalls) / total_periods : 0.0;

    return summary;
}

}  // namespace multivend
