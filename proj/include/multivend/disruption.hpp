#pragma once

#include <cstdint>
#include <vector>

#include "multivend/scenario.hpp"

namespace multivend {

// Placement on the disruption-probability vs consequence plane.
enum class Quadrant { LowPLowC, LowPHighC, HighPLowC, HighPHighC };

// Per-trial totals from a horizon simulation. `shortfall_periods` counts,
// per trial, the periods in which surviving capacity could not meet demand.
struct CostDistribution {
    std::vector<double> trial_costs;
    std::vector<std::int32_t> shortfall_periods;
    int periods = 1;

    bool operator==(const CostDistribution&) const = default;
};

// Summary statistics of simulated total cost. Quantiles use the
// nearest-rank definition: the ceil(p * n)-th smallest observation.
// tail_mean_q99 averages every observation from the 0.99-quantile rank up.
struct RiskSummary {
    std::int64_t trials = 0;
    double mean = 0.0;
    double stddev = 0.0;  // population standard deviation
    double q50 = 0.0;
    double q90 = 0.0;
    double q99 = 0.0;
    double tail_mean_q99 = 0.0;
    double infeasible_period_fraction = 0.0;

    bool operator==(const RiskSummary&) const = default;
};

// Inverse-CDF sample of the severity distribution with density
// proportional to x^-k on [x_min, inf):
//   F(x) = 1 - (x_min / x)^(k-1),  sample = x_min * (1-u)^(-1/(k-1)).
// Always >= x_min for u in [0, 1).
double sample_severity(const PowerLaw& pl, double u);

// LOW strictly below the threshold, HIGH otherwise (ties are HIGH).
Quadrant classify_quadrant(double probability, double consequence,
                           double p_threshold, double c_threshold);

// Monte Carlo over `trials` independent trials of `periods` periods each.
// Per period, every supplier disrupts independently with its per-period
// probability and loses capacity per the model's capacity rule; the
// transportation problem is re-solved on surviving capacity, serving as
// much demand as possible at minimum cost, and every unmet unit costs the
// shortage penalty. Draw order per period, from the stream derived from
// (seed, trial, period): one uniform per supplier in canonical order, plus
// one severity uniform immediately after a supplier's disruption draw hits.
CostDistribution simulate_horizon(const Scenario& s, const DisruptionModel& dm,
                                  int periods, int trials, std::uint64_t seed);

// Throws EmptyDistribution when there are no trials.
RiskSummary summarize_risk(const CostDistribution& costs);

}  // namespace multivend
