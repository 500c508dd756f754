#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "multivend/rng.hpp"

namespace multivend {

// Closed set of payoff shapes; every shape in the set is convex, which
// keeps the Jensen-gap properties checkable.
struct AffinePayoff {
    double slope = 1.0;
    double intercept = 0.0;
    bool operator==(const AffinePayoff&) const = default;
};

struct QuadraticPayoff {
    bool operator==(const QuadraticPayoff&) const = default;
};

struct HingePayoff {
    double strike = 0.0;  // max(x - strike, 0)
    bool operator==(const HingePayoff&) const = default;
};

// Piecewise-linear through (x, y) points with strictly increasing x;
// extended beyond the ends with the boundary segment slopes.
struct TablePayoff {
    std::vector<std::pair<double, double>> points;
    bool operator==(const TablePayoff&) const = default;
};

using PayoffFunction =
    std::variant<AffinePayoff, QuadraticPayoff, HingePayoff, TablePayoff>;

struct UniformBase {
    double lo = 0.0;
    double hi = 1.0;
    bool operator==(const UniformBase&) const = default;
};

struct TwoPointBase {
    double x1 = 0.0;  // taken with probability p
    double x2 = 1.0;
    double p = 0.5;
    bool operator==(const TwoPointBase&) const = default;
};

struct NormalBase {
    double mean = 0.0;
    double sd = 1.0;
    bool operator==(const NormalBase&) const = default;
};

using BaseDistribution = std::variant<UniformBase, TwoPointBase, NormalBase>;

// Mean-preserving spread: X_scale = mu + scale * (X - mu) with mu the base
// mean. scale 0 collapses to the mean, scale 1 is the base itself.
struct SpreadFamily {
    BaseDistribution base;
    double scale = 1.0;
    bool operator==(const SpreadFamily&) const = default;
};

// N interchangeable long-shot bets: each costs trial_cost and pays
// jackpot_value with jackpot_probability, independently.
struct OptionPortfolio {
    std::int64_t bets = 1;
    double trial_cost = 0.0;
    double jackpot_probability = 0.0;
    double jackpot_value = 0.0;
    bool operator==(const OptionPortfolio&) const = default;
};

double payoff_value(const PayoffFunction& f, double x);
void validate_payoff(const PayoffFunction& f);  // throws InvalidParameters

double base_mean(const BaseDistribution& d);
double base_variance(const BaseDistribution& d);
// Uniform draws consumed per sample: uniform 1, two-point 1, normal 2
// (Box-Muller, cosine branch).
double sample_base(const BaseDistribution& d, SplitMix64& rng);
void validate_spread(const SpreadFamily& d);  // throws InvalidParameters

// E[f(X_scale)] - f(E[X_scale]); nonnegative for convex f. Affine and
// quadratic shapes take an exact analytic path (0 and scale^2 * Var(X));
// the rest are Monte Carlo with one derived stream per trial.
double jensen_gap(const PayoffFunction& f, const SpreadFamily& d,
                  std::int64_t trials, std::uint64_t seed);

struct CurvePoint {
    double scale = 0.0;
    double expected_payoff = 0.0;
    double mc_stderr = 0.0;  // 0 on the analytic path
    bool operator==(const CurvePoint&) const = default;
};

// E[f(X_scale)] per requested scale (the scales override d.scale). All
// scales share the same base draws, so for convex f the curve is
// nondecreasing sample-by-sample, not just in expectation.
std::vector<CurvePoint> spread_curve(const PayoffFunction& f,
                                     const SpreadFamily& d,
                                     const std::vector<double>& scales,
                                     std::int64_t trials, std::uint64_t seed);

struct PortfolioResult {
    std::vector<double> payoffs;  // per trial
    double capture_probability = 0.0;  // fraction of trials with >= 1 jackpot
    double analytic_capture_probability = 0.0;  // 1 - (1-p)^N
    double mean_payoff = 0.0;
    double analytic_mean_payoff = 0.0;  // N * (p * J - c)
};

PortfolioResult portfolio_simulate(const OptionPortfolio& pf,
                                   std::int64_t trials, std::uint64_t seed);

struct VendorOptionResult {
    double expected_min = 0.0;
    double expected_min_stderr = 0.0;
    std::vector<double> per_vendor_expected;
    double savings_vs_best_single = 0.0;
};

// Value of the right to buy from the cheapest vendor each time: one price
// per vendor per trial, E[min] across vendors, and the saving against the
// best single vendor's mean. Vendor v's draws come from the (trial, v)
// stream, so appending a vendor never changes the draws of existing ones
// and the per-sample minimum can only go down.
VendorOptionResult vendor_option_value(const std::vector<SpreadFamily>& price_models,
                                       std::int64_t trials, std::uint64_t seed);

// Payoff study file: a `payoff` object selecting one analysis plus its
// parameters, with an optional free-text description.
enum class PayoffAnalysis { JensenGap, SpreadCurve, Portfolio, VendorOption };

struct PayoffStudy {
    PayoffAnalysis analysis = PayoffAnalysis::JensenGap;
    std::string description;
    std::optional<PayoffFunction> payoff;
    std::optional<SpreadFamily> distribution;
    std::vector<double> scales;
    std::optional<OptionPortfolio> portfolio;
    std::vector<SpreadFamily> vendors;
};

PayoffStudy load_study(const std::string& text);

}  // namespace multivend
