#include "multivend/optionality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json_util.hpp"
#include "multivend/errors.hpp"

namespace multivend {

double payoff_value(const PayoffFunction& f, double x) {
    return std::visit(
        [x](const auto& shape) -> double {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, AffinePayoff>) {
                return shape.slope * x + shape.intercept;
            } else if constexpr (std::is_same_v<T, QuadraticPayoff>) {
                return x * x;
            } else if constexpr (std::is_same_v<T, HingePayoff>) {
                return std::max(x - shape.strike, 0.0);
            } else {
                const auto& pts = shape.points;
                if (pts.size() == 1) {
                    return pts.front().second;
                }
                std::size_t hi = 1;
                while (hi + 1 < pts.size() && pts[hi].first < x) {
                    ++hi;
                }
                const auto& [x0, y0] = pts[hi - 1];
                const auto& [x1, y1] = pts[hi];
                const double slope = (y1 - y0) / (x1 - x0);
                return y0 + slope * (x - x0);
            }
        },
        f);
}

void validate_payoff(const PayoffFunction& f) {
    if (const auto* table = std::get_if<TablePayoff>(&f)) {
        if (table->points.empty()) {
            throw InvalidParameters("table payoff requires at least one point");
        }
        for (std::size_t i = 1; i < table->points.size(); ++i) {
            if (!(table->points[i - 1].first < table->points[i].first)) {
                throw InvalidParameters(
                    "table payoff breakpoints must be strictly increasing");
            }
        }
    }
}

double base_mean(const BaseDistribution& d) {
    return std::visit(
        [](const auto& base) -> double {
            using T = std::decay_t<decltype(base)>;
            if constexpr (std::is_same_v<T, UniformBase>) {
                return 0.5 * (base.lo + base.hi);
            } else if constexpr (std::is_same_v<T, TwoPointBase>) {
                return base.p * base.x1 + (1.0 - base.p) * base.x2;
            } else {
                return base.mean;
            }
        },
        d);
}

double base_variance(const BaseDistribution& d) {
    return std::visit(
        [](const auto& base) -> double {
            using T = std::decay_t<decltype(base)>;
            if constexpr (std::is_same_v<T, UniformBase>) {
                const double w = base.hi - base.lo;
                return w * w / 12.0;
            } else if constexpr (std::is_same_v<T, TwoPointBase>) {
                const double d12 = base.x1 - base.x2;
                return base.p * (1.0 - base.p) * d12 * d12;
            } else {
                return base.sd * base.sd;
            }
        },
        d);
}

double sample_base(const BaseDistribution& d, SplitMix64& rng) {
    return std::visit(
        [&rng](const auto& base) -> double {
            using T = std::decay_t<decltype(base)>;
            if constexpr (std::is_same_v<T, UniformBase>) {
                return base.lo + (base.hi - base.lo) * rng.next_unit();
            } else if constexpr (std::is_same_v<T, TwoPointBase>) {
                return rng.next_unit() < base.p ? base.x1 : base.x2;
            } else {
                const double u1 = rng.next_unit();
                const double u2 = rng.next_unit();
                const double r = std::sqrt(-2.0 * std::log1p(-u1));
                const double z = r * std::cos(2.0 * std::numbers::pi * u2);
                return base.mean + base.sd * z;
            }
        },
        d);
}

void validate_spread(const SpreadFamily& d) {
    if (!(d.scale >= 0.0)) {
        throw InvalidParameters("spread scale must be nonnegative");
    }
    std::visit(
        [](const auto& base) {
            using T = std::decay_t<decltype(base)>;
            if constexpr (std::is_same_v<T, UniformBase>) {
                if (!(base.lo < base.hi)) {
                    throw InvalidParameters("uniform distribution requires lo < hi");
                }
            } else if constexpr (std::is_same_v<T, TwoPointBase>) {
                if (!(base.p >= 0.0 && base.p <= 1.0)) {
                    throw InvalidParameters(
                        "two-point probability must be in [0, 1]");
                }
            } else {
                if (!(base.sd >= 0.0)) {
                    throw InvalidParameters(
                        "normal standard deviation must be nonnegative");
                }
            }
        },
        d.base);
}

namespace {

double spread_value(double mean, double base_draw, double scale) {
    return mean + scale * (base_draw - mean);
}

}  // namespace

double jensen_gap(const PayoffFunction& f, const SpreadFamily& d,
                  std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidParameters("trials must be at least 1");
    }
    validate_payoff(f);
    validate_spread(d);

    const double mean = base_mean(d.base);
    if (std::holds_alternative<AffinePayoff>(f)) {
        return 0.0;
    }
    if (std::holds_alternative<QuadraticPayoff>(f)) {
        return d.scale * d.scale * base_variance(d.base);
    }

    double sum = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t), 0));
        const double x = sample_base(d.base, rng);
        sum += payoff_value(f, spread_value(mean, x, d.scale));
    }
    return sum / static_cast<double>(trials) - payoff_value(f, mean);
}

std::vector<CurvePoint> spread_curve(const PayoffFunction& f,
                                     const SpreadFamily& d,
                                     const std::vector<double>& scales,
                                     std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidParameters("trials must be at least 1");
    }
    if (scales.empty()) {
        throw InvalidParameters("at least one scale is required");
    }
    for (double scale : scales) {
        if (!(scale >= 0.0)) {
            throw InvalidParameters("scales must be nonnegative");
        }
    }
    validate_payoff(f);
    validate_spread(d);

    const double mean = base_mean(d.base);
    std::vector<CurvePoint> curve;
    curve.reserve(scales.size());

    if (std::holds_alternative<AffinePayoff>(f) ||
        std::holds_alternative<QuadraticPayoff>(f)) {
        const bool quadratic = std::holds_alternative<QuadraticPayoff>(f);
        const double variance = base_variance(d.base);
        for (double scale : scales) {
            const double value = quadratic
                                     ? mean * mean + scale * scale * variance
                                     : payoff_value(f, mean);
            curve.push_back({scale, value, 0.0});
        }
        return curve;
    }

    std::vector<double> sums(scales.size(), 0.0);
    std::vector<double> sq_sums(scales.size(), 0.0);
    for (std::int64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t), 0));
        const double x = sample_base(d.base, rng);
        for (std::size_t i = 0; i < scales.size(); ++i) {
            const double v =
                payoff_value(f, spread_value(mean, x, scales[i]));
            sums[i] += v;
            sq_sums[i] += v * v;
        }
    }
    const auto n = static_cast<double>(trials);
    for (std::size_t i = 0; i < scales.size(); ++i) {
        const double avg = sums[i] / n;
        const double variance = std::max(0.0, sq_sums[i] / n - avg * avg);
        curve.push_back({scales[i], avg, std::sqrt(variance / n)});
    }
    return curve;
}

PortfolioResult portfolio_simulate(const OptionPortfolio& pf,
                                   std::int64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidParameters("trials must be at least 1");
    }
    if (pf.bets < 1) {
        throw InvalidParameters("portfolio requires at least one bet");
    }
    if (!(pf.trial_cost >= 0.0) || !(pf.jackpot_value >= 0.0)) {
        throw InvalidParameters("bet cost and jackpot value must be nonnegative");
    }
    if (!(pf.jackpot_probability >= 0.0 && pf.jackpot_probability <= 1.0)) {
        throw InvalidParameters("jackpot probability must be in [0, 1]");
    }

    PortfolioResult result;
    result.payoffs.reserve(static_cast<std::size_t>(trials));
    const double stake = static_cast<double>(pf.bets) * pf.trial_cost;
    std::int64_t captures = 0;
    double payoff_sum = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t), 0));
        std::int64_t jackpots = 0;
        for (std::int64_t b = 0; b < pf.bets; ++b) {
            if (rng.next_unit() < pf.jackpot_probability) {
                ++jackpots;
            }
        }
        const double payoff =
            static_cast<double>(jackpots) * pf.jackpot_value - stake;
        result.payoffs.push_back(payoff);
        payoff_sum += payoff;
        if (jackpots > 0) {
            ++captures;
        }
    }
    result.capture_probability =
        static_cast<double>(captures) / static_cast<double>(trials);
    result.analytic_capture_probability =
        1.0 - std::pow(1.0 - pf.jackpot_probability,
                       static_cast<double>(pf.bets));
    result.mean_payoff = payoff_sum / static_cast<double>(trials);
    result.analytic_mean_payoff =
        static_cast<double>(pf.bets) *
        (pf.jackpot_probability * pf.jackpot_value - pf.trial_cost);
    return result;
}

VendorOptionResult vendor_option_value(
    const std::vector<SpreadFamily>& price_models, std::int64_t trials,
    std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidParameters("trials must be at least 1");
    }
    if (price_models.empty()) {
        throw InvalidParameters("at least one vendor price model is required");
    }
    for (const auto& model : price_models) {
        validate_spread(model);
    }

    const std::size_t nv = price_models.size();
    std::vector<double> means(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        means[v] = base_mean(price_models[v].base);
    }

    VendorOptionResult result;
    result.per_vendor_expected.assign(nv, 0.0);
    double min_sum = 0.0;
    double min_sq_sum = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        double lowest = 0.0;
        for (std::size_t v = 0; v < nv; ++v) {
            SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(t),
                                         static_cast<std::uint64_t>(v)));
            const double price =
                spread_value(means[v], sample_base(price_models[v].base, rng),
                             price_models[v].scale);
            result.per_vendor_expected[v] += price;
            lowest = v == 0 ? price : std::min(lowest, price);
        }
        min_sum += lowest;
        min_sq_sum += lowest * lowest;
    }
    const auto n = static_cast<double>(trials);
    result.expected_min = min_sum / n;
    const double variance =
        std::max(0.0, min_sq_sum / n - result.expected_min * result.expected_min);
    result.expected_min_stderr = std::sqrt(variance / n);
    for (double& v : result.per_vendor_expected) {
        v /= n;
    }
    result.savings_vs_best_single =
        *std::min_element(result.per_vendor_expected.begin(),
                          result.per_vendor_expected.end()) -
        result.expected_min;
    return result;
}

namespace {

using jsonutil::json;

PayoffFunction parse_payoff(const json& j, const std::string& where) {
    jsonutil::expect_object(j, where);
    const std::string kind = jsonutil::get_string(
        jsonutil::require(j, "kind", where), where + ".kind");
    if (kind == "affine") {
        jsonutil::check_keys(j, where, {"kind", "slope", "intercept"});
        AffinePayoff f;
        f.slope = jsonutil::get_number(jsonutil::require(j, "slope", where),
                                       where + ".slope");
        f.intercept = jsonutil::get_number(
            jsonutil::require(j, "intercept", where), where + ".intercept");
        return f;
    }
    if (kind == "quadratic") {
        jsonutil::check_keys(j, where, {"kind"});
        return QuadraticPayoff{};
    }
    if (kind == "hinge") {
        jsonutil::check_keys(j, where, {"kind", "strike"});
        HingePayoff f;
        f.strike = jsonutil::get_number(jsonutil::require(j, "strike", where),
                                        where + ".strike");
        return f;
    }
    if (kind == "table") {
        jsonutil::check_keys(j, where, {"kind", "points"});
        const json& points = jsonutil::require(j, "points", where);
        jsonutil::expect_array(points, where + ".points");
        TablePayoff f;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::string pw = where + ".points[" + std::to_string(i) + "]";
            const json& pt = points[i];
            if (!pt.is_array() || pt.size() != 2) {
                throw ParseError(pw + ": expected an [x, y] pair");
            }
            f.points.emplace_back(jsonutil::get_number(pt[0], pw + "[0]"),
                                  jsonutil::get_number(pt[1], pw + "[1]"));
        }
        return f;
    }
    throw ParseError(where + ".kind: expected affine, quadratic, hinge or table");
}

SpreadFamily parse_spread(const json& j, const std::string& where) {
    jsonutil::expect_object(j, where);
    jsonutil::check_keys(j, where, {"base", "scale"});
    const json& base = jsonutil::require(j, "base", where);
    jsonutil::expect_object(base, where + ".base");
    const std::string kind = jsonutil::get_string(
        jsonutil::require(base, "kind", where + ".base"), where + ".base.kind");

    SpreadFamily family;
    if (kind == "uniform") {
        jsonutil::check_keys(base, where + ".base", {"kind", "lo", "hi"});
        UniformBase b;
        b.lo = jsonutil::get_number(jsonutil::require(base, "lo", where),
                                    where + ".base.lo");
        b.hi = jsonutil::get_number(jsonutil::require(base, "hi", where),
                                    where + ".base.hi");
        family.base = b;
    } else if (kind == "two_point") {
        jsonutil::check_keys(base, where + ".base", {"kind", "x1", "x2", "p"});
        TwoPointBase b;
        b.x1 = jsonutil::get_number(jsonutil::require(base, "x1", where),
                                    where + ".base.x1");
        b.x2 = jsonutil::get_number(jsonutil::require(base, "x2", where),
                                    where + ".base.x2");
        b.p = jsonutil::get_number(jsonutil::require(base, "p", where),
                                   where + ".base.p");
        family.base = b;
    } else if (kind == "normal") {
        jsonutil::check_keys(base, where + ".base", {"kind", "mean", "sd"});
        NormalBase b;
        b.mean = jsonutil::get_number(jsonutil::require(base, "mean", where),
                                      where + ".base.mean");
        b.sd = jsonutil::get_number(jsonutil::require(base, "sd", where),
                                    where + ".base.sd");
        family.base = b;
    } else {
        throw ParseError(where + ".base.kind: expected uniform, two_point or normal");
    }
    if (auto it = j.find("scale"); it != j.end()) {
        family.scale = jsonutil::get_number(*it, where + ".scale");
    }
    return family;
}

OptionPortfolio parse_portfolio(const json& j, const std::string& where) {
    jsonutil::expect_object(j, where);
    jsonutil::check_keys(j, where,
                         {"bets", "trial_cost", "jackpot_probability",
                          "jackpot_value"});
    OptionPortfolio pf;
    pf.bets = jsonutil::get_integer(jsonutil::require(j, "bets", where),
                                    where + ".bets");
    pf.trial_cost = jsonutil::get_number(
        jsonutil::require(j, "trial_cost", where), where + ".trial_cost");
    pf.jackpot_probability = jsonutil::get_number(
        jsonutil::require(j, "jackpot_probability", where),
        where + ".jackpot_probability");
    pf.jackpot_value = jsonutil::get_number(
        jsonutil::require(j, "jackpot_value", where), where + ".jackpot_value");
    return pf;
}

}  // namespace

PayoffStudy load_study(const std::string& text) {
    json root = jsonutil::parse_text(text);
    jsonutil::expect_object(root, "study");
    jsonutil::check_keys(root, "study", {"description", "payoff"});

    PayoffStudy study;
    if (auto it = root.find("description"); it != root.end()) {
        study.description = jsonutil::get_string(*it, "description");
    }

    const json& payoff = jsonutil::require(root, "payoff", "study");
    jsonutil::expect_object(payoff, "payoff");
    jsonutil::check_keys(payoff, "payoff",
                         {"analysis", "payoff_function", "distribution",
                          "scales", "portfolio", "vendors"});

    const std::string analysis = jsonutil::get_string(
        jsonutil::require(payoff, "analysis", "payoff"), "payoff.analysis");
    const bool needs_function =
        analysis == "jensen" || analysis == "spread_curve";
    if (analysis == "jensen") {
        study.analysis = PayoffAnalysis::JensenGap;
    } else if (analysis == "spread_curve") {
        study.analysis = PayoffAnalysis::SpreadCurve;
    } else if (analysis == "portfolio") {
        study.analysis = PayoffAnalysis::Portfolio;
    } else if (analysis == "vendor_option") {
        study.analysis = PayoffAnalysis::VendorOption;
    } else {
        throw ParseError(
            "payoff.analysis: expected jensen, spread_curve, portfolio or vendor_option");
    }

    if (needs_function) {
        study.payoff = parse_payoff(
            jsonutil::require(payoff, "payoff_function", "payoff"),
            "payoff.payoff_function");
        study.distribution =
            parse_spread(jsonutil::require(payoff, "distribution", "payoff"),
                         "payoff.distribution");
    }
    if (study.analysis == PayoffAnalysis::SpreadCurve) {
        const json& scales = jsonutil::require(payoff, "scales", "payoff");
        jsonutil::expect_array(scales, "payoff.scales");
        for (std::size_t i = 0; i < scales.size(); ++i) {
            study.scales.push_back(jsonutil::get_number(
                scales[i], "payoff.scales[" + std::to_string(i) + "]"));
        }
    }
    if (study.analysis == PayoffAnalysis::Portfolio) {
        study.portfolio =
            parse_portfolio(jsonutil::require(payoff, "portfolio", "payoff"),
                            "payoff.portfolio");
    }
    if (study.analysis == PayoffAnalysis::VendorOption) {
        const json& vendors = jsonutil::require(payoff, "vendors", "payoff");
        jsonutil::expect_array(vendors, "payoff.vendors");
        for (std::size_t i = 0; i < vendors.size(); ++i) {
            study.vendors.push_back(parse_spread(
                vendors[i], "payoff.vendors[" + std::to_string(i) + "]"));
        }
    }

    try {
        if (study.payoff) {
            validate_payoff(*study.payoff);
        }
        if (study.distribution) {
            validate_spread(*study.distribution);
        }
        for (const auto& vendor : study.vendors) {
            validate_spread(vendor);
        }
    } catch (const InvalidParameters& e) {
        throw ValidationError(e.what());
    }
    return study;
}

}  // namespace multivend
