#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multivend/csv.hpp"
#include "multivend/disruption.hpp"
#include "multivend/errors.hpp"
#include "multivend/optionality.hpp"
#include "multivend/scenario.hpp"
#include "multivend/serialize.hpp"
#include "multivend/solver.hpp"
#include "multivend/sweep.hpp"
#include "multivend/version.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    std::string format;  // "json" or "csv"; per-command default when empty
    std::uint64_t seed = 0;
    std::int64_t trials = 10000;
    int periods = 1;
    int min_subset_size = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw multivend::IoError("cannot open \"" + path + "\" for reading");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    if (stream.bad()) {
        throw multivend::IoError("failed reading \"" + path + "\"");
    }
    return buffer.str();
}

// Reports go to --output when given, to standard output otherwise.
void write_report(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw multivend::IoError("cannot open \"" + path + "\" for writing");
    }
    stream.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!stream) {
        throw multivend::IoError("failed writing \"" + path + "\"");
    }
}

json config_json(const RunConfig& cfg) {
    json out;
    out["command"] = cfg.command;
    out["input"] = cfg.input;
    out["seed"] = cfg.seed;
    out["trials"] = cfg.trials;
    out["periods"] = cfg.periods;
    out["min_subset_size"] = cfg.min_subset_size;
    out["version"] = multivend::kVersion;
    return out;
}

std::string dump_report(json report, const RunConfig& cfg) {
    report["config"] = config_json(cfg);
    return report.dump(2) + "\n";
}

// The chosen output format, after per-command defaulting. Commands that
// render only one format reject the other instead of ignoring the flag.
std::string pick_format(const RunConfig& cfg, const std::string& fallback,
                        bool json_ok, bool csv_ok) {
    const std::string format = cfg.format.empty() ? fallback : cfg.format;
    if ((format == "json" && !json_ok) || (format == "csv" && !csv_ok)) {
        throw multivend::InvalidParameters(
            "format \"" + format + "\" is not available for " + cfg.command);
    }
    return format;
}

int run_validate(const RunConfig& cfg) {
    multivend::Scenario scenario;
    try {
        scenario = multivend::load_scenario(read_file(cfg.input));
    } catch (const multivend::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

int run_solve(const RunConfig& cfg) {
    pick_format(cfg, "json", true, false);
    const auto scenario = multivend::load_scenario(read_file(cfg.input));
    const auto plan = multivend::solve_scenario(scenario);

    if (plan.status == multivend::PlanStatus::Optimal) {
        const auto violations = multivend::audit_plan(scenario, plan);
        if (!violations.empty()) {
            std::cerr << "plan audit failed:\n";
            for (const auto& v : violations) {
                std::cerr << "  - " << v << "\n";
            }
            return 3;
        }
    }

    write_report(dump_report(multivend::plan_to_json(scenario, plan), cfg),
                 cfg.output);
    return plan.status == multivend::PlanStatus::Optimal ? 0 : 2;
}

int run_sweep(const RunConfig& cfg) {
    const std::string format = pick_format(cfg, "csv", true, true);
    const auto scenario = multivend::load_scenario(read_file(cfg.input));
    const auto result = multivend::sweep_subsets(scenario, cfg.min_subset_size);

    if (format == "csv") {
        const auto table = multivend::sweep_table(result);
        write_report(multivend::render_csv(table.header, table.rows),
                     cfg.output);
    } else {
        write_report(dump_report(multivend::sweep_to_json(result), cfg),
                     cfg.output);
    }
    return 0;
}

// The per-trial cost column lands next to the summary, with the summary's
// extension swapped for .costs.csv (report.json -> report.costs.csv).
std::string costs_path(const std::string& output) {
    std::filesystem::path path(output);
    path.replace_extension();
    path += ".costs.csv";
    return path.string();
}

int run_simulate(const RunConfig& cfg) {
    pick_format(cfg, "json", true, false);
    if (cfg.output.empty()) {
        throw multivend::InvalidParameters(
            "simulate writes two files and requires --output");
    }
    const auto scenario = multivend::load_scenario(read_file(cfg.input));
    if (!scenario.disruption) {
        throw multivend::ValidationError(
            "scenario has no disruption section; simulate needs one");
    }

    const auto costs =
        multivend::simulate_horizon(scenario, *scenario.disruption,
                                    cfg.periods, static_cast<int>(cfg.trials),
                                    cfg.seed);
    const auto summary = multivend::summarize_risk(costs);

    write_report(dump_report(multivend::risk_summary_to_json(summary), cfg),
                 cfg.output);
    const auto table = multivend::costs_table(costs);
    multivend::emit_csv(table.header, table.rows, costs_path(cfg.output));
    return 0;
}

// Inline payoff flags; only set values are used, so a study file and the
// inline form cannot be mixed.
struct PayoffFlags {
    std::string analysis;
    std::string payoff_kind;
    double slope = 1.0;
    double intercept = 0.0;
    double strike = 0.0;
    std::string base_kind;
    double lo = 0.0;
    double hi = 1.0;
    double x1 = 0.0;
    double x2 = 1.0;
    double prob = 0.5;
    double mean = 0.0;
    double sd = 1.0;
    double scale = 1.0;
    std::vector<double> scales;
    std::int64_t bets = 1;
    double trial_cost = 0.0;
    double jackpot_probability = 0.0;
    double jackpot_value = 0.0;
    int vendors = 0;
};

multivend::PayoffFunction payoff_from_flags(const PayoffFlags& flags) {
    if (flags.payoff_kind == "affine") {
        return multivend::AffinePayoff{flags.slope, flags.intercept};
    }
    if (flags.payoff_kind == "quadratic") {
        return multivend::QuadraticPayoff{};
    }
    if (flags.payoff_kind == "hinge") {
        return multivend::HingePayoff{flags.strike};
    }
    throw multivend::InvalidParameters(
        "--payoff must be affine, quadratic or hinge (tables need a study file)");
}

multivend::SpreadFamily spread_from_flags(const PayoffFlags& flags) {
    multivend::SpreadFamily family;
    if (flags.base_kind == "uniform") {
        family.base = multivend::UniformBase{flags.lo, flags.hi};
    } else if (flags.base_kind == "two_point") {
        family.base = multivend::TwoPointBase{flags.x1, flags.x2, flags.prob};
    } else if (flags.base_kind == "normal") {
        family.base = multivend::NormalBase{flags.mean, flags.sd};
    } else {
        throw multivend::InvalidParameters(
            "--base must be uniform, two_point or normal");
    }
    family.scale = flags.scale;
    return family;
}

multivend::PayoffStudy study_from_flags(const PayoffFlags& flags) {
    multivend::PayoffStudy study;
    if (flags.analysis == "jensen") {
        study.analysis = multivend::PayoffAnalysis::JensenGap;
    } else if (flags.analysis == "spread_curve") {
        study.analysis = multivend::PayoffAnalysis::SpreadCurve;
    } else if (flags.analysis == "portfolio") {
        study.analysis = multivend::PayoffAnalysis::Portfolio;
    } else if (flags.analysis == "vendor_option") {
        study.analysis = multivend::PayoffAnalysis::VendorOption;
    } else {
        throw multivend::InvalidParameters(
            "--analysis must be jensen, spread_curve, portfolio or vendor_option");
    }

    switch (study.analysis) {
        case multivend::PayoffAnalysis::JensenGap:
            study.payoff = payoff_from_flags(flags);
            study.distribution = spread_from_flags(flags);
            break;
        case multivend::PayoffAnalysis::SpreadCurve:
            study.payoff = payoff_from_flags(flags);
            study.distribution = spread_from_flags(flags);
            study.scales = flags.scales;
            break;
        case multivend::PayoffAnalysis::Portfolio:
            study.portfolio =
                multivend::OptionPortfolio{flags.bets, flags.trial_cost,
                                           flags.jackpot_probability,
                                           flags.jackpot_value};
            break;
        case multivend::PayoffAnalysis::VendorOption: {
            if (flags.vendors < 1) {
                throw multivend::InvalidParameters(
                    "--vendors must be at least 1");
            }
            // Inline vendors are interchangeable: N copies of one model.
            const auto model = spread_from_flags(flags);
            study.vendors.assign(static_cast<std::size_t>(flags.vendors),
                                 model);
            break;
        }
    }
    return study;
}

int run_payoff(const RunConfig& cfg, const PayoffFlags& flags) {
    multivend::PayoffStudy study;
    if (!cfg.input.empty()) {
        study = multivend::load_study(read_file(cfg.input));
    } else {
        study = study_from_flags(flags);
    }

    switch (study.analysis) {
        case multivend::PayoffAnalysis::JensenGap: {
            pick_format(cfg, "json", true, false);
            const double gap = multivend::jensen_gap(
                *study.payoff, *study.distribution, cfg.trials, cfg.seed);
            json report;
            report["analysis"] = "jensen";
            report["gap"] = gap;
            write_report(dump_report(std::move(report), cfg), cfg.output);
            return 0;
        }
        case multivend::PayoffAnalysis::SpreadCurve: {
            const std::string format = pick_format(cfg, "csv", true, true);
            const auto curve = multivend::spread_curve(
                *study.payoff, *study.distribution, study.scales, cfg.trials,
                cfg.seed);
            if (format == "csv") {
                const auto table = multivend::curve_table(curve);
                write_report(multivend::render_csv(table.header, table.rows),
                             cfg.output);
            } else {
                json report = multivend::curve_to_json(curve);
                report["analysis"] = "spread_curve";
                write_report(dump_report(std::move(report), cfg), cfg.output);
            }
            return 0;
        }
        case multivend::PayoffAnalysis::Portfolio: {
            pick_format(cfg, "json", true, false);
            const auto result = multivend::portfolio_simulate(
                *study.portfolio, cfg.trials, cfg.seed);
            json report = multivend::portfolio_to_json(result);
            report["analysis"] = "portfolio";
            write_report(dump_report(std::move(report), cfg), cfg.output);
            return 0;
        }
        case multivend::PayoffAnalysis::VendorOption: {
            pick_format(cfg, "json", true, false);
            const auto result = multivend::vendor_option_value(
                study.vendors, cfg.trials, cfg.seed);
            json report = multivend::vendor_option_to_json(result);
            report["analysis"] = "vendor_option";
            write_report(dump_report(std::move(report), cfg), cfg.output);
            return 0;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    PayoffFlags flags;

    CLI::App app{
        "Multi-vendor procurement optimizer and disruption/optionality "
        "risk simulator"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub, bool input_required) {
        auto* input = sub->add_option("--input", cfg.input, "Input file");
        if (input_required) {
            input->required();
        }
        sub->add_option("--output", cfg.output,
                        "Report file (standard output when omitted)");
        sub->add_option("--format", cfg.format, "Report format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", cfg.seed, "Master random seed");
        sub->add_option("--trials", cfg.trials, "Monte Carlo trials")
            ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));
        sub->add_option("--periods", cfg.periods, "Simulated periods")
            ->check(CLI::PositiveNumber);
        sub->add_option("--min-subset-size", cfg.min_subset_size,
                        "Smallest supplier subset swept")
            ->check(CLI::PositiveNumber);
    };

    add_common(app.add_subcommand("validate",
                                  "Check a scenario file, list violations"),
               true);
    add_common(app.add_subcommand(
                   "solve", "Minimum-cost shipment plan (JSON report)"),
               true);
    add_common(app.add_subcommand(
                   "sweep", "Cost of every supplier subset (CSV by default)"),
               true);
    add_common(app.add_subcommand("simulate",
                                  "Disruption Monte Carlo: risk summary JSON "
                                  "plus per-trial costs CSV"),
               true);

    auto* payoff = app.add_subcommand(
        "payoff", "Convex-payoff studies (file or inline flags)");
    add_common(payoff, false);
    payoff->add_option("--analysis", flags.analysis,
                       "jensen | spread_curve | portfolio | vendor_option");
    payoff->add_option("--payoff", flags.payoff_kind,
                       "affine | quadratic | hinge");
    payoff->add_option("--slope", flags.slope, "Affine slope");
    payoff->add_option("--intercept", flags.intercept, "Affine intercept");
    payoff->add_option("--strike", flags.strike, "Hinge strike");
    payoff->add_option("--base", flags.base_kind,
                       "uniform | two_point | normal");
    payoff->add_option("--lo", flags.lo, "Uniform lower bound");
    payoff->add_option("--hi", flags.hi, "Uniform upper bound");
    payoff->add_option("--x1", flags.x1, "Two-point low value");
    payoff->add_option("--x2", flags.x2, "Two-point high value");
    payoff->add_option("--prob", flags.prob, "Two-point probability of x1");
    payoff->add_option("--mean", flags.mean, "Normal mean");
    payoff->add_option("--sd", flags.sd, "Normal standard deviation");
    payoff->add_option("--scale", flags.scale, "Spread scale");
    payoff->add_option("--scales", flags.scales,
                       "Spread-curve scales, comma separated")
        ->delimiter(',');
    payoff->add_option("--bets", flags.bets, "Portfolio bet count");
    payoff->add_option("--trial-cost", flags.trial_cost, "Cost per bet");
    payoff->add_option("--jackpot-probability", flags.jackpot_probability,
                       "Per-bet jackpot probability");
    payoff->add_option("--jackpot-value", flags.jackpot_value,
                       "Jackpot payout");
    payoff->add_option("--vendors", flags.vendors,
                       "Vendor count (interchangeable price models)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (cfg.command == "payoff" && cfg.input.empty() &&
        flags.analysis.empty()) {
        std::cerr << "error: payoff needs --input or --analysis\n";
        return 1;
    }

    try {
        if (cfg.command == "validate") {
            return run_validate(cfg);
        }
        if (cfg.command == "solve") {
            return run_solve(cfg);
        }
        if (cfg.command == "sweep") {
            return run_sweep(cfg);
        }
        if (cfg.command == "simulate") {
            return run_simulate(cfg);
        }
        return run_payoff(cfg, flags);
    } catch (const multivend::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
