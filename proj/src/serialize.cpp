#include "multivend/serialize.hpp"

namespace multivend {

using nlohmann::json;

const char* status_name(PlanStatus status) {
    return status == PlanStatus::Optimal ? "OPTIMAL" : "INFEASIBLE";
}

json plan_to_json(const Scenario& s, const ShipmentPlan& plan) {
    json out;
    out["status"] = status_name(plan.status);
    if (plan.status == PlanStatus::Optimal) {
        out["z"] = plan.objective;
        json shipments = json::array();
        for (std::size_t si = 0; si < s.supplier_count(); ++si) {
            for (std::size_t k = 0; k < s.item_count(); ++k) {
                for (std::size_t d = 0; d < s.demand_count(); ++d) {
                    const std::int64_t units = plan.shipment(si, k, d);
                    if (units <= 0) {
                        continue;
                    }
                    shipments.push_back({{"supplier", s.suppliers[si].name},
                                         {"item", s.items[k]},
                                         {"demand", s.demands[d].name},
                                         {"units", units}});
                }
            }
        }
        out["shipments"] = std::move(shipments);
    }
    return out;
}

CsvTable plan_table(const Scenario& s, const ShipmentPlan& plan) {
    CsvTable t;
    t.header = {"supplier", "item", "demand", "units"};
    if (plan.status != PlanStatus::Optimal) {
        return t;
    }
    for (std::size_t si = 0; si < s.supplier_count(); ++si) {
        for (std::size_t k = 0; k < s.item_count(); ++k) {
            for (std::size_t d = 0; d < s.demand_count(); ++d) {
                const std::int64_t units = plan.shipment(si, k, d);
                if (units <= 0) {
                    continue;
                }
                t.rows.push_back({s.suppliers[si].name, s.items[k],
                                  s.demands[d].name, units});
            }
        }
    }
    return t;
}

namespace {

std::string joined_subset(const SweepEntry& entry) {
    std::string names;
    for (std::size_t i = 0; i < entry.subset.size(); ++i) {
        if (i > 0) {
            names += ',';
        }
        names += entry.subset[i];
    }
    return names;
}

}  // namespace

json sweep_to_json(const SweepResult& r) {
    json out;
    out["baseline"]["status"] = status_name(r.baseline_status);
    if (r.baseline_status == PlanStatus::Optimal) {
        out["baseline"]["z"] = r.baseline_objective;
    }
    json entries = json::array();
    for (const auto& entry : r.entries) {
        json e;
        e["subset"] = entry.subset;
        e["size"] = entry.subset.size();
        e["status"] = status_name(entry.status);
        if (entry.status == PlanStatus::Optimal) {
            e["z"] = entry.objective;
        }
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out;
}

CsvTable sweep_table(const SweepResult& r) {
    CsvTable t;
    t.header = {"subset", "size", "status", "z"};
    for (const auto& entry : r.entries) {
        std::vector<CsvValue> row;
        row.emplace_back(joined_subset(entry));
        row.emplace_back(static_cast<std::int64_t>(entry.subset.size()));
        row.emplace_back(std::string(status_name(entry.status)));
        if (entry.status == PlanStatus::Optimal) {
            row.emplace_back(entry.objective);
        } else {
            row.emplace_back(std::string());
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

json risk_summary_to_json(const RiskSummary& r) {
    json out;
    out["trials"] = r.trials;
    out["mean"] = r.mean;
    out["stddev"] = r.stddev;
    out["q50"] = r.q50;
    out["q90"] = r.q90;
    out["q99"] = r.q99;
    out["tail_mean_q99"] = r.tail_mean_q99;
    out["infeasible_period_fraction"] = r.infeasible_period_fraction;
    return out;
}

CsvTable costs_table(const CostDistribution& costs) {
    CsvTable t;
    t.header = {"cost"};
    t.rows.reserve(costs.trial_costs.size());
    for (double c : costs.trial_costs) {
        t.rows.push_back({c});
    }
    return t;
}

CsvTable curve_table(const std::vector<CurvePoint>& curve) {
    CsvTable t;
    t.header = {"σ", "expected_payoff", "mc_stderr"};
    for (const auto& point : curve) {
        t.rows.push_back({point.scale, point.expected_payoff, point.mc_stderr});
    }
    return t;
}

json curve_to_json(const std::vector<CurvePoint>& curve) {
    json points = json::array();
    for (const auto& point : curve) {
        points.push_back({{"scale", point.scale},
                          {"expected_payoff", point.expected_payoff},
                          {"mc_stderr", point.mc_stderr}});
    }
    json out;
    out["points"] = std::move(points);
    return out;
}

json portfolio_to_json(const PortfolioResult& r) {
    json out;
    out["trials"] = r.payoffs.size();
    out["capture_probability"] = r.capture_probability;
    out["analytic_capture_probability"] = r.analytic_capture_probability;
    out["mean_payoff"] = r.mean_payoff;
    out["analytic_mean_payoff"] = r.analytic_mean_payoff;
    return out;
}

json vendor_option_to_json(const VendorOptionResult& r) {
    json out;
    out["expected_min"] = r.expected_min;
    out["expected_min_stderr"] = r.expected_min_stderr;
    out["per_vendor_expected"] = r.per_vendor_expected;
    out["savings_vs_best_single"] = r.savings_vs_best_single;
    return out;
}

}  // namespace multivend
