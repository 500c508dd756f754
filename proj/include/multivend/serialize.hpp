#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "multivend/csv.hpp"
#include "multivend/disruption.hpp"
#include "multivend/optionality.hpp"
#include "multivend/scenario.hpp"
#include "multivend/solver.hpp"
#include "multivend/sweep.hpp"

namespace multivend {

// A header plus rectangular rows, ready for render_csv / emit_csv.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<CsvValue>> rows;
};

const char* status_name(PlanStatus status);  // "OPTIMAL" / "INFEASIBLE"

// {status, z, shipments: [{supplier, item, demand, units}]} with only the
// active (units > 0) shipments listed, in canonical (s, k, d) order.
nlohmann::json plan_to_json(const Scenario& s, const ShipmentPlan& plan);

// Columns supplier, item, demand, units; active shipments only.
CsvTable plan_table(const Scenario& s, const ShipmentPlan& plan);

// {baseline: {status, z}, entries: [{subset, size, status, z}]}; z is
// omitted for infeasible entries.
nlohmann::json sweep_to_json(const SweepResult& r);

// Columns subset (comma-joined names), size, status, z; z is empty for
// infeasible entries.
CsvTable sweep_table(const SweepResult& r);

nlohmann::json risk_summary_to_json(const RiskSummary& r);

// Single column `cost`, one row per trial.
CsvTable costs_table(const CostDistribution& costs);

// Columns σ, expected_payoff, mc_stderr, one row per requested scale.
CsvTable curve_table(const std::vector<CurvePoint>& curve);

nlohmann::json curve_to_json(const std::vector<CurvePoint>& curve);
nlohmann::json portfolio_to_json(const PortfolioResult& r);
nlohmann::json vendor_option_to_json(const VendorOptionResult& r);

}  // namespace multivend
