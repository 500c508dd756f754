#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multivend/scenario.hpp"
#include "multivend/solver.hpp"

namespace multivend {

struct SweepEntry {
    std::uint32_t mask = 0;  // bit i set = supplier i included
    std::vector<std::string> subset;
    PlanStatus status = PlanStatus::Infeasible;
    double objective = 0.0;  // meaningful only when status is Optimal

    bool operator==(const SweepEntry&) const = default;
};

// Cost of every supplier subset. Restricting the vendor set can only keep
// or raise the optimal cost, and can tip the instance into infeasibility;
// infeasible subsets are recorded, not rejected.
struct SweepResult {
    std::vector<SweepEntry> entries;  // increasing bitmask order
    PlanStatus baseline_status = PlanStatus::Infeasible;
    double baseline_objective = 0.0;  // full supplier set
};

// Solves every supplier subset of size >= min_size, enumerated by
// increasing bitmask over the canonical supplier order. Guards: at most
// 16 suppliers (TooManySuppliers), 1 <= min_size <= supplier count
// (InvalidParameters).
SweepResult sweep_subsets(const Scenario& s, int min_size);

// z(all suppliers except `supplier`) - z(all suppliers); +infinity when
// removing the supplier makes the instance infeasible. Requires a feasible
// full instance.
double marginal_value(const Scenario& s, const std::string& supplier);

}  // namespace multivend
