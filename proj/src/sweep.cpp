#include "multivend/sweep.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "multivend/errors.hpp"

namespace multivend {

SweepResult sweep_subsets(const Scenario& s, int min_size) {
    const int n = static_cast<int>(s.supplier_count());
    if (n > 16) {
        throw TooManySuppliers("subset sweep supports at most 16 suppliers, got " +
                               std::to_string(n));
    }
    if (min_size < 1 || min_size > n) {
        throw InvalidParameters("min_size must be between 1 and the supplier count (" +
                                std::to_string(n) + "), got " +
                                std::to_string(min_size));
    }

    SweepResult result;
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < min_size) {
            continue;
        }
        SweepEntry entry;
        entry.mask = mask;
        std::set<std::string> allowed;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                entry.subset.push_back(s.suppliers[static_cast<std::size_t>(i)].name);
                allowed.insert(entry.subset.back());
            }
        }
        const ShipmentPlan plan = solve_scenario(restrict_suppliers(s, allowed));
        entry.status = plan.status;
        entry.objective = plan.status == PlanStatus::Optimal ? plan.objective : 0.0;
        if (mask == full) {
            result.baseline_status = entry.status;
            result.baseline_objective = entry.objective;
        }
        result.entries.push_back(std::move(entry));
    }
    return result;
}

double marginal_value(const Scenario& s, const std::string& supplier) {
    const int idx = s.supplier_index(supplier);
    if (idx < 0) {
        throw UnknownSupplier("unknown supplier \"" + supplier + "\"");
    }
    const ShipmentPlan full = solve_scenario(s);
    if (full.status != PlanStatus::Optimal) {
        throw InvalidParameters("marginal value requires a feasible full instance");
    }
    std::set<std::string> rest;
    for (const auto& sup : s.suppliers) {
        if (sup.name != supplier) {
            rest.insert(sup.name);
        }
    }
    const ShipmentPlan without = solve_scenario(restrict_suppliers(s, rest));
    if (without.status != PlanStatus::Optimal) {
        return std::numeric_limits<double>::infinity();
    }
    return std::max(0.0, without.objective - full.objective);
}

}  // namespace multivend
