#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace multivend {

// A vendor with an aggregate capacity across all items it supplies.
struct Supplier {
    std::string name;
    std::int64_t capacity = 0;

    bool operator==(const Supplier&) const = default;
};

// One requirement: `quantity` units of `item` at a named location.
struct DemandPoint {
    std::string name;
    std::string item;
    std::int64_t quantity = 0;

    bool operator==(const DemandPoint&) const = default;
};

// Severity distribution with density proportional to x^-exponent on
// [x_min, inf). Normalizable only for exponent > 1.
struct PowerLaw {
    double exponent = 2.0;
    double x_min = 1.0;

    bool operator==(const PowerLaw&) const = default;
};

// How a sampled severity maps onto a disrupted supplier's capacity.
// TotalLoss zeroes it; Proportional scales it by
// max(0, 1 - severity / severity_ref), floored to whole units.
enum class CapacityRule { TotalLoss, Proportional };

struct DisruptionModel {
    std::vector<double> disruption_probability;  // per supplier, per period
    PowerLaw severity;
    double shortage_penalty = 0.0;  // money per unmet demand unit per period
    CapacityRule capacity_rule = CapacityRule::TotalLoss;
    std::optional<double> severity_ref;  // required for Proportional

    bool operator==(const DisruptionModel&) const = default;
};

// A full problem instance. Immutable after construction by convention;
// every transformation returns a new value.
//
// costs is a dense (supplier, item, demand) tensor where an empty cell
// means the supplier cannot provide that item to that demand point.
// item_capacity is a dense (item, supplier) matrix where an empty cell
// means no per-item bound.
struct Scenario {
    std::vector<Supplier> suppliers;
    std::vector<std::string> items;
    std::vector<DemandPoint> demands;
    std::vector<std::optional<double>> costs;
    std::vector<std::optional<std::int64_t>> item_capacity;
    std::optional<DisruptionModel> disruption;

    bool operator==(const Scenario&) const = default;

    std::size_t supplier_count() const { return suppliers.size(); }
    std::size_t item_count() const { return items.size(); }
    std::size_t demand_count() const { return demands.size(); }

    std::size_t cost_index(std::size_t s, std::size_t k, std::size_t d) const {
        return (s * items.size() + k) * demands.size() + d;
    }

    const std::optional<double>& cost(std::size_t s, std::size_t k,
                                      std::size_t d) const {
        return costs[cost_index(s, k, d)];
    }

    const std::optional<std::int64_t>& item_cap(std::size_t k,
                                                std::size_t s) const {
        return item_capacity[k * suppliers.size() + s];
    }

    // Index of a supplier/item/demand by name, -1 when absent.
    int supplier_index(const std::string& name) const;
    int item_index(const std::string& name) const;
    int demand_index(const std::string& name) const;

    std::int64_t total_demand() const;

    // Allocates an all-unavailable cost tensor and an all-unbounded
    // capacity matrix matching the current supplier/item/demand lists.
    void resize_tensors();
};

// Parses and validates a scenario file. Throws ParseError for malformed
// input (strict: unknown keys are rejected) and ValidationError when the
// contents violate a Scenario invariant.
Scenario load_scenario(const std::string& text);

// Canonical JSON rendering; load_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

// Returns every violated invariant, empty when the scenario is valid.
std::vector<std::string> validate_scenario(const Scenario& s);

// New scenario containing exactly the named suppliers, original order,
// with cost and capacity tensors sliced to match. Throws UnknownSupplier
// for a name not present in `s`.
Scenario restrict_suppliers(const Scenario& s,
                            const std::set<std::string>& allowed);

}  // namespace multivend
