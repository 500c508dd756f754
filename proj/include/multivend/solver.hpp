#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multivend/flow_network.hpp"
#include "multivend/scenario.hpp"

namespace multivend {

enum class PlanStatus { Optimal, Infeasible };

// Optimal shipment assignment. `objective` is the total cost, recomputed
// from the shipments in (supplier, item, demand) order so that identical
// plans always carry bit-identical objectives.
struct ShipmentPlan {
    PlanStatus status = PlanStatus::Infeasible;
    double objective = 0.0;
    int supplier_count = 0;
    int item_count = 0;
    int demand_count = 0;
    std::vector<std::int64_t> shipments;  // (supplier, item, demand) tensor

    bool operator==(const ShipmentPlan&) const = default;

    std::int64_t shipment(std::size_t s, std::size_t k, std::size_t d) const {
        return shipments[(s * static_cast<std::size_t>(item_count) + k) *
                             static_cast<std::size_t>(demand_count) +
                         d];
    }
};

// Minimum-cost maximum flow via successive shortest augmenting paths with
// node potentials (Dijkstra; all unit costs are nonnegative). For every
// intermediate flow value the cost is minimal, so stopping at exhaustion
// yields the cheapest way to serve as much demand as possible.
struct FlowSolution {
    std::int64_t flow = 0;
    double cost = 0.0;
    std::vector<std::int64_t> arc_flow;
};

FlowSolution min_cost_max_flow(const FlowNetwork& net);

// Globally minimal-cost integral plan meeting every demand exactly, or
// status Infeasible when total servable flow falls short. Deterministic:
// equal-length shortest paths are broken by lowest node index.
ShipmentPlan solve_min_cost(const FlowNetwork& net);

// build_flow_network + solve_min_cost.
ShipmentPlan solve_scenario(const Scenario& s);

// Independent verification oracle: exhaustively enumerates all integral
// shipment tensors that satisfy the supply, demand, item-capacity and
// availability constraints and returns the cheapest. Guarded: throws
// InstanceTooLarge beyond 12 tensor cells or a demand quantity above 10.
ShipmentPlan oracle_min_cost(const Scenario& s);

// Checks every plan invariant against the scenario (supply caps, exact
// demand, nonnegativity, item caps, zero flow on unavailable cells, and
// the objective recomputation within 1e-9). Returns all violations.
std::vector<std::string> audit_plan(const Scenario& s, const ShipmentPlan& plan);

}  // namespace multivend
