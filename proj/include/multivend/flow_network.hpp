#pragma once

#include <cstdint>
#include <vector>

#include "multivend/scenario.hpp"

namespace multivend {

enum class NodeKind { Source, Supplier, SupplierItem, Demand, Sink };

struct FlowNode {
    NodeKind kind = NodeKind::Source;
    int supplier = -1;
    int item = -1;
    int demand = -1;
};

struct FlowArc {
    int tail = 0;
    int head = 0;
    std::int64_t capacity = 0;
    double unit_cost = 0.0;
};

// Layered DAG: source -> supplier -> (supplier, item) -> demand -> sink.
//
// Canonical order, relied on by the solver's tie-breaking and by the
// disruption simulation:
//   nodes: source, suppliers (scenario order), (supplier, item) pairs
//          (supplier-major), demand points (scenario order), sink.
//   arcs:  source->supplier arcs first, one per supplier in order; then
//          supplier->(supplier, item); then the cost arcs in (supplier,
//          item, demand) order, skipping unavailable cells; then
//          demand->sink.
struct FlowNetwork {
    std::vector<FlowNode> nodes;
    std::vector<FlowArc> arcs;
    int source = 0;
    int sink = 0;
    std::int64_t total_demand = 0;
    int supplier_count = 0;
    int item_count = 0;
    int demand_count = 0;
};

// Encodes a validated scenario: supply caps on source arcs, per-item caps
// on the middle layer (absent bound = total demand), shipment costs on the
// (supplier, item) -> demand arcs, demand quantities on the sink arcs.
// Throws ValidationError when the scenario has violations.
FlowNetwork build_flow_network(const Scenario& s);

}  // namespace multivend
