#include "multivend/flow_network.hpp"

#include "multivend/errors.hpp"

namespace multivend {

FlowNetwork build_flow_network(const Scenario& s) {
    auto violations = validate_scenario(s);
    if (!violations.empty()) {
        std::string message = "cannot build flow network from invalid scenario:";
        for (const auto& v : violations) {
            message += "\n  - " + v;
        }
        throw ValidationError(message);
    }

    const int ns = static_cast<int>(s.supplier_count());
    const int nk = static_cast<int>(s.item_count());
    const int nd = static_cast<int>(s.demand_count());

    FlowNetwork net;
    net.supplier_count = ns;
    net.item_count = nk;
    net.demand_count = nd;
    net.total_demand = s.total_demand();

    net.source = 0;
    net.nodes.push_back({NodeKind::Source, -1, -1, -1});
    const int supplier_base = 1;
    for (int i = 0; i < ns; ++i) {
        net.nodes.push_back({NodeKind::Supplier, i, -1, -1});
    }
    const int pair_base = supplier_base + ns;
    for (int i = 0; i < ns; ++i) {
        for (int k = 0; k < nk; ++k) {
            net.nodes.push_back({NodeKind::SupplierItem, i, k, -1});
        }
    }
    const int demand_base = pair_base + ns * nk;
    for (int j = 0; j < nd; ++j) {
        const int item = s.item_index(s.demands[j].item);
        net.nodes.push_back({NodeKind::Demand, -1, item, j});
    }
    net.sink = demand_base + nd;
    net.nodes.push_back({NodeKind::Sink, -1, -1, -1});

    for (int i = 0; i < ns; ++i) {
        net.arcs.push_back(
            {net.source, supplier_base + i, s.suppliers[i].capacity, 0.0});
    }
    for (int i = 0; i < ns; ++i) {
        for (int k = 0; k < nk; ++k) {
            const auto& cap = s.item_cap(k, i);
            net.arcs.push_back({supplier_base + i, pair_base + i * nk + k,
                                cap ? *cap : net.total_demand, 0.0});
        }
    }
    for (int i = 0; i < ns; ++i) {
        for (int k = 0; k < nk; ++k) {
            for (int j = 0; j < nd; ++j) {
                if (s.item_index(s.demands[j].item) != k) {
                    continue;
                }
                const auto& cost = s.cost(i, k, j);
                if (cost) {
                    net.arcs.push_back({pair_base + i * nk + k, demand_base + j,
                                        net.total_demand, *cost});
                }
            }
        }
    }
    for (int j = 0; j < nd; ++j) {
        net.arcs.push_back(
            {demand_base + j, net.sink, s.demands[j].quantity, 0.0});
    }

    return net;
}

}  // namespace multivend
