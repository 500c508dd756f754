#include "multivend/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "multivend/errors.hpp"

namespace multivend {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Residual graph: forward arc e lives at slot 2e, its reverse at 2e ^ 1.
struct Residual {
    std::vector<std::int64_t> capacity;
    std::vector<double> unit_cost;
    std::vector<int> to;
    std::vector<std::vector<int>> adjacency;

    explicit Residual(const FlowNetwork& net)
        : capacity(net.arcs.size() * 2),
          unit_cost(net.arcs.size() * 2),
          to(net.arcs.size() * 2),
          adjacency(net.nodes.size()) {
        for (std::size_t e = 0; e < net.arcs.size(); ++e) {
            const FlowArc& arc = net.arcs[e];
            capacity[2 * e] = arc.capacity;
            capacity[2 * e + 1] = 0;
            unit_cost[2 * e] = arc.unit_cost;
            unit_cost[2 * e + 1] = -arc.unit_cost;
            to[2 * e] = arc.head;
            to[2 * e + 1] = arc.tail;
            adjacency[static_cast<std::size_t>(arc.tail)].push_back(
                static_cast<int>(2 * e));
            adjacency[static_cast<std::size_t>(arc.head)].push_back(
                static_cast<int>(2 * e + 1));
        }
    }
};

}  // namespace

FlowSolution min_cost_max_flow(const FlowNetwork& net) {
    const std::size_t n = net.nodes.size();
    Residual res(net);

    std::vector<double> potential(n, 0.0);
    std::vector<double> dist(n);
    std::vector<int> parent_edge(n);
    std::vector<char> settled(n);

    FlowSolution sol;
    while (true) {
        dist.assign(n, kInf);
        parent_edge.assign(n, -1);
        settled.assign(n, 0);
        dist[static_cast<std::size_t>(net.source)] = 0.0;

        // Dijkstra on reduced costs; ties pop by lowest node index.
        std::priority_queue<std::pair<double, int>,
                            std::vector<std::pair<double, int>>,
                            std::greater<>>
            queue;
        queue.emplace(0.0, net.source);
        while (!queue.empty()) {
            auto [d, u] = queue.top();
            queue.pop();
            if (settled[static_cast<std::size_t>(u)]) {
                continue;
            }
            settled[static_cast<std::size_t>(u)] = 1;
            for (int e : res.adjacency[static_cast<std::size_t>(u)]) {
                if (res.capacity[static_cast<std::size_t>(e)] == 0) {
                    continue;
                }
                const int v = res.to[static_cast<std::size_t>(e)];
                const double candidate =
                    d + res.unit_cost[static_cast<std::size_t>(e)] +
                    potential[static_cast<std::size_t>(u)] -
                    potential[static_cast<std::size_t>(v)];
                if (candidate < dist[static_cast<std::size_t>(v)]) {
                    dist[static_cast<std::size_t>(v)] = candidate;
                    parent_edge[static_cast<std::size_t>(v)] = e;
                    queue.emplace(candidate, v);
                }
            }
        }

        if (dist[static_cast<std::size_t>(net.sink)] == kInf) {
            break;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (dist[v] < kInf) {
                potential[v] += dist[v];
            }
        }

        std::int64_t push = std::numeric_limits<std::int64_t>::max();
        for (int v = net.sink; v != net.source;) {
            const int e = parent_edge[static_cast<std::size_t>(v)];
            push = std::min(push, res.capacity[static_cast<std::size_t>(e)]);
            v = res.to[static_cast<std::size_t>(e ^ 1)];
        }
        for (int v = net.sink; v != net.source;) {
            const int e = parent_edge[static_cast<std::size_t>(v)];
            res.capacity[static_cast<std::size_t>(e)] -= push;
            res.capacity[static_cast<std::size_t>(e ^ 1)] += push;
            v = res.to[static_cast<std::size_t>(e ^ 1)];
        }
        sol.flow += push;
    }

    sol.arc_flow.resize(net.arcs.size());
    sol.cost = 0.0;
    for (std::size_t e = 0; e < net.arcs.size(); ++e) {
        sol.arc_flow[e] = res.capacity[2 * e + 1];
        sol.cost += static_cast<double>(sol.arc_flow[e]) * net.arcs[e].unit_cost;
    }
    return sol;
}

ShipmentPlan solve_min_cost(const FlowNetwork& net) {
    const FlowSolution sol = min_cost_max_flow(net);

    ShipmentPlan plan;
    plan.supplier_count = net.supplier_count;
    plan.item_count = net.item_count;
    plan.demand_count = net.demand_count;
    if (sol.flow < net.total_demand) {
        plan.status = PlanStatus::Infeasible;
        return plan;
    }

    plan.status = PlanStatus::Optimal;
    plan.shipments.assign(static_cast<std::size_t>(net.supplier_count) *
                              static_cast<std::size_t>(net.item_count) *
                              static_cast<std::size_t>(net.demand_count),
                          0);
    plan.objective = 0.0;
    // Cost arcs were laid down in (supplier, item, demand) order, so one
    // pass accumulates the objective in exactly that order.
    for (std::size_t e = 0; e < net.arcs.size(); ++e) {
        const FlowArc& arc = net.arcs[e];
        const FlowNode& tail = net.nodes[static_cast<std::size_t>(arc.tail)];
        const FlowNode& head = net.nodes[static_cast<std::size_t>(arc.head)];
        if (tail.kind != NodeKind::SupplierItem || head.kind != NodeKind::Demand) {
            continue;
        }
        const std::size_t idx =
            (static_cast<std::size_t>(tail.supplier) *
                 static_cast<std::size_t>(net.item_count) +
             static_cast<std::size_t>(tail.item)) *
                static_cast<std::size_t>(net.demand_count) +
            static_cast<std::size_t>(head.demand);
        plan.shipments[idx] = sol.arc_flow[e];
        plan.objective += static_cast<double>(sol.arc_flow[e]) * arc.unit_cost;
    }
    return plan;
}

ShipmentPlan solve_scenario(const Scenario& s) {
    return solve_min_cost(build_flow_network(s));
}

namespace {

struct OracleState {
    const Scenario* scenario = nullptr;
    std::vector<std::int64_t> remaining_supply;
    std::vector<std::int64_t> remaining_item_cap;  // (item, supplier)
    std::vector<std::int64_t> shipments;
    std::vector<std::int64_t> best_shipments;
    double current_cost = 0.0;
    double best_cost = kInf;
    bool found = false;

    void visit_demand(std::size_t j);
    void allocate(std::size_t j, const std::vector<std::size_t>& candidates,
                  std::size_t ci, std::int64_t remaining);
};

void OracleState::visit_demand(std::size_t j) {
    const Scenario& s = *scenario;
    if (j == s.demand_count()) {
        if (current_cost < best_cost) {
            best_cost = current_cost;
            best_shipments = shipments;
            found = true;
        }
        return;
    }
    const std::size_t k =
        static_cast<std::size_t>(s.item_index(s.demands[j].item));
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < s.supplier_count(); ++i) {
        if (s.cost(i, k, j)) {
            candidates.push_back(i);
        }
    }
    allocate(j, candidates, 0, s.demands[j].quantity);
}

void OracleState::allocate(std::size_t j,
                           const std::vector<std::size_t>& candidates,
                           std::size_t ci, std::int64_t remaining) {
    if (ci == candidates.size()) {
        if (remaining == 0) {
            visit_demand(j + 1);
        }
        return;
    }
    const Scenario& s = *scenario;
    const std::size_t i = candidates[ci];
    const std::size_t k =
        static_cast<std::size_t>(s.item_index(s.demands[j].item));
    const std::size_t cap_idx = k * s.supplier_count() + i;
    const double unit = *s.cost(i, k, j);
    const std::int64_t max_take = std::min(
        {remaining, remaining_supply[i], remaining_item_cap[cap_idx]});
    const std::size_t cell = s.cost_index(i, k, j);
    for (std::int64_t take = 0; take <= max_take; ++take) {
        remaining_supply[i] -= take;
        remaining_item_cap[cap_idx] -= take;
        shipments[cell] = take;
        current_cost += static_cast<double>(take) * unit;
        if (current_cost < best_cost) {
            allocate(j, candidates, ci + 1, remaining - take);
        }
        current_cost -= static_cast<double>(take) * unit;
        shipments[cell] = 0;
        remaining_item_cap[cap_idx] += take;
        remaining_supply[i] += take;
    }
}

}  // namespace

ShipmentPlan oracle_min_cost(const Scenario& s) {
    const std::size_t cells =
        s.supplier_count() * s.item_count() * s.demand_count();
    if (cells > 12) {
        throw InstanceTooLarge("oracle limit is 12 cost cells, instance has " +
                               std::to_string(cells));
    }
    for (const auto& d : s.demands) {
        if (d.quantity > 10) {
            throw InstanceTooLarge("oracle limit is demand quantity 10, \"" +
                                   d.name + "\" requires " +
                                   std::to_string(d.quantity));
        }
    }

    OracleState state;
    state.scenario = &s;
    state.remaining_supply.reserve(s.supplier_count());
    for (const auto& sup : s.suppliers) {
        state.remaining_supply.push_back(sup.capacity);
    }
    state.remaining_item_cap.assign(s.item_count() * s.supplier_count(), 0);
    for (std::size_t k = 0; k < s.item_count(); ++k) {
        for (std::size_t i = 0; i < s.supplier_count(); ++i) {
            const auto& cap = s.item_cap(k, i);
            state.remaining_item_cap[k * s.supplier_count() + i] =
                cap ? *cap : std::numeric_limits<std::int64_t>::max() / 2;
        }
    }
    state.shipments.assign(cells, 0);
    state.visit_demand(0);

    ShipmentPlan plan;
    plan.supplier_count = static_cast<int>(s.supplier_count());
    plan.item_count = static_cast<int>(s.item_count());
    plan.demand_count = static_cast<int>(s.demand_count());
    if (!state.found) {
        plan.status = PlanStatus::Infeasible;
        return plan;
    }
    plan.status = PlanStatus::Optimal;
    plan.shipments = std::move(state.best_shipments);
    plan.objective = 0.0;
    for (std::size_t i = 0; i < s.supplier_count(); ++i) {
        for (std::size_t k = 0; k < s.item_count(); ++k) {
            for (std::size_t j = 0; j < s.demand_count(); ++j) {
                const std::int64_t units = plan.shipment(i, k, j);
                if (units != 0) {
                    plan.objective +=
                        static_cast<double>(units) * *s.cost(i, k, j);
                }
            }
        }
    }
    return plan;
}

std::vector<std::string> audit_plan(const Scenario& s,
                                    const ShipmentPlan& plan) {
    std::vector<std::string> violations;
    if (plan.status == PlanStatus::Infeasible) {
        if (!plan.shipments.empty()) {
            violations.push_back("infeasible plan carries shipments");
        }
        return violations;
    }
    if (plan.supplier_count != static_cast<int>(s.supplier_count()) ||
        plan.item_count != static_cast<int>(s.item_count()) ||
        plan.demand_count != static_cast<int>(s.demand_count()) ||
        plan.shipments.size() !=
            s.supplier_count() * s.item_count() * s.demand_count()) {
        violations.push_back("plan shape does not match the scenario");
        return violations;
    }

    for (std::size_t i = 0; i < s.supplier_count(); ++i) {
        std::int64_t shipped = 0;
        for (std::size_t k = 0; k < s.item_count(); ++k) {
            for (std::size_t j = 0; j < s.demand_count(); ++j) {
                shipped += plan.shipment(i, k, j);
            }
        }
        if (shipped > s.suppliers[i].capacity) {
            violations.push_back("supplier \"" + s.suppliers[i].name +
                                 "\" ships beyond its capacity");
        }
    }

    for (std::size_t j = 0; j < s.demand_count(); ++j) {
        const std::size_t k =
            static_cast<std::size_t>(s.item_index(s.demands[j].item));
        std::int64_t received = 0;
        for (std::size_t i = 0; i < s.supplier_count(); ++i) {
            received += plan.shipment(i, k, j);
        }
        if (received != s.demands[j].quantity) {
            violations.push_back("demand point \"" + s.demands[j].name +
                                 "\" is not met exactly");
        }
    }

    for (std::size_t i = 0; i < s.supplier_count(); ++i) {
        for (std::size_t k = 0; k < s.item_count(); ++k) {
            std::int64_t shipped = 0;
            for (std::size_t j = 0; j < s.demand_count(); ++j) {
                const std::int64_t units = plan.shipment(i, k, j);
                if (units < 0) {
                    violations.push_back("negative shipment for supplier \"" +
                                         s.suppliers[i].name + "\"");
                }
                if (units != 0 && !s.cost(i, k, j)) {
                    violations.push_back("shipment on unavailable cell for supplier \"" +
                                         s.suppliers[i].name + "\", item \"" +
                                         s.items[k] + "\"");
                }
                if (units != 0 &&
                    s.item_index(s.demands[j].item) != static_cast<int>(k)) {
                    violations.push_back("shipment of item \"" + s.items[k] +
                                         "\" against demand point \"" +
                                         s.demands[j].name +
                                         "\" which requires a different item");
                }
                shipped += units;
            }
            const auto& cap = s.item_cap(k, i);
            if (cap && shipped > *cap) {
                violations.push_back("item capacity exceeded for item \"" +
                                     s.items[k] + "\" at supplier \"" +
                                     s.suppliers[i].name + "\"");
            }
        }
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < s.supplier_count(); ++i) {
        for (std::size_t k = 0; k < s.item_count(); ++k) {
            for (std::size_t j = 0; j < s.demand_count(); ++j) {
                const std::int64_t units = plan.shipment(i, k, j);
                if (units != 0) {
                    objective += static_cast<double>(units) * *s.cost(i, k, j);
                }
            }
        }
    }
    if (std::abs(objective - plan.objective) > 1e-9) {
        violations.push_back("objective does not match the shipments");
    }

    return violations;
}

}  // namespace multivend
