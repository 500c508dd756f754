#include "multivend/scenario.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "json_util.hpp"

namespace multivend {

namespace {

using jsonutil::json;

int find_name(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

void note_duplicates(const std::vector<std::string>& names, const char* what,
                     std::vector<std::string>& out) {
    std::unordered_set<std::string> seen;
    std::unordered_set<std::string> reported;
    for (const auto& n : names) {
        if (!seen.insert(n).second && reported.insert(n).second) {
            out.push_back(std::string(what) + " name \"" + n +
                          "\" is not unique");
        }
    }
}

CapacityRule parse_capacity_rule(const std::string& text,
                                 const std::string& where) {
    if (text == "total_loss") {
        return CapacityRule::TotalLoss;
    }
    if (text == "proportional") {
        return CapacityRule::Proportional;
    }
    throw ParseError(where + ": expected \"total_loss\" or \"proportional\"");
}

DisruptionModel parse_disruption(const json& j, const Scenario& s) {
    jsonutil::expect_object(j, "disruption");
    jsonutil::check_keys(j, "disruption",
                         {"per_supplier_p", "power_law", "shortage_penalty",
                          "capacity_rule", "severity_ref"});
    DisruptionModel dm;
    dm.disruption_probability.assign(s.suppliers.size(), 0.0);

    const json& probs = jsonutil::require(j, "per_supplier_p", "disruption");
    jsonutil::expect_object(probs, "disruption.per_supplier_p");
    for (const auto& [name, value] : probs.items()) {
        int idx = s.supplier_index(name);
        if (idx < 0) {
            throw ValidationError("disruption.per_supplier_p references unknown supplier \"" +
                                  name + "\"");
        }
        dm.disruption_probability[static_cast<std::size_t>(idx)] =
            jsonutil::get_number(value, "disruption.per_supplier_p." + name);
    }

    const json& pl = jsonutil::require(j, "power_law", "disruption");
    jsonutil::expect_object(pl, "disruption.power_law");
    jsonutil::check_keys(pl, "disruption.power_law", {"k", "x_min"});
    dm.severity.exponent = jsonutil::get_number(
        jsonutil::require(pl, "k", "disruption.power_law"),
        "disruption.power_law.k");
    dm.severity.x_min = jsonutil::get_number(
        jsonutil::require(pl, "x_min", "disruption.power_law"),
        "disruption.power_law.x_min");

    dm.shortage_penalty = jsonutil::get_number(
        jsonutil::require(j, "shortage_penalty", "disruption"),
        "disruption.shortage_penalty");
    dm.capacity_rule = parse_capacity_rule(
        jsonutil::get_string(jsonutil::require(j, "capacity_rule", "disruption"),
                             "disruption.capacity_rule"),
        "disruption.capacity_rule");
    if (auto it = j.find("severity_ref"); it != j.end()) {
        dm.severity_ref = jsonutil::get_number(*it, "disruption.severity_ref");
    }
    return dm;
}

json disruption_to_json(const Scenario& s, const DisruptionModel& dm) {
    json j = json::object();
    json probs = json::object();
    for (std::size_t i = 0; i < s.suppliers.size(); ++i) {
        probs[s.suppliers[i].name] = dm.disruption_probability[i];
    }
    j["per_supplier_p"] = probs;
    j["power_law"] = {{"k", dm.severity.exponent}, {"x_min", dm.severity.x_min}};
    j["shortage_penalty"] = dm.shortage_penalty;
    j["capacity_rule"] = dm.capacity_rule == CapacityRule::TotalLoss
                             ? "total_loss"
                             : "proportional";
    if (dm.severity_ref) {
        j["severity_ref"] = *dm.severity_ref;
    }
    return j;
}

}  // namespace

int Scenario::supplier_index(const std::string& name) const {
    for (std::size_t i = 0; i < suppliers.size(); ++i) {
        if (suppliers[i].name == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

int Scenario::item_index(const std::string& name) const {
    return find_name(items, name);
}

int Scenario::demand_index(const std::string& name) const {
    for (std::size_t i = 0; i < demands.size(); ++i) {
        if (demands[i].name == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

std::int64_t Scenario::total_demand() const {
    std::int64_t total = 0;
    for (const auto& d : demands) {
        total += d.quantity;
    }
    return total;
}

void Scenario::resize_tensors() {
    costs.assign(suppliers.size() * items.size() * demands.size(),
                 std::nullopt);
    item_capacity.assign(items.size() * suppliers.size(), std::nullopt);
}

Scenario load_scenario(const std::string& text) {
    json root = jsonutil::parse_text(text);
    jsonutil::expect_object(root, "scenario");
    jsonutil::check_keys(root, "scenario",
                         {"suppliers", "items", "demands", "costs",
                          "item_capacity", "disruption"});

    Scenario s;

    const json& suppliers = jsonutil::require(root, "suppliers", "scenario");
    jsonutil::expect_array(suppliers, "suppliers");
    for (std::size_t i = 0; i < suppliers.size(); ++i) {
        const std::string where = "suppliers[" + std::to_string(i) + "]";
        const json& entry = suppliers[i];
        jsonutil::expect_object(entry, where);
        jsonutil::check_keys(entry, where, {"name", "capacity"});
        Supplier sup;
        sup.name = jsonutil::get_string(jsonutil::require(entry, "name", where),
                                        where + ".name");
        sup.capacity = jsonutil::get_integer(
            jsonutil::require(entry, "capacity", where), where + ".capacity");
        s.suppliers.push_back(std::move(sup));
    }

    const json& items = jsonutil::require(root, "items", "scenario");
    jsonutil::expect_array(items, "items");
    for (std::size_t i = 0; i < items.size(); ++i) {
        s.items.push_back(jsonutil::get_string(
            items[i], "items[" + std::to_string(i) + "]"));
    }

    const json& demands = jsonutil::require(root, "demands", "scenario");
    jsonutil::expect_array(demands, "demands");
    for (std::size_t i = 0; i < demands.size(); ++i) {
        const std::string where = "demands[" + std::to_string(i) + "]";
        const json& entry = demands[i];
        jsonutil::expect_object(entry, where);
        jsonutil::check_keys(entry, where, {"name", "item", "quantity"});
        DemandPoint d;
        d.name = jsonutil::get_string(jsonutil::require(entry, "name", where),
                                      where + ".name");
        d.item = jsonutil::get_string(jsonutil::require(entry, "item", where),
                                      where + ".item");
        d.quantity = jsonutil::get_integer(
            jsonutil::require(entry, "quantity", where), where + ".quantity");
        s.demands.push_back(std::move(d));
    }

    s.resize_tensors();

    const json& costs = jsonutil::require(root, "costs", "scenario");
    jsonutil::expect_array(costs, "costs");
    for (std::size_t i = 0; i < costs.size(); ++i) {
        const std::string where = "costs[" + std::to_string(i) + "]";
        const json& entry = costs[i];
        jsonutil::expect_object(entry, where);
        jsonutil::check_keys(entry, where, {"supplier", "item", "demand", "cost"});
        const std::string supplier = jsonutil::get_string(
            jsonutil::require(entry, "supplier", where), where + ".supplier");
        const std::string item = jsonutil::get_string(
            jsonutil::require(entry, "item", where), where + ".item");
        const std::string demand = jsonutil::get_string(
            jsonutil::require(entry, "demand", where), where + ".demand");
        const double cost = jsonutil::get_number(
            jsonutil::require(entry, "cost", where), where + ".cost");
        int si = s.supplier_index(supplier);
        int ki = s.item_index(item);
        int di = s.demand_index(demand);
        if (si < 0) {
            throw ValidationError(where + " references unknown supplier \"" +
                                  supplier + "\"");
        }
        if (ki < 0) {
            throw ValidationError(where + " references unknown item \"" + item +
                                  "\"");
        }
        if (di < 0) {
            throw ValidationError(where + " references unknown demand \"" +
                                  demand + "\"");
        }
        auto& cell = s.costs[s.cost_index(static_cast<std::size_t>(si),
                                          static_cast<std::size_t>(ki),
                                          static_cast<std::size_t>(di))];
        if (cell) {
            throw ValidationError(where + " duplicates an earlier cost entry");
        }
        cell = cost;
    }

    if (auto it = root.find("item_capacity"); it != root.end()) {
        jsonutil::expect_array(*it, "item_capacity");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "item_capacity[" + std::to_string(i) + "]";
            const json& entry = (*it)[i];
            jsonutil::expect_object(entry, where);
            jsonutil::check_keys(entry, where, {"item", "supplier", "max_units"});
            const std::string item = jsonutil::get_string(
                jsonutil::require(entry, "item", where), where + ".item");
            const std::string supplier = jsonutil::get_string(
                jsonutil::require(entry, "supplier", where), where + ".supplier");
            const std::int64_t max_units = jsonutil::get_integer(
                jsonutil::require(entry, "max_units", where),
                where + ".max_units");
            int ki = s.item_index(item);
            int si = s.supplier_index(supplier);
            if (ki < 0) {
                throw ValidationError(where + " references unknown item \"" +
                                      item + "\"");
            }
            if (si < 0) {
                throw ValidationError(where + " references unknown supplier \"" +
                                      supplier + "\"");
            }
            auto& cell = s.item_capacity[static_cast<std::size_t>(ki) *
                                             s.suppliers.size() +
                                         static_cast<std::size_t>(si)];
            if (cell) {
                throw ValidationError(where +
                                      " duplicates an earlier capacity entry");
            }
            cell = max_units;
        }
    }

    if (auto it = root.find("disruption"); it != root.end()) {
        s.disruption = parse_disruption(*it, s);
    }

    auto violations = validate_scenario(s);
    if (!violations.empty()) {
        std::string message = "invalid scenario:";
        for (const auto& v : violations) {
            message += "\n  - " + v;
        }
        throw ValidationError(message);
    }
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    json root = json::object();

    json suppliers = json::array();
    for (const auto& sup : s.suppliers) {
        suppliers.push_back({{"name", sup.name}, {"capacity", sup.capacity}});
    }
    root["suppliers"] = std::move(suppliers);
    root["items"] = s.items;

    json demands = json::array();
    for (const auto& d : s.demands) {
        demands.push_back(
            {{"name", d.name}, {"item", d.item}, {"quantity", d.quantity}});
    }
    root["demands"] = std::move(demands);

    json costs = json::array();
    for (std::size_t si = 0; si < s.supplier_count(); ++si) {
        for (std::size_t ki = 0; ki < s.item_count(); ++ki) {
            for (std::size_t di = 0; di < s.demand_count(); ++di) {
                const auto& cell = s.cost(si, ki, di);
                if (cell) {
                    costs.push_back({{"supplier", s.suppliers[si].name},
                                     {"item", s.items[ki]},
                                     {"demand", s.demands[di].name},
                                     {"cost", *cell}});
                }
            }
        }
    }
    root["costs"] = std::move(costs);

    json caps = json::array();
    for (std::size_t ki = 0; ki < s.item_count(); ++ki) {
        for (std::size_t si = 0; si < s.supplier_count(); ++si) {
            const auto& cell = s.item_cap(ki, si);
            if (cell) {
                caps.push_back({{"item", s.items[ki]},
                                {"supplier", s.suppliers[si].name},
                                {"max_units", *cell}});
            }
        }
    }
    if (!caps.empty()) {
        root["item_capacity"] = std::move(caps);
    }

    if (s.disruption) {
        root["disruption"] = disruption_to_json(s, *s.disruption);
    }

    return root.dump(2) + "\n";
}

std::vector<std::string> validate_scenario(const Scenario& s) {
    std::vector<std::string> violations;

    std::vector<std::string> supplier_names;
    supplier_names.reserve(s.suppliers.size());
    for (const auto& sup : s.suppliers) {
        supplier_names.push_back(sup.name);
    }
    std::vector<std::string> demand_names;
    demand_names.reserve(s.demands.size());
    for (const auto& d : s.demands) {
        demand_names.push_back(d.name);
    }
    note_duplicates(supplier_names, "supplier", violations);
    note_duplicates(s.items, "item", violations);
    note_duplicates(demand_names, "demand point", violations);

    for (const auto& sup : s.suppliers) {
        if (sup.capacity < 0) {
            violations.push_back("supplier \"" + sup.name +
                                 "\" violates nonnegative capacity");
        }
    }
    for (const auto& d : s.demands) {
        if (d.quantity < 0) {
            violations.push_back("demand point \"" + d.name +
                                 "\" violates nonnegative quantity");
        }
        if (s.item_index(d.item) < 0) {
            violations.push_back("demand point \"" + d.name +
                                 "\" references item \"" + d.item +
                                 "\" which is not in the item list");
        }
    }

    const std::size_t expected_costs =
        s.suppliers.size() * s.items.size() * s.demands.size();
    if (s.costs.size() != expected_costs) {
        violations.push_back("cost tensor shape does not match the supplier/item/demand lists");
    } else {
        for (std::size_t si = 0; si < s.supplier_count(); ++si) {
            for (std::size_t ki = 0; ki < s.item_count(); ++ki) {
                for (std::size_t di = 0; di < s.demand_count(); ++di) {
                    const auto& cell = s.cost(si, ki, di);
                    if (cell && !(*cell >= 0.0)) {
                        violations.push_back(
                            "cost for supplier \"" + s.suppliers[si].name +
                            "\", item \"" + s.items[ki] + "\", demand \"" +
                            s.demands[di].name +
                            "\" violates nonnegativity");
                    }
                }
            }
        }
    }

    if (s.item_capacity.size() != s.items.size() * s.suppliers.size()) {
        violations.push_back("item capacity matrix shape does not match the item/supplier lists");
    } else {
        for (std::size_t ki = 0; ki < s.item_count(); ++ki) {
            for (std::size_t si = 0; si < s.supplier_count(); ++si) {
                const auto& cell = s.item_cap(ki, si);
                if (cell && *cell < 0) {
                    violations.push_back("item capacity for item \"" +
                                         s.items[ki] + "\", supplier \"" +
                                         s.suppliers[si].name +
                                         "\" violates nonnegativity");
                }
            }
        }
    }

    if (s.disruption) {
        const DisruptionModel& dm = *s.disruption;
        if (dm.disruption_probability.size() != s.suppliers.size()) {
            violations.push_back("disruption probabilities do not match the supplier list");
        } else {
            for (std::size_t i = 0; i < dm.disruption_probability.size(); ++i) {
                double p = dm.disruption_probability[i];
                if (!(p >= 0.0 && p <= 1.0)) {
                    violations.push_back("disruption probability for supplier \"" +
                                         s.suppliers[i].name +
                                         "\" is outside [0, 1]");
                }
            }
        }
        if (!(dm.severity.exponent > 1.0)) {
            violations.push_back("power-law exponent must exceed 1");
        }
        if (!(dm.severity.x_min > 0.0)) {
            violations.push_back("power-law x_min must be positive");
        }
        if (!(dm.shortage_penalty >= 0.0)) {
            violations.push_back("shortage penalty violates nonnegativity");
        }
        if (dm.capacity_rule == CapacityRule::Proportional) {
            if (!dm.severity_ref) {
                violations.push_back("proportional capacity rule requires severity_ref");
            } else if (!(*dm.severity_ref > 0.0)) {
                violations.push_back("severity_ref must be positive");
            }
        }
    }

    return violations;
}

Scenario restrict_suppliers(const Scenario& s,
                            const std::set<std::string>& allowed) {
    for (const auto& name : allowed) {
        if (s.supplier_index(name) < 0) {
            throw UnknownSupplier("unknown supplier \"" + name + "\"");
        }
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < s.suppliers.size(); ++i) {
        if (allowed.count(s.suppliers[i].name) != 0) {
            kept.push_back(i);
        }
    }

    Scenario out;
    out.items = s.items;
    out.demands = s.demands;
    for (std::size_t i : kept) {
        out.suppliers.push_back(s.suppliers[i]);
    }
    out.resize_tensors();
    for (std::size_t ni = 0; ni < kept.size(); ++ni) {
        const std::size_t si = kept[ni];
        for (std::size_t ki = 0; ki < s.item_count(); ++ki) {
            for (std::size_t di = 0; di < s.demand_count(); ++di) {
                out.costs[out.cost_index(ni, ki, di)] = s.cost(si, ki, di);
            }
            out.item_capacity[ki * kept.size() + ni] = s.item_cap(ki, si);
        }
    }
    if (s.disruption) {
        DisruptionModel dm = *s.disruption;
        std::vector<double> probs;
        probs.reserve(kept.size());
        for (std::size_t i : kept) {
            probs.push_back(dm.disruption_probability[i]);
        }
        dm.disruption_probability = std::move(probs);
        out.disruption = std::move(dm);
    }
    return out;
}

}  // namespace multivend
