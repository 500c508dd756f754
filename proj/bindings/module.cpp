#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "multivend/csv.hpp"
#include "multivend/disruption.hpp"
#include "multivend/errors.hpp"
#include "multivend/optionality.hpp"
#include "multivend/scenario.hpp"
#include "multivend/serialize.hpp"
#include "multivend/solver.hpp"
#include "multivend/sweep.hpp"
#include "multivend/version.hpp"

namespace py = pybind11;
using namespace multivend;

namespace {

void check_plan_index(const ShipmentPlan& plan, std::size_t s, std::size_t k,
                      std::size_t d) {
    if (s >= static_cast<std::size_t>(plan.supplier_count) ||
        k >= static_cast<std::size_t>(plan.item_count) ||
        d >= static_cast<std::size_t>(plan.demand_count)) {
        throw std::out_of_range("shipment index out of range");
    }
}

void check_scenario_index(const Scenario& s, std::size_t si, std::size_t ki,
                          std::size_t di) {
    if (si >= s.supplier_count() || ki >= s.item_count() ||
        di >= s.demand_count()) {
        throw std::out_of_range("scenario index out of range");
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multi-vendor procurement optimizer and disruption/optionality "
              "risk simulator";
    m.attr("__version__") = kVersion;

    const auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", error);
    py::register_exception<ValidationError>(m, "ValidationError", error);
    py::register_exception<UnknownSupplier>(m, "UnknownSupplier", error);
    py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", error);
    py::register_exception<TooManySuppliers>(m, "TooManySuppliers", error);
    py::register_exception<InvalidParameters>(m, "InvalidParameters", error);
    py::register_exception<EmptyDistribution>(m, "EmptyDistribution", error);
    py::register_exception<IoError>(m, "IoError", error);

    py::enum_<PlanStatus>(m, "PlanStatus")
        .value("OPTIMAL", PlanStatus::Optimal)
        .value("INFEASIBLE", PlanStatus::Infeasible);

    py::enum_<CapacityRule>(m, "CapacityRule")
        .value("TOTAL_LOSS", CapacityRule::TotalLoss)
        .value("PROPORTIONAL", CapacityRule::Proportional);

    py::enum_<Quadrant>(m, "Quadrant")
        .value("LOW_P_LOW_C", Quadrant::LowPLowC)
        .value("LOW_P_HIGH_C", Quadrant::LowPHighC)
        .value("HIGH_P_LOW_C", Quadrant::HighPLowC)
        .value("HIGH_P_HIGH_C", Quadrant::HighPHighC);

    py::class_<Supplier>(m, "Supplier")
        .def(py::init<std::string, std::int64_t>(), py::arg("name"),
             py::arg("capacity"))
        .def_readwrite("name", &Supplier::name)
        .def_readwrite("capacity", &Supplier::capacity)
        .def(py::self == py::self);

    py::class_<DemandPoint>(m, "DemandPoint")
        .def(py::init<std::string, std::string, std::int64_t>(),
             py::arg("name"), py::arg("item"), py::arg("quantity"))
        .def_readwrite("name", &DemandPoint::name)
        .def_readwrite("item", &DemandPoint::item)
        .def_readwrite("quantity", &DemandPoint::quantity)
        .def(py::self == py::self);

    py::class_<PowerLaw>(m, "PowerLaw")
        .def(py::init<double, double>(), py::arg("exponent"),
             py::arg("x_min"))
        .def_readwrite("exponent", &PowerLaw::exponent)
        .def_readwrite("x_min", &PowerLaw::x_min);

    py::class_<DisruptionModel>(m, "DisruptionModel")
        .def(py::init<>())
        .def_readwrite("disruption_probability",
                       &DisruptionModel::disruption_probability)
        .def_readwrite("severity", &DisruptionModel::severity)
        .def_readwrite("shortage_penalty", &DisruptionModel::shortage_penalty)
        .def_readwrite("capacity_rule", &DisruptionModel::capacity_rule)
        .def_readwrite("severity_ref", &DisruptionModel::severity_ref);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("suppliers", &Scenario::suppliers)
        .def_readwrite("items", &Scenario::items)
        .def_readwrite("demands", &Scenario::demands)
        .def_readwrite("costs", &Scenario::costs)
        .def_readwrite("item_capacity", &Scenario::item_capacity)
        .def_readwrite("disruption", &Scenario::disruption)
        .def("supplier_count", &Scenario::supplier_count)
        .def("item_count", &Scenario::item_count)
        .def("demand_count", &Scenario::demand_count)
        .def("total_demand", &Scenario::total_demand)
        .def("resize_tensors", &Scenario::resize_tensors)
        .def("cost",
             [](const Scenario& s, std::size_t si, std::size_t ki,
                std::size_t di) {
                 check_scenario_index(s, si, ki, di);
                 return s.cost(si, ki, di);
             },
             py::arg("supplier"), py::arg("item"), py::arg("demand"))
        .def("set_cost",
             [](Scenario& s, std::size_t si, std::size_t ki, std::size_t di,
                std::optional<double> cost) {
                 check_scenario_index(s, si, ki, di);
                 s.costs[s.cost_index(si, ki, di)] = cost;
             },
             py::arg("supplier"), py::arg("item"), py::arg("demand"),
             py::arg("cost"))
        .def("item_cap",
             [](const Scenario& s, std::size_t ki, std::size_t si) {
                 if (ki >= s.item_count() || si >= s.supplier_count()) {
                     throw std::out_of_range(
                         "scenario index out of range");
                 }
                 return s.item_cap(ki, si);
             },
             py::arg("item"), py::arg("supplier"))
        .def(py::self == py::self);

    py::class_<ShipmentPlan>(m, "ShipmentPlan")
        .def_readonly("status", &ShipmentPlan::status)
        .def_property_readonly(
            "z", [](const ShipmentPlan& p) { return p.objective; })
        .def("shipment",
             [](const ShipmentPlan& p, std::size_t s, std::size_t k,
                std::size_t d) {
                 check_plan_index(p, s, k, d);
                 return p.shipment(s, k, d);
             },
             py::arg("supplier"), py::arg("item"), py::arg("demand"))
        .def(py::self == py::self);

    py::class_<SweepEntry>(m, "SweepEntry")
        .def_readonly("subset", &SweepEntry::subset)
        .def_readonly("status", &SweepEntry::status)
        .def_property_readonly(
            "z", [](const SweepEntry& e) { return e.objective; });

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("entries", &SweepResult::entries)
        .def_readonly("baseline_status", &SweepResult::baseline_status)
        .def_readonly("baseline_z", &SweepResult::baseline_objective);

    py::class_<CostDistribution>(m, "CostDistribution")
        .def(py::init<>())
        .def_readonly("trial_costs", &CostDistribution::trial_costs)
        .def_readonly("shortfall_periods",
                      &CostDistribution::shortfall_periods)
        .def_readonly("periods", &CostDistribution::periods)
        .def(py::self == py::self);

    py::class_<RiskSummary>(m, "RiskSummary")
        .def_readonly("trials", &RiskSummary::trials)
        .def_readonly("mean", &RiskSummary::mean)
        .def_readonly("stddev", &RiskSummary::stddev)
        .def_readonly("q50", &RiskSummary::q50)
        .def_readonly("q90", &RiskSummary::q90)
        .def_readonly("q99", &RiskSummary::q99)
        .def_readonly("tail_mean_q99", &RiskSummary::tail_mean_q99)
        .def_readonly("infeasible_period_fraction",
                      &RiskSummary::infeasible_period_fraction);

    py::class_<AffinePayoff>(m, "AffinePayoff")
        .def(py::init<double, double>(), py::arg("slope") = 1.0,
             py::arg("intercept") = 0.0)
        .def_readwrite("slope", &AffinePayoff::slope)
        .def_readwrite("intercept", &AffinePayoff::intercept);

    py::class_<QuadraticPayoff>(m, "QuadraticPayoff").def(py::init<>());

    py::class_<HingePayoff>(m, "HingePayoff")
        .def(py::init<double>(), py::arg("strike") = 0.0)
        .def_readwrite("strike", &HingePayoff::strike);

    py::class_<TablePayoff>(m, "TablePayoff")
        .def(py::init<std::vector<std::pair<double, double>>>(),
             py::arg("points"))
        .def_readwrite("points", &TablePayoff::points);

    py::class_<UniformBase>(m, "UniformBase")
        .def(py::init<double, double>(), py::arg("lo") = 0.0,
             py::arg("hi") = 1.0)
        .def_readwrite("lo", &UniformBase::lo)
        .def_readwrite("hi", &UniformBase::hi);

    py::class_<TwoPointBase>(m, "TwoPointBase")
        .def(py::init<double, double, double>(), py::arg("x1") = 0.0,
             py::arg("x2") = 1.0, py::arg("p") = 0.5)
        .def_readwrite("x1", &TwoPointBase::x1)
        .def_readwrite("x2", &TwoPointBase::x2)
        .def_readwrite("p", &TwoPointBase::p);

    py::class_<NormalBase>(m, "NormalBase")
        .def(py::init<double, double>(), py::arg("mean") = 0.0,
             py::arg("sd") = 1.0)
        .def_readwrite("mean", &NormalBase::mean)
        .def_readwrite("sd", &NormalBase::sd);

    py::class_<SpreadFamily>(m, "SpreadFamily")
        .def(py::init<BaseDistribution, double>(), py::arg("base"),
             py::arg("scale") = 1.0)
        .def_readwrite("base", &SpreadFamily::base)
        .def_readwrite("scale", &SpreadFamily::scale);

    py::class_<OptionPortfolio>(m, "OptionPortfolio")
        .def(py::init<std::int64_t, double, double, double>(),
             py::arg("bets"), py::arg("trial_cost"),
             py::arg("jackpot_probability"), py::arg("jackpot_value"))
        .def_readwrite("bets", &OptionPortfolio::bets)
        .def_readwrite("trial_cost", &OptionPortfolio::trial_cost)
        .def_readwrite("jackpot_probability",
                       &OptionPortfolio::jackpot_probability)
        .def_readwrite("jackpot_value", &OptionPortfolio::jackpot_value);

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("scale", &CurvePoint::scale)
        .def_readonly("expected_payoff", &CurvePoint::expected_payoff)
        .def_readonly("mc_stderr", &CurvePoint::mc_stderr);

    py::class_<PortfolioResult>(m, "PortfolioResult")
        .def_readonly("payoffs", &PortfolioResult::payoffs)
        .def_readonly("capture_probability",
                      &PortfolioResult::capture_probability)
        .def_readonly("analytic_capture_probability",
                      &PortfolioResult::analytic_capture_probability)
        .def_readonly("mean_payoff", &PortfolioResult::mean_payoff)
        .def_readonly("analytic_mean_payoff",
                      &PortfolioResult::analytic_mean_payoff);

    py::class_<VendorOptionResult>(m, "VendorOptionResult")
        .def_readonly("expected_min", &VendorOptionResult::expected_min)
        .def_readonly("expected_min_stderr",
                      &VendorOptionResult::expected_min_stderr)
        .def_readonly("per_vendor_expected",
                      &VendorOptionResult::per_vendor_expected)
        .def_readonly("savings_vs_best_single",
                      &VendorOptionResult::savings_vs_best_single);

    m.def("load_scenario", &load_scenario, py::arg("text"),
          "Parse and validate a scenario file's contents");
    m.def("serialize_scenario", &serialize_scenario, py::arg("scenario"));
    m.def("validate_scenario", &validate_scenario, py::arg("scenario"),
          "All violated invariants; empty when valid");
    m.def("restrict_suppliers", &restrict_suppliers, py::arg("scenario"),
          py::arg("allowed"));

    m.def("solve_scenario", &solve_scenario, py::arg("scenario"),
          "Minimum-cost shipment plan, or an infeasible status");
    m.def("oracle_min_cost", &oracle_min_cost, py::arg("scenario"),
          "Brute-force verification solve (guarded to tiny instances)");
    m.def("audit_plan", &audit_plan, py::arg("scenario"), py::arg("plan"));
    m.def("active_shipments",
          [](const Scenario& s, const ShipmentPlan& plan) {
              std::vector<std::tuple<std::string, std::string, std::string,
                                     std::int64_t>>
                  out;
              if (plan.status != PlanStatus::Optimal) {
                  return out;
              }
              for (std::size_t si = 0; si < s.supplier_count(); ++si) {
                  for (std::size_t ki = 0; ki < s.item_count(); ++ki) {
                      for (std::size_t di = 0; di < s.demand_count(); ++di) {
                          const auto units = plan.shipment(si, ki, di);
                          if (units > 0) {
                              out.emplace_back(s.suppliers[si].name,
                                               s.items[ki],
                                               s.demands[di].name, units);
                          }
                      }
                  }
              }
              return out;
          },
          py::arg("scenario"), py::arg("plan"),
          "(supplier, item, demand, units) tuples with units > 0");

    m.def("sweep_subsets", &sweep_subsets, py::arg("scenario"),
          py::arg("min_size") = 1);
    m.def("marginal_value", &marginal_value, py::arg("scenario"),
          py::arg("supplier"),
          "Cost increase from losing one supplier; inf when infeasible");

    m.def("sample_severity", &sample_severity, py::arg("power_law"),
          py::arg("u"));
    m.def("classify_quadrant", &classify_quadrant, py::arg("probability"),
          py::arg("consequence"), py::arg("p_threshold"),
          py::arg("c_threshold"));
    m.def("simulate_horizon", &simulate_horizon, py::arg("scenario"),
          py::arg("model"), py::arg("periods"), py::arg("trials"),
          py::arg("seed"));
    m.def("summarize_risk", &summarize_risk, py::arg("costs"));

    m.def("payoff_value", &payoff_value, py::arg("payoff"), py::arg("x"));
    m.def("base_mean", &base_mean, py::arg("base"));
    m.def("base_variance", &base_variance, py::arg("base"));
    m.def("jensen_gap", &jensen_gap, py::arg("payoff"),
          py::arg("distribution"), py::arg("trials") = 10000,
          py::arg("seed") = 0);
    m.def("spread_curve", &spread_curve, py::arg("payoff"),
          py::arg("distribution"), py::arg("scales"),
          py::arg("trials") = 10000, py::arg("seed") = 0);
    m.def("portfolio_simulate", &portfolio_simulate, py::arg("portfolio"),
          py::arg("trials") = 10000, py::arg("seed") = 0);
    m.def("vendor_option_value", &vendor_option_value, py::arg("vendors"),
          py::arg("trials") = 10000, py::arg("seed") = 0);

    m.def("format_number", &format_number, py::arg("value"),
          "Shortest decimal string that round-trips the value");
}
