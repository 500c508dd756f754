"""Multi-vendor procurement optimizer and disruption/optionality toolkit.

Thin Python layer over the compiled core. Scenarios and studies are the
same JSON documents the ``multivend`` command-line tool consumes, and every
operation is deterministic for a fixed seed.
"""

from ._core import (
    AffinePayoff,
    CapacityRule,
    CostDistribution,
    CurvePoint,
    DemandPoint,
    DisruptionModel,
    EmptyDistribution,
    Error,
    HingePayoff,
    InstanceTooLarge,
    InvalidParameters,
    IoError,
    NormalBase,
    OptionPortfolio,
    ParseError,
    PlanStatus,
    PortfolioResult,
    PowerLaw,
    QuadraticPayoff,
    Quadrant,
    RiskSummary,
    Scenario,
    ShipmentPlan,
    SpreadFamily,
    Supplier,
    SweepEntry,
    SweepResult,
    TablePayoff,
    TooManySuppliers,
    TwoPointBase,
    UniformBase,
    UnknownSupplier,
    ValidationError,
    VendorOptionResult,
    __version__,
    active_shipments,
    audit_plan,
    base_mean,
    base_variance,
    classify_quadrant,
    format_number,
    jensen_gap,
    load_scenario,
    marginal_value,
    oracle_min_cost,
    payoff_value,
    portfolio_simulate,
    restrict_suppliers,
    sample_severity,
    serialize_scenario,
    simulate_horizon,
    solve_scenario,
    spread_curve,
    summarize_risk,
    sweep_subsets,
    validate_scenario,
    vendor_option_value,
)

__all__ = [
    "AffinePayoff",
    "CapacityRule",
    "CostDistribution",
    "CurvePoint",
    "DemandPoint",
    "DisruptionModel",
    "EmptyDistribution",
    "Error",
    "HingePayoff",
    "InstanceTooLarge",
    "InvalidParameters",
    "IoError",
    "NormalBase",
    "OptionPortfolio",
    "ParseError",
    "PlanStatus",
    "PortfolioResult",
    "PowerLaw",
    "QuadraticPayoff",
    "Quadrant",
    "RiskSummary",
    "Scenario",
    "ShipmentPlan",
    "SpreadFamily",
    "Supplier",
    "SweepEntry",
    "SweepResult",
    "TablePayoff",
    "TooManySuppliers",
    "TwoPointBase",
    "UniformBase",
    "UnknownSupplier",
    "ValidationError",
    "VendorOptionResult",
    "__version__",
    "active_shipments",
    "audit_plan",
    "base_mean",
    "base_variance",
    "classify_quadrant",
    "format_number",
    "jensen_gap",
    "load_scenario",
    "marginal_value",
    "oracle_min_cost",
    "payoff_value",
    "portfolio_simulate",
    "restrict_suppliers",
    "sample_severity",
    "serialize_scenario",
    "simulate_horizon",
    "solve_scenario",
    "spread_curve",
    "summarize_risk",
    "sweep_subsets",
    "validate_scenario",
    "vendor_option_value",
]
