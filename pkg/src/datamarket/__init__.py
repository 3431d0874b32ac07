"""Profit-maximizing auction and purchase planning for big-data service markets.

The package models a three-party market: a data collector sells raw data at
a linear cost, a service provider turns q data units into a service whose
performance follows a fitted logarithmic law, and customers buy licenses
through a truthful posted-price auction.  Closed-form results (optimal sale
price, optimal purchased data size) come with Monte-Carlo and grid-search
validation harnesses.
"""

from .auction import (
    MechanismResult,
    customer_utility,
    inverse_virtual,
    optimal_price,
    run_auction,
    virtual_valuation,
)
from .fitting import (
    ExperimentPoint,
    FitReport,
    PredictionRecord,
    evaluate_fit,
    fit_utility,
    satisfaction_rate,
)
from .market import (
    AuctionOutcome,
    CustomerBid,
    MarketParams,
    UtilityCurve,
    ValuationModel,
    data_cost,
    data_utility,
    sample_valuations,
    valuation_cdf,
    valuation_pdf,
)
from .optimize import (
    ProfitReport,
    concavity_check,
    expected_profit,
    grid_argmax,
    optimal_data_size,
)
from .scenario import (
    ScenarioConfig,
    load_scenario,
    parse_scenario,
    taxi_scenario,
    taxi_scenario_path,
)
from .simulate import (
    SWEEP_PARAMETERS,
    SimulationReport,
    SweepResultRow,
    simulate,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AuctionOutcome",
    "CustomerBid",
    "ExperimentPoint",
    "FitReport",
    "MarketParams",
    "MechanismResult",
    "PredictionRecord",
    "ProfitReport",
    "SWEEP_PARAMETERS",
    "ScenarioConfig",
    "SimulationReport",
    "SweepResultRow",
    "UtilityCurve",
    "ValuationModel",
    "concavity_check",
    "customer_utility",
    "data_cost",
    "data_utility",
    "evaluate_fit",
    "expected_profit",
    "fit_utility",
    "grid_argmax",
    "inverse_virtual",
    "load_scenario",
    "optimal_data_size",
    "optimal_price",
    "parse_scenario",
    "run_auction",
    "sample_valuations",
    "satisfaction_rate",
    "simulate",
    "sweep",
    "taxi_scenario",
    "taxi_scenario_path",
    "valuation_cdf",
    "valuation_pdf",
    "virtual_valuation",
]
