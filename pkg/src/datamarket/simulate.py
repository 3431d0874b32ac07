"""Monte-Carlo market harness and one-parameter sweeps.

simulate() replays full truthful auctions and compares realized profit with
the analytic expectation.  sweep() tabulates analytic and simulated profit
along a grid over one of {price, q, k, gamma}, producing plot-ready rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .auction import optimal_price, run_auction
from .market import (
    CustomerBid,
    ValuationModel,
    data_cost,
    sample_valuations,
    valuation_cdf,
)
from .optimize import expected_profit, optimal_data_size
from .scenario import ScenarioConfig

__all__ = ["SimulationReport", "SweepResultRow", "SWEEP_PARAMETERS", "simulate", "sweep"]

SWEEP_PARAMETERS = ("price", "q", "k", "gamma")


@dataclass(frozen=True)
class SimulationReport:
    """Empirical-vs-analytic profit comparison for one fixed-size market.

    within_three_se is the agreement flag: the empirical mean lies within
    three standard errors of the analytic expectation (meaningful for
    trials >= 2).  trial_profits keeps the realized profit of every trial,
    in trial order.
    """

    M: int
    q: float
    threshold_price: float
    trials: int
    seed: int
    analytic_profit: float
    empirical_mean: float
    empirical_std: float
    std_error: float
    within_three_se: bool
    trial_profits: tuple[float, ...]


@dataclass(frozen=True)
class SweepResultRow:
    """One grid point of a sweep: analytic values plus Monte-Carlo columns."""

    value: float
    expected_profit: float
    optimal_price: float
    optimal_q: float
    empirical_mean: float
    empirical_std: float


def simulate(config: ScenarioConfig) -> SimulationReport:
    """Run repeated truthful auctions and compare profit with its expectation.

    Trial t draws valuations with seed + t, so every trial is independently
    replayable and the whole report is deterministic for a fixed config.
    """
    if config.q is None:
        raise ValueError("scenario field q: required for simulation")
    params = config.market
    curve = config.curve
    model = config.model()
    analytic = expected_profit(config.q, params, curve)

    ids = tuple(f"c{i}" for i in range(params.M))
    profits = np.empty(config.trials)
    for t in range(config.trials):
        values = sample_valuations(params.M, model, seed=config.seed + t)
        bids = [CustomerBid(cid, float(v)) for cid, v in zip(ids, values)]
        result = run_auction(bids, model, q=config.q, k=params.k)
        profits[t] = result.outcome.gross_profit

    mean = float(profits.mean())
    std = float(profits.std(ddof=1)) if config.trials > 1 else 0.0
    se = std / math.sqrt(config.trials)
    return SimulationReport(
        M=params.M,
        q=config.q,
        threshold_price=optimal_price(curve, config.q, params.gamma),
        trials=config.trials,
        seed=config.seed,
        analytic_profit=analytic,
        empirical_mean=mean,
        empirical_std=std,
        std_error=se,
        within_three_se=abs(mean - analytic) <= 3.0 * se,
        trial_profits=tuple(float(p) for p in profits),
    )


def _mc_profit(
    model: ValuationModel,
    price: float,
    M: int,
    cost: float,
    config: ScenarioConfig,
    row: int,
) -> tuple[float, float]:
    """Mean and std of realized posted-price profit over config.trials runs.

    Row r, trial t draws with seed + r*trials + t, extending the per-trial
    seeding scheme across grid rows.
    """
    base = config.seed + row * config.trials
    profits = np.empty(config.trials)
    for t in range(config.trials):
        values = sample_valuations(M, model, seed=base + t)
        profits[t] = float((values >= price).sum()) * price - cost
    std = float(profits.std(ddof=1)) if config.trials > 1 else 0.0
    return float(profits.mean()), std


def sweep(
    config: ScenarioConfig, parameter: str, lo: float, hi: float, steps: int
) -> list[SweepResultRow]:
    """Tabulate analytic and simulated profit along a one-parameter grid.

    price:      the posted price varies at the configured q; analytic profit
                is M*(1 - F(p))*p - k*q.
    q:          the data size varies and the service sells at its own optimal
                price; analytic profit is the expected-profit curve.
    k, gamma:   the market constant varies and each row re-optimizes the
                purchase, reporting optimal profit, price, and data size
                (all zero on rejected rows, where nothing is bought or sold).
    Rows follow grid order; Monte-Carlo columns use config.trials runs each.
    """
    if parameter not in SWEEP_PARAMETERS:
        raise ValueError(
            f"unknown sweep parameter {parameter!r}; expected one of {SWEEP_PARAMETERS}"
        )
    if not lo < hi:
        raise ValueError(f"need lo < hi, got lo={lo}, hi={hi}")
    if steps < 2:
        raise ValueError(f"need at least 2 grid points, got {steps}")

    params = config.market
    curve = config.curve
    grid = np.linspace(lo, hi, int(steps))
    rows: list[SweepResultRow] = []

    if parameter == "price":
        if config.q is None:
            raise ValueError("scenario field q: required for a price sweep")
        if lo < 0:
            raise ValueError(f"price sweep needs lo >= 0, got {lo}")
        model = config.model()
        p_star = optimal_price(curve, config.q, params.gamma)
        base = optimal_data_size(params, curve)
        cost = data_cost(config.q, params.k)
        for r, p in enumerate(grid):
            p = float(p)
            analytic = params.M * (1.0 - valuation_cdf(p, model)) * p - cost
            emp_mean, emp_std = _mc_profit(model, p, params.M, cost, config, row=r)
            rows.append(
                SweepResultRow(p, analytic, p_star, base.q_star, emp_mean, emp_std)
            )
        return rows

    if parameter == "q":
        if not (lo > 0 and hi <= params.N):
            raise ValueError(
                f"q sweep must stay within (0, {params.N}], got [{lo}, {hi}]"
            )
        base = optimal_data_size(params, curve)
        for r, q in enumerate(grid):
            q = float(q)
            model = ValuationModel.from_market(curve, q, params.gamma)
            p_star = optimal_price(curve, q, params.gamma)
            analytic = expected_profit(q, params, curve)
            emp_mean, emp_std = _mc_profit(
                model, p_star, params.M, data_cost(q, params.k), config, row=r
            )
            rows.append(
                SweepResultRow(q, analytic, p_star, base.q_star, emp_mean, emp_std)
            )
        return rows

    # k and gamma sweeps re-optimize the purchase at every grid value
    if lo <= 0:
        raise ValueError(f"{parameter} sweep needs lo > 0, got {lo}")
    for r, value in enumerate(grid):
        value = float(value)
        swept = replace(params, **{parameter: value})
        report = optimal_data_size(swept, curve)
        if report.rejected:
            rows.append(SweepResultRow(value, 0.0, 0.0, 0.0, 0.0, 0.0))
            continue
        model = ValuationModel.from_market(curve, report.q_star, swept.gamma)
        emp_mean, emp_std = _mc_profit(
            model,
            report.price_at_q_star,
            swept.M,
            data_cost(report.q_star, swept.k),
            config,
            row=r,
        )
        rows.append(
            SweepResultRow(
                value,
                report.expected_profit_at_q_star,
                report.price_at_q_star,
                report.q_star,
                emp_mean,
                emp_std,
            )
        )
    return rows
