"""Expected provider profit and the optimal size of the data purchase."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .auction import optimal_price
from .market import MarketParams, UtilityCurve, data_cost, data_utility

__all__ = [
    "ProfitReport",
    "expected_profit",
    "optimal_data_size",
    "concavity_check",
    "grid_argmax",
]


@dataclass(frozen=True)
class ProfitReport:
    """Optimal purchase decision: buy q_star data units, or reject (q_star = 0).

    When rejected, profit and price are reported as 0: the provider does not
    buy, so no service is built and nothing is sold.
    """

    q_star: float
    expected_profit_at_q_star: float
    price_at_q_star: float
    rejected: bool


def _require_positive_slope(curve: UtilityCurve) -> None:
    if curve.b <= 0:
        raise ValueError(
            f"profit optimization needs a positive utility-curve slope, got b={curve.b}"
        )


def expected_profit(q: float, params: MarketParams, curve: UtilityCurve) -> float:
    """Expected gross profit at data size q: M*gamma*r(q)/4 - k*q, and 0 at q=0.

    At the optimal posted price, half the customers buy and each pays half
    the valuation support, hence the quarter factor.
    """
    _require_positive_slope(curve)
    if not (math.isfinite(q) and 0 <= q <= params.N):
        raise ValueError(f"data size must lie in [0, {params.N}], got {q}")
    if q == 0:
        return 0.0
    revenue = params.M * params.gamma * data_utility(q, curve) / 4.0
    return revenue - data_cost(q, params.k)


def optimal_data_size(params: MarketParams, curve: UtilityCurve) -> ProfitReport:
    """Globally optimal data purchase for a market.

    The unconstrained stationary point M*gamma*b/(4k) is clamped to the
    available size N.  Expected profit is concave on (0, N], so that point
    is the global maximizer there and the provider buys iff profit at it is
    strictly positive.
    """
    _require_positive_slope(curve)
    q_plus = params.M * params.gamma * curve.b / (4.0 * params.k)
    q_plus = min(q_plus, params.N)
    profit = expected_profit(q_plus, params, curve)
    if profit > 0.0:
        return ProfitReport(
            q_star=q_plus,
            expected_profit_at_q_star=profit,
            price_at_q_star=optimal_price(curve, q_plus, params.gamma),
            rejected=False,
        )
    return ProfitReport(
        q_star=0.0, expected_profit_at_q_star=0.0, price_at_q_star=0.0, rejected=True
    )


def concavity_check(params: MarketParams, curve: UtilityCurve, q: float) -> float:
    """Second derivative of expected profit at q: -M*gamma*b/(4*q^2), never > 0."""
    _require_positive_slope(curve)
    if not (math.isfinite(q) and q > 0):
        raise ValueError(f"data size must be positive and finite, got {q}")
    return -params.M * params.gamma * curve.b / (4.0 * q * q)


def grid_argmax(
    f: Callable, lo: float, hi: float, steps: int
) -> tuple[float, float]:
    """Maximize f over a uniform grid on [lo, hi].

    Returns (argmax, max value); on exact ties the smallest grid point wins.
    f may either map scalars to scalars or evaluate a whole grid array at
    once; the vectorized form is tried first.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got lo={lo}, hi={hi}")
    if steps < 2:
        raise ValueError(f"need at least 2 grid points, got {steps}")
    xs = np.linspace(lo, hi, int(steps))
    try:
        ys = np.asarray(f(xs), dtype=float)
        if ys.shape != xs.shape:
            raise TypeError("objective is not grid-vectorized")
    except Exception:
        ys = np.fromiter((f(float(x)) for x in xs), dtype=float, count=xs.size)
    if not np.all(np.isfinite(ys)):
        bad = float(xs[~np.isfinite(ys)][0])
        raise ValueError(f"objective is not finite at {bad}")
    i = int(np.argmax(ys))
    return float(xs[i]), float(ys[i])
