"""Core market model: data cost, diminishing-returns utility, customer valuations.

A service provider buys q raw data units at unit cost k, turns them into a
service whose performance grows logarithmically with q, and sells licenses
to M customers whose willingness to pay is proportional to that performance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "UtilityCurve",
    "MarketParams",
    "ValuationModel",
    "CustomerBid",
    "AuctionOutcome",
    "data_cost",
    "data_utility",
    "valuation_pdf",
    "valuation_cdf",
    "sample_valuations",
]


@dataclass(frozen=True)
class UtilityCurve:
    """Coefficients of the performance-vs-data-size law a + b*ln(q).

    A positive slope b gives the strictly increasing, diminishing-returns
    shape the market math relies on.  Construction only requires finite
    coefficients so degenerate fits can still be reported; profit
    optimization and scenario loading refuse b <= 0.
    """

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError(
                f"curve coefficients must be finite, got a={self.a}, b={self.b}"
            )


@dataclass(frozen=True)
class MarketParams:
    """Market-wide constants for one scenario.

    M      number of customers (positive integer)
    k      cost of one data unit (> 0)
    gamma  influence of service performance on willingness to pay (> 0)
    N      maximum data size available from the collector (> 0)
    """

    M: int
    k: float
    gamma: float
    N: float

    def __post_init__(self):
        if self.M != int(self.M) or self.M < 1:
            raise ValueError(f"M must be a positive integer, got {self.M!r}")
        object.__setattr__(self, "M", int(self.M))
        if not (math.isfinite(self.k) and self.k > 0):
            raise ValueError(f"k must be positive and finite, got {self.k}")
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise ValueError(f"gamma must be positive and finite, got {self.gamma}")
        if not (math.isfinite(self.N) and self.N > 0):
            raise ValueError(f"N must be positive and finite, got {self.N}")


@dataclass(frozen=True)
class ValuationModel:
    """Uniform distribution of customer valuations on [0, support_max].

    A customer's valuation is preference_degree * performance * gamma with
    preference degrees uniform on [0, 1], so support_max = performance * gamma.
    """

    support_max: float

    def __post_init__(self):
        if not (math.isfinite(self.support_max) and self.support_max > 0):
            raise ValueError(
                f"support_max must be positive and finite, got {self.support_max}"
            )

    @classmethod
    def from_market(cls, curve: UtilityCurve, q: float, gamma: float) -> "ValuationModel":
        """Valuation distribution for a service built from q data units."""
        if gamma <= 0:
            raise ValueError(f"gamma must be positive, got {gamma}")
        return cls(support_max=data_utility(q, curve) * gamma)


@dataclass(frozen=True)
class CustomerBid:
    """A sealed bid: what one customer reports it would pay for the service."""

    customer_id: str
    bid: float

    def __post_init__(self):
        if not (math.isfinite(self.bid) and self.bid >= 0):
            raise ValueError(
                f"bid must be non-negative and finite, got {self.bid} "
                f"(customer {self.customer_id!r})"
            )


@dataclass(frozen=True, eq=False)
class AuctionOutcome:
    """Allocations, payments, and gross profit of one auction run.

    Arrays are aligned with customer_ids.  Losers always pay zero, and
    gross_profit is total collected payments minus the data cost.
    """

    customer_ids: tuple[str, ...]
    allocations: np.ndarray
    payments: np.ndarray
    gross_profit: float

    def __post_init__(self):
        n = len(self.customer_ids)
        if len(set(self.customer_ids)) != n:
            raise ValueError("customer ids must be unique")
        if self.allocations.shape != (n,) or self.payments.shape != (n,):
            raise ValueError("allocations and payments must align with customer_ids")
        object.__setattr__(
            self, "_slot", {cid: i for i, cid in enumerate(self.customer_ids)}
        )

    def index_of(self, customer_id: str) -> int:
        """Position of a customer in the outcome arrays."""
        try:
            return self._slot[customer_id]
        except KeyError:
            raise KeyError(f"unknown customer {customer_id!r}") from None


def data_cost(q: float, k: float) -> float:
    """Cost of buying q data units at unit cost k."""
    if not (math.isfinite(k) and k > 0):
        raise ValueError(f"k must be positive and finite, got {k}")
    if not (math.isfinite(q) and q >= 0):
        raise ValueError(f"data size must be non-negative and finite, got {q}")
    return k * q


def data_utility(q: float, curve: UtilityCurve) -> float:
    """Service performance a + b*ln(q) at data size q > 0.

    q = 0 means "no service" and is a case for callers, not for the curve.
    The value is deliberately not clamped to [0, 1]: the profit formulas use
    the raw logarithm, and clamping would break their closed forms.
    """
    if not (math.isfinite(q) and q > 0):
        raise ValueError(f"data size must be positive and finite, got {q}")
    return curve.a + curve.b * math.log(q)


def valuation_pdf(v, model: ValuationModel):
    """Density of the valuation distribution; vectorizes over v."""
    arr = np.asarray(v, dtype=float)
    out = np.where((arr >= 0.0) & (arr <= model.support_max),
                   1.0 / model.support_max, 0.0)
    return out[()]


def valuation_cdf(v, model: ValuationModel):
    """P(valuation <= v): 0 below the support, linear on it, 1 above.

    Accepts scalars or arrays.
    """
    s = model.support_max
    if isinstance(v, (int, float)):  # fast scalar path, hot in grid searches
        if v < 0.0:
            return 0.0
        return v / s if v < s else 1.0
    return np.clip(np.asarray(v, dtype=float) / s, 0.0, 1.0)


def sample_valuations(M: int, model: ValuationModel, seed: int) -> np.ndarray:
    """Draw M i.i.d. customer valuations; deterministic for a fixed seed."""
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    rng = np.random.default_rng(seed)
    # preference degrees uniform on [0, 1], scaled by the support
    return model.support_max * rng.random(int(M))
