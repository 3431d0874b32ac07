"""Posted-price digital-goods auction built on the virtual-valuation transform.

The service has unlimited supply, so revenue maximization collapses to a
single threshold price charged to every customer whose virtual bid clears
zero.  Winner determination is one linear scan over the bids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .market import (
    AuctionOutcome,
    CustomerBid,
    UtilityCurve,
    ValuationModel,
    data_cost,
    data_utility,
)

__all__ = [
    "MechanismResult",
    "virtual_valuation",
    "inverse_virtual",
    "optimal_price",
    "run_auction",
    "customer_utility",
]


@dataclass(frozen=True, eq=False)
class MechanismResult:
    """Outcome of one auction plus the mechanism internals.

    threshold_price is what every winner pays.  virtual_bids holds the
    transformed (and, where needed, support-clamped) bids, aligned with
    outcome.customer_ids.
    """

    outcome: AuctionOutcome
    threshold_price: float
    virtual_bids: np.ndarray


def virtual_valuation(v: float, model: ValuationModel) -> float:
    """A bid minus its information rent (1 - F(v)) / f(v).

    For valuations uniform on [0, s] this is 2*v - s, monotone in v.
    """
    s = model.support_max
    if not 0.0 <= v <= s:
        raise ValueError(f"valuation {v} outside the support [0, {s}]")
    return 2.0 * v - s


def inverse_virtual(y: float, model: ValuationModel) -> float:
    """The valuation whose virtual valuation equals y."""
    s = model.support_max
    if not -s <= y <= s:
        raise ValueError(f"{y} outside the virtual-valuation image [{-s}, {s}]")
    return (y + s) / 2.0


def optimal_price(curve: UtilityCurve, q: float, gamma: float) -> float:
    """Revenue-maximizing posted price for a service of size q: gamma*r(q)/2.

    This is the zero of the virtual valuation, i.e. the smallest bid that
    still wins.
    """
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    return data_utility(q, curve) * gamma / 2.0


def run_auction(
    bids: Sequence[CustomerBid],
    model: ValuationModel,
    q: float,
    k: float,
) -> MechanismResult:
    """Sell the service to every customer whose bid clears the threshold price.

    A bid above the valuation support is clamped for the virtual-bid
    computation but kept verbatim in the caller's records; clamping never
    changes who wins or what they pay.  Ties at the threshold win.  Winners
    all pay the threshold; gross profit is total payments minus the cost of
    the q data units.  O(M): unlimited supply needs no sorting.
    """
    if len(bids) == 0:
        raise ValueError("bids must be non-empty")
    cost = data_cost(q, k)
    ids = tuple(b.customer_id for b in bids)
    values = np.fromiter((b.bid for b in bids), dtype=float, count=len(bids))

    s = model.support_max
    clamped = np.minimum(values, s)
    virtual = 2.0 * clamped - s
    price = 0.5 * s
    winners = virtual >= 0.0

    payments = np.where(winners, price, 0.0)
    allocations = winners.astype(np.int8)
    gross = float(payments.sum()) - cost
    for arr in (allocations, payments, virtual):
        arr.setflags(write=False)
    outcome = AuctionOutcome(
        customer_ids=ids,
        allocations=allocations,
        payments=payments,
        gross_profit=gross,
    )
    return MechanismResult(outcome=outcome, threshold_price=price, virtual_bids=virtual)


def customer_utility(
    bid: CustomerBid, true_valuation: float, result: MechanismResult
) -> float:
    """Realized utility v*x - p of one customer in an auction result."""
    i = result.outcome.index_of(bid.customer_id)
    return true_valuation * float(result.outcome.allocations[i]) - float(
        result.outcome.payments[i]
    )
