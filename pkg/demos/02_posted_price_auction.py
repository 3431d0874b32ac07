"""Run the truthful posted-price auction on a small batch of sealed bids.

Shows the virtual-bid transform, the winner threshold, the uniform payment,
and why no bidder can gain by shading its bid.
"""

import numpy as np

from datamarket import (
    CustomerBid,
    UtilityCurve,
    ValuationModel,
    customer_utility,
    optimal_price,
    run_auction,
    sample_valuations,
)

curve = UtilityCurve(a=0.4944, b=0.0079)
q, gamma, k = 50.0, 1.0, 0.5
model = ValuationModel.from_market(curve, q, gamma)

print(f"service built from q = {q} data units")
print(f"valuations are uniform on [0, {model.support_max:.4f}]")
print(f"posted price p* = {optimal_price(curve, q, gamma):.4f}\n")

values = sample_valuations(8, model, seed=11)
bids = [CustomerBid(f"c{i}", float(v)) for i, v in enumerate(values)]
result = run_auction(bids, model, q=q, k=k)

print("customer   bid      virtual   wins  pays")
for i, bid in enumerate(bids):
    print(
        f"{bid.customer_id:>8}   {bid.bid:.4f}   {result.virtual_bids[i]:+.4f}   "
        f"{int(result.outcome.allocations[i])}     {result.outcome.payments[i]:.4f}"
    )
print(f"\nwinners pay the same threshold price {result.threshold_price:.4f}")
print(f"gross profit = payments - data cost = {result.outcome.gross_profit:.4f}")

# deviating from the truthful bid never helps
victim = bids[0]
true_value = victim.bid
print(f"\n{victim.customer_id} (true value {true_value:.4f}) tries other bids:")
for shaded in np.linspace(0.0, model.support_max, 6):
    trial = [CustomerBid(victim.customer_id, float(shaded))] + bids[1:]
    outcome = run_auction(trial, model, q=q, k=k)
    utility = customer_utility(victim, true_value, outcome)
    print(f"  bid {shaded:.4f} -> utility {utility:+.4f}")
print(f"  truthful utility stays {customer_utility(victim, true_value, result):+.4f}")
