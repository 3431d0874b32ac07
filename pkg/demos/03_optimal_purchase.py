"""Choose the profit-maximizing amount of raw data to buy.

Compares the closed-form optimum against a brute-force grid search and
shows the rejection case where no purchase is worthwhile.
"""

from datamarket import (
    MarketParams,
    UtilityCurve,
    concavity_check,
    expected_profit,
    grid_argmax,
    optimal_data_size,
)

curve = UtilityCurve(a=0.4944, b=0.0079)
params = MarketParams(M=10000, k=0.5, gamma=1.0, N=100.0)

report = optimal_data_size(params, curve)
print("closed form:")
print(f"  q*            = {report.q_star:.3f}")
print(f"  price at q*   = {report.price_at_q_star:.4f}")
print(f"  expected g*   = {report.expected_profit_at_q_star:.2f}")
print(f"  curvature     = {concavity_check(params, curve, report.q_star):.6f} (concave)")

arg, best = grid_argmax(
    lambda q: expected_profit(q, params, curve), 1e-6, params.N, 200_001
)
print("\nbrute-force grid over (0, N]:")
print(f"  argmax q = {arg:.3f}   max profit = {best:.2f}")

print("\nprofit profile:")
for q in (1.0, 5.0, 20.0, 39.5, 60.0, 100.0):
    print(f"  g({q:5.1f}) = {expected_profit(q, params, curve):10.2f}")

# an unprofitable market: tiny customer base, expensive data, weak service
stingy = MarketParams(M=10, k=1.0, gamma=1.0, N=100.0)
weak = UtilityCurve(a=0.001, b=0.01)
rejected = optimal_data_size(stingy, weak)
print("\nunprofitable market:")
print(f"  rejected = {rejected.rejected}, q* = {rejected.q_star}")
print(f"  best achievable profit anywhere: {grid_argmax(lambda q: expected_profit(q, stingy, weak), 1e-6, stingy.N, 100_001)[1]:.4f} (< 0)")
