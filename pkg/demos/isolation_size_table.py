"""Walkthrough: how the maximal known isolation size grows with k.

For fixed t >= 2 the size starts at 3 when k = 2t, grows by two per unit of
k across the constructions' mid range, and switches to size exactly k once
k >= 4t-3.  The brute-force oracle confirms the small cases exactly; the
range 2t+2 <= k <= 4t-4 is reported side by side without asserting
optimality there.
"""

from isoset import (
    RankBudget,
    isolation_construct,
    isolation_regime,
    max_isolation_bruteforce,
    verify_isolation,
)

T = 3
ORACLE_UP_TO = 7  # exact search stays cheap through k = 7 at t = 3

print(f"t = {T}")
print(f"{'k':>4} {'construction':>13} {'regime':<12} {'oracle':>7}")
for k in range(2 * T, 4 * T + 3):
    fp = isolation_construct(k, T)
    assert verify_isolation(fp).ok
    if k <= ORACLE_UP_TO:
        result = max_isolation_bruteforce(k, T, RankBudget(max_nodes=2_000_000))
        oracle = str(result.optimum) if result.complete else f">={result.optimum}"
    else:
        oracle = "-"
    print(f"{k:>4} {fp.size:>13} {isolation_regime(k, T):<12} {oracle:>7}")

print()
print("the oracle value can exceed the construction in the open mid range;")
print("equality is only claimed at k = 2t, k = 2t+1, and k >= 4t-3.")
