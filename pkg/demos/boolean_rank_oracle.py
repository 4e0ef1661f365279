"""Walkthrough: Boolean rank, rectangle covers, and the fooling-set bound.

The Boolean rank of a 0/1 matrix is the least number of all-ones rectangles
(row set x column set) covering its ones; any isolation set gives a lower
bound since no rectangle can contain two of its entries.  The exact solver
enumerates maximal rectangles and runs branch-and-bound set cover.
"""

from isoset import (
    BoolMatrix,
    boolean_rank_exact,
    build_A,
    circulant_isolation,
    cover_to_factors,
    fooling_lower_bound,
    verify_identity_decomposition,
)

# ---------------------------------------------------------------------------
# The full matrix at k=5, t=2 has Boolean rank 5: one "star" rectangle per
# element of the ground set (all subsets containing it) covers everything,
# and no four rectangles suffice.
m = build_A(5, 2)
result = boolean_rank_exact(m)
print(f"rank of A(5,2) = {result.optimum} (complete={result.complete})")
for idx, (rows, cols) in enumerate(result.witness, 1):
    print(f"  rectangle {idx}: rows {rows} cols {cols}")
print()

# ---------------------------------------------------------------------------
# Isolation matrices have full rank: the greedy fooling bound already hits
# the matrix size, and one rectangle per row matches it from above.
f = circulant_isolation(5, 4)
print("F(5,4): fooling lower bound =", fooling_lower_bound(f),
      " exact rank =", boolean_rank_exact(f).optimum)
print()

# ---------------------------------------------------------------------------
# Optimal covers of the identity are forced: every rectangle is a single
# diagonal cell, which the decomposition certificate checks structurally,
# including the total-ones bound 2n + (r-n)n.
n = 5
result = boolean_rank_exact(BoolMatrix.identity(n))
x, y = cover_to_factors(result.witness, n, n)
cert = verify_identity_decomposition(x, y)
print(f"I_{n}: rank {result.optimum}, decomposition ok={cert.ok}")
for note in cert.notes:
    print("  " + note)
