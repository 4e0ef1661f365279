"""Walkthrough: triangular families and their recursive gluing.

A triangular family has row i meeting column j exactly when i >= j: ones on
and below the diagonal, zeros above.  With row sets of size a and column
sets of size b the construction reaches (a+b choose a) - 1 pairs by gluing
an (a, b-1) block and an (a-1, b) block with one shared fresh element and a
single bridging pair, mirroring Pascal's rule minus one.
"""

from math import comb

from isoset import family_to_matrix, max_triangular_bruteforce, triangular_family, verify_triangular

# ---------------------------------------------------------------------------
# Base case b = 1: columns are singletons, rows interpolate between fresh
# padding and the full prefix.
fp = triangular_family(2, 1)
print("rows:", [set(s.elements()) for s in fp.rows])
print("cols:", [set(s.elements()) for s in fp.cols])
print()

# ---------------------------------------------------------------------------
# Sizes follow (a+b choose a) - 1.
print(f"{'a':>2} {'b':>2} {'size':>5} {'(a+b choose a)-1':>17}")
for a in range(1, 5):
    for b in range(1, 5):
        fp = triangular_family(a, b)
        assert verify_triangular(fp).ok
        print(f"{a:>2} {b:>2} {fp.size:>5} {comb(a + b, a) - 1:>17}")
print()

# ---------------------------------------------------------------------------
# The 5x5 case at a = b = 2, printed in full, with the block structure
# visible: the upper-left 2x2 block is the (2,1) family, the bridging pair
# sits at index 3, and the lower-right block is the (1,2) family.
fp = triangular_family(2, 2)
m = family_to_matrix(fp)
print("triangular family at a = b = 2 (size 5):")
for i in range(1, 6):
    print(" ", m.row_string(i), " row", set(fp.rows[i - 1].elements()))
print()

# ---------------------------------------------------------------------------
# The brute-force search confirms 5 is the maximum possible over any
# universe at a = b = 2 (the upper bound side of the count).
result = max_triangular_bruteforce(2, 2, 8)
print(f"exhaustive maximum at a=b=2, k=8: {result.optimum} "
      f"(complete={result.complete}, nodes={result.nodes_explored})")
