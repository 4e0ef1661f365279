"""Walkthrough: the three reference isolation matrices.

An isolation set is a set of 1-entries, no two in the same row or column,
no two inside an all-ones 2x2 submatrix; presented as a submatrix with the
set on the diagonal it is an isolation matrix.  Three constructions below
are pinned down to the exact grids the library's golden tests use.
"""

from isoset import (
    circulant_isolation,
    family_to_matrix,
    isolation_construct,
    verify_isolation,
    verify_matrix_isolation,
)


def show(matrix):
    for i in range(1, matrix.n_rows + 1):
        print(" ", matrix.row_string(i))
    print()


# ---------------------------------------------------------------------------
# The circulant template F(p, q): first column is p ones then q zeros, and
# every later column shifts it cyclically down by one.  For q >= p-1 the
# diagonal is an isolation set.
m = circulant_isolation(5, 4)
print("circulant F(5,4), 9x9, five ones per column:")
show(m)
print("diagonal is an isolation set:", verify_matrix_isolation(m).ok)
print()

# ---------------------------------------------------------------------------
# Mid-range k: at k = 12, t = 4 the best known isolation family has size
# 2(k - 2t) + 3 = 11.  The first seven indices form a cyclic-window block,
# the last four a sliding-run block.
fp = isolation_construct(12, 4)
print(f"isolation family at k=12, t=4: size {fp.size}")
for r, c in zip(fp.rows, fp.cols):
    print(f"  row {set(r.elements())!s:<18} col {set(c.elements())}")
show(family_to_matrix(fp))

# ---------------------------------------------------------------------------
# Large k: for k >= 4t-3 the family reaches size k, which is maximal since
# the Boolean rank of the full matrix is k.
fp = isolation_construct(11, 3)
print(f"isolation family at k=11, t=3: size {fp.size} (equal to k)")
print("certificate:", "ok" if verify_isolation(fp).ok else "violated")
show(family_to_matrix(fp))
