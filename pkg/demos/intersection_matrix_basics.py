"""Walkthrough: the t-subset intersection matrix and its building blocks.

Rows and columns of the matrix A(k, t) are indexed by all t-element subsets
of {1..k} in colexicographic order, with a 1 exactly where the two subsets
share an element.  This script builds a few small instances and prints the
basic facts the rest of the library is built on.
"""

from isoset import Subset, build_A, enumerate_t_subsets, family_to_matrix, intersects
from isoset.core import FamilyPair


def show(matrix, label):
    print(f"{label}  ({matrix.n_rows}x{matrix.n_cols})")
    for i in range(1, matrix.n_rows + 1):
        print(" ", matrix.row_string(i))
    print()


# ---------------------------------------------------------------------------
# Subsets are 1-based bit vectors.
a = Subset.of([1, 2], 4)
b = Subset.of([3, 4], 4)
print("{1,2} meets {2,3}:", intersects(a, Subset.of([2, 3], 4)))
print("{1,2} meets {3,4}:", intersects(a, b))
print()

# ---------------------------------------------------------------------------
# The column order is colexicographic: sorted by largest element first.
print("2-subsets of [4] in matrix order:")
for s in enumerate_t_subsets(4, 2):
    print(" ", set(s.elements()))
print()

# ---------------------------------------------------------------------------
# A(4, 2) is 6x6; its three zeros above the diagonal are the three perfect
# matchings of [4] into two disjoint pairs.
show(build_A(4, 2), "A(4,2)")

# For k < 2t every pair of t-subsets intersects, so the matrix is all ones.
show(build_A(5, 3), "A(5,3)")

# ---------------------------------------------------------------------------
# Any square pair of subset families realizes a submatrix by the same rule:
# row i against column j is 1 exactly when the two index sets intersect.
fp = FamilyPair.from_elements([[1, 2], [2, 3]], [[1, 4], [2, 4]], 4)
show(family_to_matrix(fp), "realized 2x2 family")
