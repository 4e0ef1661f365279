"""Walkthrough: pattern certificates and the on-disk document formats.

Verifiers never just say no: a certificate lists every offending index pair
as (i, j, observed, expected), which is what the command-line `verify` verb
prints one per line.  Families round-trip losslessly through a small JSON
document and matrices through a plain text grid.
"""

from isoset import (
    FamilyPair,
    family_from_json,
    family_to_json,
    family_to_matrix,
    identity_family,
    matrix_from_text,
    matrix_to_text,
    verify_identity,
    verify_triangular,
)

# ---------------------------------------------------------------------------
# A certificate for the pattern a family actually has...
fp = identity_family(6, 2)
print("identity check:", "ok" if verify_identity(fp).ok else "violated")

# ...and for one it does not: an identity family has zeros below the
# diagonal, so the triangular check reports each of them.
cert = verify_triangular(fp)
print("triangular check:", "ok" if cert.ok else f"{len(cert.violations)} violations")
for i, j, observed, expected in cert.violations[:3]:
    print(f"  at ({i}, {j}): observed {observed}, expected {expected}")
print()

# ---------------------------------------------------------------------------
# Perturbing one element breaks the pattern and the certificate pinpoints it.
rows = [list(s.elements()) for s in fp.rows]
rows[0] = [2, 3]  # now meets column 1 = {2, 3} off the diagonal
broken = FamilyPair.from_elements(rows, [list(s.elements()) for s in fp.cols], 6)
cert = verify_identity(broken)
print("after perturbing row 1:", cert.violations)
print()

# ---------------------------------------------------------------------------
# Families serialize to a single JSON object; parsing gives the family back.
text = family_to_json(fp)
print(text[: text.index('"rows"')] + '"rows": ...}')
assert family_from_json(text) == fp
print("family JSON round-trip: exact")

# Matrices use a text grid with an "n_rows n_cols" header.
grid = matrix_to_text(family_to_matrix(fp))
print(grid, end="")
assert matrix_from_text(grid) == family_to_matrix(fp)
print("matrix text round-trip: exact")
