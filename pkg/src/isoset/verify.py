"""Pattern certificates for families, matrices, and identity decompositions.

Each checker scans the full index range and reports every violation as an
(i, j, observed, expected) quadruple with 1-based indices, so property-test
shrinking stays informative.  Certificates are truncated at VIOLATION_CAP.
"""

from __future__ import annotations

from .core import BoolMatrix, FamilyPair, PatternCertificate


def verify_isolation(fp: FamilyPair) -> PatternCertificate:
    """Check that the family's diagonal is an isolation set.

    Requires rows[i] to meet cols[i] for every i, and for every i != j at
    least one of the cross intersections rows[i] & cols[j], rows[j] & cols[i]
    to be empty.  A failing diagonal entry is reported as (i, i, 0, 1); a
    failing pair as (i, j, 1, 0) with i < j.
    """
    n = fp.size
    rb = [s.bits for s in fp.rows]
    cb = [s.bits for s in fp.cols]
    violations = []
    for i in range(n):
        if not rb[i] & cb[i]:
            violations.append((i + 1, i + 1, 0, 1))
    for i in range(n):
        for j in range(i + 1, n):
            if rb[i] & cb[j] and rb[j] & cb[i]:
                violations.append((i + 1, j + 1, 1, 0))
    return PatternCertificate.from_violations("isolation", violations)


def verify_matrix_isolation(m: BoolMatrix) -> PatternCertificate:
    """Check that the main diagonal of a square matrix is an isolation set."""
    _require_square(m)
    violations = []
    for i in range(1, m.n_rows + 1):
        if not m.entry(i, i):
            violations.append((i, i, 0, 1))
    for i in range(1, m.n_rows + 1):
        for j in range(i + 1, m.n_cols + 1):
            if m.entry(i, j) and m.entry(j, i):
                violations.append((i, j, 1, 0))
    return PatternCertificate.from_violations("isolation", violations)


def verify_identity(fp: FamilyPair) -> PatternCertificate:
    """Check rows[i] meets cols[j] exactly when i == j."""
    return _verify_family(fp, "identity", lambda i, j: i == j)


def verify_triangular(fp: FamilyPair) -> PatternCertificate:
    """Check rows[i] meets cols[j] exactly when i >= j (ones on and below the diagonal)."""
    return _verify_family(fp, "triangular", lambda i, j: i >= j)


def _verify_family(fp: FamilyPair, pattern: str, expect) -> PatternCertificate:
    rb = [s.bits for s in fp.rows]
    cb = [s.bits for s in fp.cols]
    n = fp.size
    violations = []
    for i in range(n):
        for j in range(n):
            observed = 1 if rb[i] & cb[j] else 0
            expected = 1 if expect(i, j) else 0
            if observed != expected:
                violations.append((i + 1, j + 1, observed, expected))
    return PatternCertificate.from_violations(pattern, violations)


def verify_matrix_identity(m: BoolMatrix) -> PatternCertificate:
    """Check a square matrix equals the identity pattern entry for entry."""
    return _verify_matrix(m, "identity", lambda i, j: i == j)


def verify_matrix_triangular(m: BoolMatrix) -> PatternCertificate:
    """Check a square matrix has ones exactly on and below the diagonal."""
    return _verify_matrix(m, "triangular", lambda i, j: i >= j)


def _verify_matrix(m: BoolMatrix, pattern: str, expect) -> PatternCertificate:
    _require_square(m)
    violations = []
    for i in range(1, m.n_rows + 1):
        for j in range(1, m.n_cols + 1):
            observed = m.entry(i, j)
            expected = 1 if expect(i, j) else 0
            if observed != expected:
                violations.append((i, j, observed, expected))
    return PatternCertificate.from_violations(pattern, violations)


def _require_square(m: BoolMatrix) -> None:
    if m.n_rows != m.n_cols:
        raise ValueError(f"matrix must be square, got {m.n_rows}x{m.n_cols}")


def verify_identity_decomposition(x: BoolMatrix, y: BoolMatrix) -> PatternCertificate:
    """Certify the structure of a Boolean decomposition X*Y = I_n.

    Preconditions (raise ValueError): X is n x r, Y is r x n, and the
    Boolean product X*Y equals I_n; a failing product reports its first
    wrong entry in row-major order.

    The certificate then checks, as labeled sub-results:
      * pair condition - for each inner index i, column i of X and row i of
        Y are the same standard basis vector, or one of them is all zeros;
        a violation is reported as (i, 0, 1, 0);
      * basis coverage - every basis vector e_j appears as such a pair;
        a missing j is reported as (0, j, 0, 1);
      * ones bound - the total number of ones in X and Y is at most
        2n + (r-n)*n; an excess is reported as (0, 0, total, bound).
    """
    n, r = x.n_rows, x.n_cols
    if y.n_rows != r or y.n_cols != n:
        raise ValueError(
            f"shape mismatch: X is {n}x{r} so Y must be {r}x{n}, got {y.n_rows}x{y.n_cols}"
        )
    for i in range(n):
        produced = 0
        xrow = x.rows[i]
        while xrow:
            low = xrow & -xrow
            produced |= y.rows[low.bit_length() - 1]
            xrow ^= low
        expected = 1 << i
        if produced != expected:
            wrong = produced ^ expected
            j = (wrong & -wrong).bit_length()
            raise ValueError(
                f"X*Y is not the identity: first wrong entry at ({i + 1}, {j})"
            )

    x_cols = x.transpose().rows
    violations = []
    pair_failures = 0
    covered = [False] * n
    for i in range(r):
        xi, yi = x_cols[i], y.rows[i]
        if xi == 0 or yi == 0:
            continue
        if xi == yi and xi.bit_count() == 1:
            covered[xi.bit_length() - 1] = True
            continue
        pair_failures += 1
        violations.append((i + 1, 0, 1, 0))
    missing = [j + 1 for j in range(n) if not covered[j]]
    for j in missing:
        violations.append((0, j, 0, 1))
    total_ones = x.count_ones() + y.count_ones()
    bound = 2 * n + (r - n) * n
    if total_ones > bound:
        violations.append((0, 0, total_ones, bound))

    notes = (
        f"pair-condition: {'ok' if pair_failures == 0 else f'{pair_failures} bad inner indices'}",
        f"basis-coverage: {'ok' if not missing else 'missing ' + ','.join(map(str, missing))}",
        f"ones-count: {total_ones} {'<=' if total_ones <= bound else '>'} {bound}",
    )
    return PatternCertificate.from_violations("identity-decomposition", violations, notes)
