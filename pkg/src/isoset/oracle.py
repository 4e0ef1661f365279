"""Brute-force ground truth on small instances.

Exact maximum isolation set, maximum identity submatrix, and maximum
triangular family of the full t-subset intersection matrix, plus the exact
Boolean rank (minimum biclique cover) of a 0/1 matrix.  Searches are
single-threaded and deterministic: budgets are counted in search nodes, so
identical inputs yield identical results including node counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import (
    BoolMatrix,
    FamilyPair,
    RangeError,
    ResourceLimitError,
    SearchResult,
    Subset,
    enumerate_t_subsets,
    max_dimension,
)


@dataclass(frozen=True)
class RankBudget:
    """Node and enumeration caps for the brute-force searches."""

    max_nodes: int = 10_000_000
    max_bicliques: int = 50_000

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_bicliques < 1:
            raise ValueError("budget caps must be positive")


@dataclass(frozen=True)
class CompatGraph:
    """Compatibility graph over the 1-entries of the intersection matrix.

    Vertices are the intersecting (row subset, col subset) pairs in fixed
    colexicographic pair order (column subset is the outer key, both in
    colex subset order); cliques are exactly the families realizing the
    target pattern.
    """

    vertices: tuple[tuple[Subset, Subset], ...]
    adjacency: tuple[int, ...]


class _BudgetExhausted(Exception):
    pass


def compat_graph(k: int, t: int, identity: bool = False, max_dim: int | None = None) -> CompatGraph:
    """Build the isolation (or, with identity=True, identity) compatibility graph.

    Two vertices (x1, y1), (x2, y2) are adjacent when x1 != x2, y1 != y2 and
    the cross intersections x1 & y2, x2 & y1 are not both nonempty; the
    identity graph requires both to be empty.
    """
    cap = max_dimension() if max_dim is None else max_dim
    dim = comb(k, t)
    if dim > cap:
        raise ResourceLimitError(
            f"A_({k},{t}) would have {dim} rows, exceeding the cap {cap}"
        )
    subsets = enumerate_t_subsets(k, t)
    pairs = [(x, y) for y in subsets for x in subsets if x.bits & y.bits]
    n = len(pairs)
    xb = [p[0].bits for p in pairs]
    yb = [p[1].bits for p in pairs]
    adj = [0] * n
    for u in range(n):
        xu, yu = xb[u], yb[u]
        for v in range(u + 1, n):
            if xb[v] == xu or yb[v] == yu:
                continue
            cross_uv = xu & yb[v]
            cross_vu = xb[v] & yu
            if identity:
                ok = not cross_uv and not cross_vu
            else:
                ok = not cross_uv or not cross_vu
            if ok:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return CompatGraph(tuple(pairs), tuple(adj))


def _max_clique(adj_in: tuple[int, ...], max_nodes: int) -> tuple[list[int], int, bool]:
    """Branch-and-bound maximum clique with greedy-coloring bounds.

    Vertices are relabeled internally by non-increasing degree (ties by
    index) and a greedy clique seeds the incumbent.  At every node the
    candidates are sorted by degree within the candidate set, colored
    greedily in that order, and branched in reverse color order; a vertex
    of color c cannot extend the clique by more than c.  All orderings are
    index-tiebroken, so node counts are reproducible.  Returns
    (best clique in original vertex ids, nodes, complete).
    """
    n = len(adj_in)
    if n == 0:
        return [], 0, True
    degree = [a.bit_count() for a in adj_in]
    relabel = sorted(range(n), key=lambda v: (-degree[v], v))
    pos = [0] * n
    for i, v in enumerate(relabel):
        pos[v] = i
    adj = [0] * n
    for u in range(n):
        rest = adj_in[u]
        while rest:
            low = rest & -rest
            adj[pos[u]] |= 1 << pos[low.bit_length() - 1]
            rest ^= low

    cand = (1 << n) - 1
    best: list[int] = []
    while cand:
        v = (cand & -cand).bit_length() - 1
        best.append(v)
        cand &= adj[v]

    nodes = 0
    clique: list[int] = []

    def expand(cand: int) -> None:
        nonlocal nodes, best
        nodes += 1
        if nodes > max_nodes:
            raise _BudgetExhausted
        vs = []
        rest = cand
        while rest:
            low = rest & -rest
            vs.append(low.bit_length() - 1)
            rest ^= low
        vs.sort(key=lambda v: (-(adj[v] & cand).bit_count(), v))
        color_of = {}
        classes: list[int] = []
        for v in vs:
            for i, cls in enumerate(classes):
                if not adj[v] & cls:
                    classes[i] |= 1 << v
                    color_of[v] = i + 1
                    break
            else:
                classes.append(1 << v)
                color_of[v] = len(classes)
        vs.sort(key=lambda v: (color_of[v], v))
        p = cand
        for v in reversed(vs):
            if len(clique) + color_of[v] <= len(best):
                return
            child = p & adj[v]
            clique.append(v)
            if child:
                expand(child)
            elif len(clique) > len(best):
                best = clique.copy()
            clique.pop()
            p ^= 1 << v
            if len(clique) + p.bit_count() <= len(best):
                return

    complete = True
    try:
        expand((1 << n) - 1)
    except _BudgetExhausted:
        complete = False
    return sorted(relabel[v] for v in best), nodes, complete


def _clique_to_family(graph: CompatGraph, clique: list[int], k: int, t: int, kind: str) -> FamilyPair:
    picked = sorted(clique)
    rows = tuple(graph.vertices[v][0] for v in picked)
    cols = tuple(graph.vertices[v][1] for v in picked)
    meta = {"search": kind, "k": k, "t": t}
    return FamilyPair(k, t, t, rows, cols, meta)


def max_isolation_bruteforce(k: int, t: int, budget: RankBudget | None = None) -> SearchResult:
    """Exact maximum isolation set of the full intersection matrix.

    Maximum clique in the isolation compatibility graph; on an exhausted
    node budget the best clique found so far is returned (complete=False).
    """
    budget = budget or RankBudget()
    graph = compat_graph(k, t, identity=False)
    clique, nodes, complete = _max_clique(graph.adjacency, budget.max_nodes)
    witness = _clique_to_family(graph, clique, k, t, "isolation")
    return SearchResult(len(clique), witness, nodes, complete)


def max_identity_bruteforce(k: int, t: int, budget: RankBudget | None = None) -> SearchResult:
    """Exact maximum identity submatrix of the full intersection matrix.

    Same clique search on the stricter graph requiring both cross
    intersections of every vertex pair to be empty.
    """
    budget = budget or RankBudget()
    graph = compat_graph(k, t, identity=True)
    clique, nodes, complete = _max_clique(graph.adjacency, budget.max_nodes)
    witness = _clique_to_family(graph, clique, k, t, "identity")
    return SearchResult(len(clique), witness, nodes, complete)


def max_triangular_bruteforce(a: int, b: int, k: int, budget: RankBudget | None = None) -> SearchResult:
    """Exact maximum triangular family over [k] with row size a, col size b.

    Depth-first extension of pair sequences (A_i, B_i) where A_i must meet
    every earlier B_j and B_i must avoid every earlier A_j.  Completeness-
    preserving reductions under universe relabeling: the first pair is
    canonical per overlap size (A_1 = {1..a}, B_1 = {1..c} + {a+1..a+b-c}),
    and later pairs introduce fresh elements only as the next consecutive
    integers.  Explored states, keyed by (union of rows, set of columns),
    are memoized and never re-expanded.
    """
    if a < 1 or b < 1:
        raise RangeError(f"need a >= 1 and b >= 1, got a={a}, b={b}")
    if max(a, b) > k:
        raise RangeError(f"need k >= max(a, b) = {max(a, b)}, got k={k}")
    if comb(k, a) * comb(k, b) > max_dimension():
        raise ResourceLimitError(
            f"{comb(k, a) * comb(k, b)} candidate pairs exceed the cap {max_dimension()}"
        )
    budget = budget or RankBudget()

    nodes = 0
    best: tuple = ()
    path: list[tuple[int, int]] = []
    visited: set = set()

    def first_candidates() -> list[tuple[int, int, int]]:
        out = []
        for c in range(1, min(a, b) + 1):
            if a + b - c > k:
                continue
            amask = (1 << a) - 1
            bmask = ((1 << c) - 1) | (((1 << (b - c)) - 1) << a)
            out.append((amask, bmask, a + b - c))
        return out

    def candidates(union_a: int, bs: tuple[int, ...], u: int) -> list[tuple[int, int, int]]:
        out = []
        for fa in range(a + 1):
            if u + fa > k:
                break
            if a - fa > u:
                continue
            fresh_a = ((1 << fa) - 1) << u
            ua = u + fa
            pool = [e for e in range(ua) if not union_a >> e & 1]
            for old_a in combinations(range(u), a - fa):
                amask = fresh_a
                for e in old_a:
                    amask |= 1 << e
                if any(not amask & bm for bm in bs):
                    continue
                for fb in range(b + 1):
                    if ua + fb > k:
                        break
                    if b - fb > len(pool):
                        continue
                    fresh_b = ((1 << fb) - 1) << ua
                    for old_b in combinations(pool, b - fb):
                        bmask = fresh_b
                        for e in old_b:
                            bmask |= 1 << e
                        if bmask & amask:
                            out.append((amask, bmask, ua + fb))
        return out

    def extend(union_a: int, bs: tuple[int, ...], u: int) -> None:
        nonlocal nodes, best
        nodes += 1
        if nodes > budget.max_nodes:
            raise _BudgetExhausted
        if len(path) > len(best):
            best = tuple(path)
        key = (union_a, frozenset(bs))
        if key in visited:
            return
        visited.add(key)
        cands = first_candidates() if not path else candidates(union_a, bs, u)
        for amask, bmask, u2 in cands:
            path.append((amask, bmask))
            extend(union_a | amask, bs + (bmask,), u2)
            path.pop()

    complete = True
    try:
        extend(0, (), 0)
    except _BudgetExhausted:
        complete = False

    rows = tuple(Subset(k, amask) for amask, _ in best)
    cols = tuple(Subset(k, bmask) for _, bmask in best)
    witness = FamilyPair(k, a, b, rows, cols, {"search": "triangular", "a": a, "b": b, "k": k})
    return SearchResult(len(best), witness, nodes, complete)


def fooling_lower_bound(m: BoolMatrix) -> int:
    """Size of a greedily built isolation set of entries of m.

    Scans 1-entries in row-major order and keeps an entry whenever it
    shares no row or column with the entries kept so far and closes no
    all-ones 2x2 submatrix with any of them.  Always a lower bound on the
    Boolean rank.
    """
    chosen: list[tuple[int, int]] = []
    for i in range(m.n_rows):
        row = m.rows[i]
        for j in range(m.n_cols):
            if not row >> j & 1:
                continue
            if all(
                p != i and q != j and not (row >> q & 1 and m.rows[p] >> j & 1)
                for p, q in chosen
            ):
                chosen.append((i, j))
    return len(chosen)


def _maximal_bicliques(m: BoolMatrix, cap: int) -> tuple[list[tuple[int, int]], bool]:
    """All maximal all-ones submatrices as (row mask, col mask) pairs.

    Column sets of maximal rectangles are exactly the nonempty intersections
    of row supports; the closure is expanded breadth-first and deduplicated
    by row-set key.  Returns (rectangles sorted by masks, complete flag);
    hitting the cap yields a partial list with complete=False.
    """
    supports = sorted({mask for mask in m.rows if mask})
    closed = set(supports)
    queue = list(supports)
    complete = len(closed) <= cap
    qi = 0
    while qi < len(queue) and complete:
        c = queue[qi]
        qi += 1
        for s in supports:
            x = c & s
            if x and x not in closed:
                if len(closed) >= cap:
                    complete = False
                    break
                closed.add(x)
                queue.append(x)
    rects = {}
    for cmask in sorted(closed):
        rmask = 0
        for i, row in enumerate(m.rows):
            if cmask & ~row == 0:
                rmask |= 1 << i
        rects[rmask] = cmask
    return sorted(rects.items()), complete


def boolean_rank_exact(m: BoolMatrix, budget: RankBudget | None = None) -> SearchResult:
    """Exact minimum number of all-ones rectangles covering the ones of m.

    Enumerates maximal rectangles, then runs branch-and-bound set cover
    over the 1-entries, branching on the uncovered entry contained in the
    fewest rectangles and pruning with a greedy isolation-set lower bound
    seeded by fooling_lower_bound.  The witness is a tuple of rectangles
    (row indices, col indices), 1-based.  Incomplete runs (rectangle cap or
    node budget) report the best cover found as ``optimum`` and the proven
    lower bound in ``lower_bound``.
    """
    budget = budget or RankBudget()
    total_ones = m.count_ones()
    if total_ones > max_dimension():
        raise ResourceLimitError(
            f"{total_ones} one-entries exceed the cap {max_dimension()}"
        )
    if total_ones == 0:
        return SearchResult(0, (), 0, True, 0)

    rects, enum_complete = _maximal_bicliques(m, budget.max_bicliques)
    entries = m.ones()
    index_of = {e: x for x, e in enumerate(entries)}
    ne = len(entries)
    full = (1 << ne) - 1

    rect_masks = []
    for rmask, cmask in rects:
        mask = 0
        rr = rmask
        while rr:
            low = rr & -rr
            i = low.bit_length()
            rr ^= low
            cc = cmask
            while cc:
                lc = cc & -cc
                mask |= 1 << index_of[(i, lc.bit_length())]
                cc ^= lc
        rect_masks.append(mask)
    entry_rects = [
        [ri for ri, rm in enumerate(rect_masks) if rm >> x & 1] for x in range(ne)
    ]

    # pairwise entry compatibility for the isolation lower bound
    compat = [0] * ne
    for x1 in range(ne):
        i1, j1 = entries[x1]
        for x2 in range(x1 + 1, ne):
            i2, j2 = entries[x2]
            if i1 == i2 or j1 == j2:
                continue
            if m.entry(i1, j2) and m.entry(i2, j1):
                continue
            compat[x1] |= 1 << x2
            compat[x2] |= 1 << x1

    def isolation_bound(uncovered: int) -> int:
        count = 0
        allowed = uncovered
        while allowed:
            low = allowed & -allowed
            count += 1
            allowed &= compat[low.bit_length() - 1]
        return count

    # incumbent: one rectangle per nonzero row is always a valid cover
    best_cover: list[tuple[int, int]] = [
        (1 << i, m.rows[i]) for i in range(m.n_rows) if m.rows[i]
    ]
    covered_by_rects = 0
    for rm in rect_masks:
        covered_by_rects |= rm
    if covered_by_rects == full:
        uncovered = full
        greedy: list[int] = []
        while uncovered:
            gain, pick = 0, -1
            for ri, rm in enumerate(rect_masks):
                g = (rm & uncovered).bit_count()
                if g > gain:
                    gain, pick = g, ri
            greedy.append(pick)
            uncovered &= ~rect_masks[pick]
        if len(greedy) < len(best_cover):
            best_cover = [rects[ri] for ri in greedy]

    root_lb = fooling_lower_bound(m)
    nodes = 0
    chosen: list[int] = []

    def dfs(covered: int) -> None:
        nonlocal nodes, best_cover
        nodes += 1
        if nodes > budget.max_nodes:
            raise _BudgetExhausted
        if covered == full:
            if len(chosen) < len(best_cover):
                best_cover = [rects[ri] for ri in chosen]
            return
        uncovered = full & ~covered
        if len(chosen) + isolation_bound(uncovered) >= len(best_cover):
            return
        branch, fewest = -1, 1 << 60
        ee = uncovered
        while ee:
            low = ee & -ee
            x = low.bit_length() - 1
            ee ^= low
            cnt = len(entry_rects[x])
            if cnt < fewest:
                fewest, branch = cnt, x
        if fewest == 0:
            return  # entry not covered by any enumerated rectangle
        for ri in entry_rects[branch]:
            chosen.append(ri)
            dfs(covered | rect_masks[ri])
            chosen.pop()

    search_complete = True
    try:
        dfs(0)
    except _BudgetExhausted:
        search_complete = False

    complete = enum_complete and search_complete
    optimum = len(best_cover)
    witness = tuple(
        (_mask_indices(rmask), _mask_indices(cmask)) for rmask, cmask in best_cover
    )
    lower = optimum if complete else root_lb
    return SearchResult(optimum, witness, nodes, complete, lower)


def _mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def cover_to_factors(
    cover: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...],
    n_rows: int,
    n_cols: int,
) -> tuple[BoolMatrix, BoolMatrix]:
    """Express a rectangle cover as Boolean factors X (n x r) and Y (r x n).

    Column i of X is the indicator of the i-th rectangle's rows and row i of
    Y the indicator of its columns, so the Boolean product X*Y is the union
    of the rectangles.
    """
    r = len(cover)
    if r == 0:
        raise ValueError("cannot factor an empty cover")
    x_rows = [0] * n_rows
    y_rows = []
    for idx, (rect_rows, rect_cols) in enumerate(cover):
        for i in rect_rows:
            x_rows[i - 1] |= 1 << idx
        ymask = 0
        for j in rect_cols:
            ymask |= 1 << (j - 1)
        y_rows.append(ymask)
    return BoolMatrix(n_rows, r, tuple(x_rows)), BoolMatrix(r, n_cols, tuple(y_rows))
