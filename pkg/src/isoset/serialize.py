"""Stable on-disk formats: family documents (JSON) and matrix documents (text).

A family document is a single JSON object with schema_version, meta,
universe, row_size, col_size and the row/col element arrays (sorted
ascending, 1-based); it round-trips losslessly.  A matrix document is a
header line "n_rows n_cols" followed by n_rows lines of '0'/'1' characters,
row 1 first.
"""

from __future__ import annotations

import json

from .core import BoolMatrix, FamilyPair, ParseError, Subset

SCHEMA_VERSION = 1


def family_to_json(fp: FamilyPair) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "meta": fp.meta,
        "universe": fp.universe,
        "row_size": fp.row_size,
        "col_size": fp.col_size,
        "rows": [list(s.elements()) for s in fp.rows],
        "cols": [list(s.elements()) for s in fp.cols],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def family_from_json(text: str) -> FamilyPair:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("family document must be a JSON object")
    try:
        version = doc["schema_version"]
        if version != SCHEMA_VERSION:
            raise ParseError(f"unsupported schema_version {version}")
        universe = doc["universe"]
        rows = doc["rows"]
        cols = doc["cols"]
        fp = FamilyPair(
            universe=universe,
            row_size=doc["row_size"],
            col_size=doc["col_size"],
            rows=tuple(Subset.of(r, universe) for r in rows),
            cols=tuple(Subset.of(c, universe) for c in cols),
            meta=dict(doc.get("meta") or {}),
        )
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed family document: {exc}") from exc
    return fp


def matrix_to_text(m: BoolMatrix) -> str:
    lines = [f"{m.n_rows} {m.n_cols}"]
    lines.extend(m.row_string(i) for i in range(1, m.n_rows + 1))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> BoolMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix document")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"matrix header must be 'n_rows n_cols', got {lines[0]!r}")
    try:
        n_rows, n_cols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError(f"matrix header must be two integers, got {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != n_rows:
        raise ParseError(f"expected {n_rows} matrix rows, got {len(body)}")
    masks = []
    for i, line in enumerate(body):
        row = line.strip()
        if len(row) != n_cols:
            raise ParseError(f"row {i + 1} has length {len(row)}, expected {n_cols}")
        if set(row) - {"0", "1"}:
            raise ParseError(f"row {i + 1} contains characters other than 0/1")
        masks.append(int(row[::-1], 2))
    try:
        return BoolMatrix(n_rows, n_cols, tuple(masks))
    except ValueError as exc:
        raise ParseError(f"malformed matrix document: {exc}") from exc


def load_document(text: str) -> FamilyPair | BoolMatrix:
    """Parse text as a family document if it looks like JSON, else a matrix."""
    if text.lstrip().startswith("{"):
        return family_from_json(text)
    return matrix_from_text(text)
