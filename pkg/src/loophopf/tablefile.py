"""Canonical JSON serialization of multiplication tables.

Document keys, in this order: ``p``, ``ext_degree``, ``modulus`` (only when
``ext_degree > 1``, coefficients constant term first), ``N``, ``family``
(optional ``{name, n, d}``) and ``table``.  A table cell is the list of
``[index, coeff]`` pairs of that product, sorted by index, with ``coeff`` the
coordinate vector of a nonzero field element.  The canonical form has no
whitespace and no trailing newline, so ``dumps(loads(s)) == s`` for every
canonical ``s``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidInputError, TableFormatError
from .hopf import Family, MultTable
from .scalars import field

__all__ = ["dumps", "loads", "read_table", "to_document", "write_table"]

_KEYS = ("p", "ext_degree", "modulus", "N", "family", "table")


def to_document(T: MultTable) -> dict:
    fld = T.field
    doc: dict = {"p": fld.p, "ext_degree": fld.k}
    if fld.k > 1:
        doc["modulus"] = list(fld.modulus)
    doc["N"] = T.N
    if T.family is not None:
        doc["family"] = {"name": T.family.name, "n": T.family.n, "d": T.family.d}
    doc["table"] = [[[[m, list(fld.coords(c))] for m, c in sorted(cell.items())] for cell in row]
                    for row in T.raw]
    return doc


def dumps(T: MultTable) -> str:
    return json.dumps(to_document(T), separators=(",", ":"), ensure_ascii=False)


def _int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TableFormatError(f"{what} must be an integer")
    return value


def loads(text: str) -> MultTable:
    """Parse and validate a table document (any JSON whitespace is accepted)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise TableFormatError("top level must be an object")
    extra = set(doc) - set(_KEYS)
    if extra:
        raise TableFormatError(f"unexpected keys {sorted(extra)}")
    for key in ("p", "ext_degree", "N", "table"):
        if key not in doc:
            raise TableFormatError(f"missing key {key!r}")
    p = _int(doc["p"], "p")
    k = _int(doc["ext_degree"], "ext_degree")
    N = _int(doc["N"], "N")
    if k > 1:
        if "modulus" not in doc:
            raise TableFormatError("modulus is required when ext_degree > 1")
        modulus = doc["modulus"]
        if not isinstance(modulus, list):
            raise TableFormatError("modulus must be an array")
        modulus = [_int(c, "modulus coefficient") for c in modulus]
    else:
        if "modulus" in doc:
            raise TableFormatError("modulus must be omitted when ext_degree = 1")
        modulus = None
    try:
        fld = field(p, k, modulus)
    except InvalidInputError as exc:
        raise TableFormatError(f"bad field: {exc}") from None
    if N < 1:
        raise TableFormatError("N must be positive")

    family = None
    if "family" in doc:
        fam = doc["family"]
        if not isinstance(fam, dict) or set(fam) != {"name", "n", "d"}:
            raise TableFormatError("family must be an object with keys name, n, d")
        if not isinstance(fam["name"], str):
            raise TableFormatError("family name must be a string")
        d = None if fam["d"] is None else _int(fam["d"], "family d")
        family = Family(fam["name"], _int(fam["n"], "family n"), d)

    table = doc["table"]
    if not isinstance(table, list) or len(table) != N:
        raise TableFormatError("table must have N rows")
    rows = []
    for a, row in enumerate(table):
        if not isinstance(row, list) or len(row) != N:
            raise TableFormatError(f"row {a} must have N cells")
        cells = []
        for b, cell in enumerate(row):
            if not isinstance(cell, list):
                raise TableFormatError(f"cell ({a},{b}) must be an array")
            entry: dict[int, int] = {}
            last = -1
            for pair in cell:
                if not isinstance(pair, list) or len(pair) != 2:
                    raise TableFormatError(f"cell ({a},{b}): entries are [index, coeff] pairs")
                m = _int(pair[0], "path index")
                if not 0 <= m < N:
                    raise TableFormatError(f"cell ({a},{b}): index {m} outside [0, {N})")
                if m <= last:
                    raise TableFormatError(f"cell ({a},{b}): indices must be strictly increasing")
                last = m
                coeff = pair[1]
                if not isinstance(coeff, list) or len(coeff) != k:
                    raise TableFormatError(f"cell ({a},{b}): coeff must have ext_degree entries")
                coords = [_int(c, "coefficient") for c in coeff]
                if any(not 0 <= c < p for c in coords):
                    raise TableFormatError(f"cell ({a},{b}): coefficients must lie in [0, p)")
                if not any(coords):
                    raise TableFormatError(f"cell ({a},{b}): zero coefficients are not stored")
                entry[m] = fld.code(coords)
            cells.append(entry)
        rows.append(cells)
    for b in range(N):
        if rows[0][b] != {b: 1} or rows[b][0] != {b: 1}:
            raise TableFormatError(f"row 0 and column 0 must encode the unit (index {b})")
    return MultTable.from_codes(fld, N, rows, family)


def read_table(path) -> MultTable:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise TableFormatError(f"cannot read {path}: {exc}") from None
    return loads(text)


def write_table(T: MultTable, path) -> None:
    Path(path).write_text(dumps(T), encoding="utf-8")
