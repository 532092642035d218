"""Sparse exact linear algebra over Q.

Vectors are dicts {index: Fraction}.  Elimination keeps pivot rows normalised
to a leading 1; no floating point anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable


@dataclass
class RationalMatrix:
    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r},{c}) outside {self.rows}x{self.cols}")
            if v != 0:
                clean[(r, c)] = Fraction(v)
        self.entries = clean

    @classmethod
    def from_dense(cls, rows: list[list]) -> "RationalMatrix":
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        return cls(nr, nc, {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)})

    @classmethod
    def from_rows(cls, rows: list[dict], cols: int) -> "RationalMatrix":
        return cls(len(rows), cols, {(r, c): v for r, row in enumerate(rows) for c, v in row.items()})

    @classmethod
    def from_columns(cls, columns: list[dict], rows: int) -> "RationalMatrix":
        return cls(rows, len(columns), {(r, c): v for c, col in enumerate(columns) for r, v in col.items()})

    def row_dicts(self) -> list[dict]:
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def column_dicts(self) -> list[dict]:
        out = [dict() for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        right = other.row_dicts()
        out: dict = {}
        for (r, k), v in self.entries.items():
            for c, w in right[k].items():
                out[(r, c)] = out.get((r, c), 0) + v * w
        return RationalMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not self.entries

    def to_json_obj(self) -> dict:
        entries = [[r, c, f"{v.numerator}/{v.denominator}"] for (r, c), v in sorted(self.entries.items())]
        return {"rows": self.rows, "cols": self.cols, "entries": entries}

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))


def _reduce(row: dict, pivots: dict) -> dict:
    """Reduce row against pivot rows (keyed by pivot column) until its lead is new."""
    while row:
        c = min(row)
        p = pivots.get(c)
        if p is None:
            return row
        f = row[c]
        for k, v in p.items():
            nv = row.get(k, 0) - f * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return row


def echelon(rows: Iterable[dict]) -> dict:
    """Row echelon form as {pivot column: row with leading coefficient 1}."""
    pivots: dict = {}
    for row in rows:
        row = _reduce({c: Fraction(v) for c, v in row.items() if v}, pivots)
        if row:
            c = min(row)
            lead = row[c]
            pivots[c] = {k: v / lead for k, v in row.items()}
    return pivots


def rank_of_vectors(vectors: Iterable[dict]) -> int:
    return len(echelon(vectors))


def rank(M: RationalMatrix) -> int:
    return rank_of_vectors(M.row_dicts())


def nullspace(rows: Iterable[dict], cols: Iterable) -> list[dict]:
    """Basis of {x : row . x = 0 for every row}, over the column index set ``cols``.

    Columns may be any sortable keys.  Basis vectors are listed by free column.
    """
    cols = sorted(cols)
    index = {c: j for j, c in enumerate(cols)}
    piv = echelon({index[c]: v for c, v in row.items()} for row in rows)
    # back substitution to reduced form
    order = sorted(piv, reverse=True)
    for a in order:
        row = piv[a]
        for b in [k for k in row if k != a and k in piv]:
            f = row[b]
            for k, v in piv[b].items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    free = [j for j in range(len(cols)) if j not in piv]
    basis = []
    for f in free:
        vec = {cols[f]: Fraction(1)}
        for a, row in piv.items():
            v = row.get(f)
            if v:
                vec[cols[a]] = -v
        basis.append(vec)
    return basis


def transpose(rows_of: dict) -> dict:
    """{target: {source: c}} -> {source: {target: c}}."""
    out: dict = {}
    for tgt, row in rows_of.items():
        for src, c in row.items():
            out.setdefault(src, {})[tgt] = c
    return out


def apply_columns(cols_of: dict, vec: dict) -> dict:
    """Apply an operator stored by columns, {source: {target: c}}, to vec."""
    out: dict = {}
    for src, x in vec.items():
        for tgt, c in cols_of.get(src, {}).items():
            out[tgt] = out.get(tgt, 0) + c * x
    return {k: v for k, v in out.items() if v}
