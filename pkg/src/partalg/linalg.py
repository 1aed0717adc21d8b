"""Exact sparse matrices and incremental row reduction over the rationals."""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .errors import DimensionError, ParseError


def fraction_str(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: "str | int") -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise ParseError(f"bad rational coefficient {text!r}") from None


class SparseExactMatrix:
    """Square matrix of size ``dim`` holding exact rationals in a dict of (row, col) keys."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Mapping[tuple[int, int], Fraction | int] | None = None):
        self.dim = dim
        self.entries: dict[tuple[int, int], Fraction] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < dim and 0 <= c < dim):
                raise IndexError(f"index {(r, c)} outside dimension {dim}")
            if v:
                self.entries[(r, c)] = Fraction(v)

    @classmethod
    def identity(cls, dim: int) -> "SparseExactMatrix":
        return cls(dim, {(i, i): 1 for i in range(dim)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseExactMatrix):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __repr__(self) -> str:
        return f"SparseExactMatrix(dim={self.dim}, nnz={len(self.entries)})"

    def _check(self, other: "SparseExactMatrix") -> None:
        if self.dim != other.dim:
            raise DimensionError(f"dimensions differ: {self.dim} vs {other.dim}")

    def __add__(self, other: "SparseExactMatrix") -> "SparseExactMatrix":
        self._check(other)
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out.get(key, 0) + v
        return SparseExactMatrix(self.dim, out)

    def __sub__(self, other: "SparseExactMatrix") -> "SparseExactMatrix":
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> "SparseExactMatrix":
        return SparseExactMatrix(self.dim, {k: v * c for k, v in self.entries.items()})

    def __matmul__(self, other: "SparseExactMatrix") -> "SparseExactMatrix":
        self._check(other)
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], Fraction] = {}
        for (r, m), v in self.entries.items():
            for c, w in by_row.get(m, ()):
                out[(r, c)] = out.get((r, c), 0) + v * w
        return SparseExactMatrix(self.dim, out)

    def trace(self) -> Fraction:
        return sum((v for (r, c), v in self.entries.items() if r == c), Fraction(0))

    def is_zero(self) -> bool:
        return not self.entries

    def to_dense(self) -> list[list[Fraction]]:
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def vectorize(self) -> dict[int, Fraction]:
        return {r * self.dim + c: v for (r, c), v in self.entries.items()}

    def rank(self) -> int:
        rows: dict[int, dict[int, Fraction]] = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(r, {})[c] = v
        return rank(rows.values())

    def to_triples(self) -> str:
        return "".join(f"{r} {c} {fraction_str(v)}\n" for (r, c), v in sorted(self.entries.items()))

    def to_json(self, **meta) -> str:
        payload = dict(meta)
        payload["dim"] = self.dim
        payload["entries"] = [[r, c, fraction_str(v)] for (r, c), v in sorted(self.entries.items())]
        return json.dumps(payload)

    @classmethod
    def from_triples(cls, text: str, dim: int) -> "SparseExactMatrix":
        entries = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'row col p/q'")
            entries[(int(parts[0]), int(parts[1]))] = parse_fraction(parts[2])
        return cls(dim, entries)


def _integer_row(vec: Mapping[int, Fraction | int]) -> dict[int, int]:
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    row = {c: int(v * den) for c, v in vec.items() if v}
    return _primitive(row)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


class RowReducer:
    """Incremental fraction-free row reduction.

    Rows are kept as primitive integer vectors in reduced echelon form: no row
    has a nonzero entry in another row's pivot column.  ``add`` reduces a new
    vector against the stored rows and keeps the remainder if it is nonzero.
    """

    def __init__(self) -> None:
        self.rows: dict[int, dict[int, int]] = {}  # pivot column -> row
        self._column_users: dict[int, set[int]] = {}  # column -> pivots of rows touching it

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping[int, Fraction | int]) -> dict[int, int]:
        row = _integer_row(vec)
        for col in [c for c in row if c in self.rows]:
            a = row.get(col)
            if not a:
                continue
            piv = self.rows[col]
            p = piv[col]
            # row <- p*row - a*piv, eliminating col
            if p != 1:
                row = {c: v * p for c, v in row.items()}
            for c, v in piv.items():
                nv = row.get(c, 0) - a * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            row = _primitive(row)
        return row

    def add(self, vec: Mapping[int, Fraction | int]) -> bool:
        """Insert ``vec``; return True when it increased the rank."""
        return self.insert(vec) is not None

    def insert(self, vec: Mapping[int, Fraction | int]) -> dict[int, int] | None:
        """Insert ``vec`` and return its reduced integer remainder, or None if dependent."""
        row = self.reduce(vec)
        if not row:
            return None
        # sparsest-first pivot choice is not needed for correctness; take the smallest column
        col = min(row)
        p = row[col]
        if p < 0:
            row = {c: -v for c, v in row.items()}
            p = -p
        for other_col in list(self._column_users.get(col, ())):
            other = self.rows[other_col]
            a = other.get(col)
            if not a:
                continue
            self._unindex(other_col, other)
            new = {c: v * p for c, v in other.items()} if p != 1 else dict(other)
            for c, v in row.items():
                nv = new.get(c, 0) - a * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            new = _primitive(new)
            self.rows[other_col] = new
            self._index(other_col, new)
        self.rows[col] = row
        self._index(col, row)
        return row

    def _index(self, pivot: int, row: dict[int, int]) -> None:
        for c in row:
            self._column_users.setdefault(c, set()).add(pivot)

    def _unindex(self, pivot: int, row: dict[int, int]) -> None:
        for c in row:
            users = self._column_users.get(c)
            if users is not None:
                users.discard(pivot)

    def contains(self, vec: Mapping[int, Fraction | int]) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list[dict[int, Fraction]]:
        """Stored rows scaled so each pivot is 1, in pivot order."""
        out = []
        for col in sorted(self.rows):
            row = self.rows[col]
            p = row[col]
            out.append({c: Fraction(v, p) for c, v in row.items()})
        return out


def rank(vectors: Iterable[Mapping[int, Fraction | int]]) -> int:
    """Exact rank of a family of sparse vectors."""
    red = RowReducer()
    for v in vectors:
        red.add(v)
    return red.rank
