"""Integer partitions, hook lengths, skew tableau counts and Stirling/Bell numbers."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .errors import ParseError


class IntegerPartition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction so ``IntegerPartition([3, 1, 0])``
    equals ``IntegerPartition([3, 1])``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"IntegerPartition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def cells(self) -> list[tuple[int, int]]:
        """(row, col) pairs, zero-based, read row by row."""
        return [(r, c) for r, length in enumerate(self) for c in range(length)]

    def conjugate(self) -> "IntegerPartition":
        if not self:
            return IntegerPartition()
        return IntegerPartition(sum(1 for p in self if p > c) for c in range(self[0]))

    def contains(self, other: Sequence[int]) -> bool:
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def sharp(self) -> "IntegerPartition":
        """Drop the first (largest) part."""
        return IntegerPartition(self[1:])

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    @classmethod
    def parse(cls, text: "str | Sequence[int]") -> "IntegerPartition":
        """Accepts ``"[6,5,3,3]"``, ``"6,5,3,3"`` or a list."""
        if not isinstance(text, str):
            try:
                return cls(text)
            except (TypeError, ValueError) as exc:
                raise ParseError(str(exc)) from None
        s = text.strip()
        if s.startswith("["):
            try:
                data = json.loads(s)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad partition: {exc.msg}", exc.pos) from None
        elif s == "":
            data = []
        else:
            data = []
            pos = 0
            for tok in s.split(","):
                if not tok.strip().isdigit():
                    raise ParseError(f"expected a positive integer, got {tok!r}", pos)
                data.append(int(tok))
                pos += len(tok) + 1
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ParseError("expected a list of integers", 0)
        try:
            return cls(data)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def as_partition(value: "IntegerPartition | Sequence[int] | str") -> IntegerPartition:
    if isinstance(value, IntegerPartition):
        return value
    if isinstance(value, str):
        return IntegerPartition.parse(value)
    return IntegerPartition(value)


class SkewShape:
    """The cells of ``outer`` not in ``inner``."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Sequence[int], inner: Sequence[int] = ()):
        self.outer = as_partition(outer)
        self.inner = as_partition(inner)
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def __repr__(self) -> str:
        return f"SkewShape({self.outer}/{self.inner})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SkewShape) and (self.outer, self.inner) == (other.outer, other.inner)

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[tuple[int, int]]:
        inner = list(self.inner) + [0] * (len(self.outer) - len(self.inner))
        return [(r, c) for r, length in enumerate(self.outer) for c in range(inner[r], length)]


# --- Stirling and Bell numbers ---------------------------------------------


@lru_cache(maxsize=None)
def stirling2(k: int, t: int) -> int:
    """Stirling number of the second kind S(k, t)."""
    if k < 0 or t < 0:
        raise ValueError("arguments must be nonnegative")
    if t > k:
        return 0
    if k == 0:
        return 1
    if t == 0:
        return 0
    return t * stirling2(k - 1, t) + stirling2(k - 1, t - 1)


def restricted_bell(m: int, n: int) -> int:
    """Number of set partitions of an m-set into at most n blocks."""
    if m < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    return sum(stirling2(m, t) for t in range(min(m, n) + 1))


def bell(m: int) -> int:
    return restricted_bell(m, m)


def falling_factorial(x: int, length: int) -> int:
    """x (x-1) ... (x-length+1), as a polynomial in x (so negative x is allowed)."""
    out = 1
    for i in range(length):
        out *= x - i
    return out


# --- integer partitions ------------------------------------------------------


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def integer_partitions(n: int) -> list[IntegerPartition]:
    """All partitions of n in reverse lexicographic order, starting with [n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [IntegerPartition(p) for p in _partitions(n, n)]


def remove_box(lam: Sequence[int]) -> list[IntegerPartition]:
    """Partitions obtained by deleting one removable corner."""
    lam = list(as_partition(lam))
    out = []
    for r in range(len(lam)):
        if r == len(lam) - 1 or lam[r] > lam[r + 1]:
            out.append(IntegerPartition(lam[:r] + [lam[r] - 1] + lam[r + 1 :]))
    return out


def add_box(lam: Sequence[int]) -> list[IntegerPartition]:
    """Partitions obtained by adding one box at the end of a row (or a new row)."""
    lam = list(as_partition(lam))
    out = []
    for r in range(len(lam) + 1):
        if r == 0 or lam[r - 1] > (lam[r] if r < len(lam) else 0):
            row = lam[r] if r < len(lam) else 0
            out.append(IntegerPartition(lam[:r] + [row + 1] + lam[r + 1 :]))
    return out


def changed_row(small: Sequence[int], big: Sequence[int]) -> int:
    """Row index (zero-based) of the single cell in ``big`` but not in ``small``."""
    s = list(small) + [0] * (len(big) - len(small))
    diff = [r for r in range(len(big)) if big[r] != s[r]]
    if len(diff) != 1 or big[diff[0]] - s[diff[0]] != 1 or len(small) > len(big):
        raise ValueError(f"{list(big)} is not {list(small)} plus one box")
    return diff[0]


# --- hooks and standard tableaux --------------------------------------------


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    lam = as_partition(lam)
    conj = lam.conjugate()
    return [[(lam[r] - c - 1) + (conj[c] - r - 1) + 1 for c in range(lam[r])] for r in range(len(lam))]


def hook_dimension(lam: Sequence[int]) -> int:
    """f^lambda = n! / product of hook lengths."""
    lam = as_partition(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    return factorial(lam.size) // prod


def skew_count(shape: "SkewShape | Sequence[int]", inner: Sequence[int] | None = None, method: str = "enumerate") -> int:
    """Number of standard fillings of a skew shape.

    ``method="enumerate"`` walks every way to fill the cells in increasing order
    (memoized on the partially filled shape).  ``method="aitken"`` uses the
    determinant of reciprocal factorials and serves only as a cross-check.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape(shape, inner or ())
    if method == "aitken":
        return _aitken(shape)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    return _fill_count(tuple(shape.outer), _padded(shape.inner, len(shape.outer)))


def _padded(inner: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(inner) + (0,) * (length - len(inner))


@lru_cache(maxsize=None)
def _fill_count(outer: tuple[int, ...], current: tuple[int, ...]) -> int:
    # current is the filled region; add the next label at any addable cell inside outer
    if current == outer:
        return 1
    total = 0
    for r in range(len(outer)):
        if current[r] < outer[r] and (r == 0 or current[r - 1] > current[r]):
            nxt = current[:r] + (current[r] + 1,) + current[r + 1 :]
            total += _fill_count(outer, nxt)
    return total


def _aitken(shape: SkewShape) -> int:
    lam = list(shape.outer)
    mu = list(_padded(shape.inner, len(lam)))
    size = len(lam)
    if size == 0:
        return 1
    mat = []
    for i in range(size):
        row = []
        for j in range(size):
            d = lam[i] - mu[j] - i + j
            row.append(Fraction(0) if d < 0 else Fraction(1, factorial(d)))
        mat.append(row)
    return int(factorial(shape.size) * _det(mat))


def _det(mat: list[list[Fraction]]) -> Fraction:
    mat = [row[:] for row in mat]
    size = len(mat)
    det = Fraction(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if mat[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det *= mat[c][c]
        for r in range(c + 1, size):
            f = mat[r][c] / mat[c][c]
            if f:
                for j in range(c, size):
                    mat[r][j] -= f * mat[c][j]
    return det


# --- tables ------------------------------------------------------------------


def half_label(two_k: int) -> str:
    """Render two_k/2 as it appears in row headers: ``0``, ``1/2``, ``3``, ``7/2``."""
    return str(two_k // 2) if two_k % 2 == 0 else f"{two_k}/2"


def bell_table(max_two_k: int, max_n: int, min_n: int = 2) -> list[dict[str, int | str]]:
    """Rows two_k = 1..max_two_k of B(two_k, n) for n in [min_n, max_n] plus B(two_k)."""
    rows = []
    for two_k in range(1, max_two_k + 1):
        row: dict[str, int | str] = {"k": half_label(two_k)}
        for n in range(min_n, max_n + 1):
            row[f"n={n}"] = restricted_bell(two_k, n)
        row["B(2k)"] = bell(two_k)
        rows.append(row)
    return rows


def table_to_csv(rows: list[dict[str, int | str]], header_comment: str | None = None) -> str:
    buf = io.StringIO()
    if header_comment:
        buf.write(f"# {header_comment}\n")
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()
