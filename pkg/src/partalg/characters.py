"""Symmetric group characters, fixed-point class functions and multiplicities.

Everything here is a class function evaluated on cycle types, so permutations
are never materialized except in ``cycle_type`` for callers that hold one.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .algebra import DIAGRAM, AlgebraElement
from .combinatorics import (
    IntegerPartition,
    as_partition,
    integer_partitions,
    skew_count,
    stirling2,
)
from .errors import DimensionError, DomainError
from .setpart import SetPartition


@dataclass(frozen=True)
class ClassData:
    delta: IntegerPartition
    size: int
    z: int


@dataclass(frozen=True)
class CharacterTableRow:
    lam: IntegerPartition
    values: dict[IntegerPartition, int]


def centralizer_order(delta: Sequence[int]) -> int:
    """z_delta = prod_i i^{d_i} d_i! where d_i counts parts equal to i."""
    z = 1
    for part, mult in as_partition(delta).multiplicities().items():
        z *= part**mult * factorial(mult)
    return z


def conjugacy_classes(n: int) -> list[ClassData]:
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for delta in integer_partitions(n):
        z = centralizer_order(delta)
        out.append(ClassData(delta, factorial(n) // z, z))
    return out


def cycle_type(perm: Sequence[int]) -> IntegerPartition:
    """Cycle type of a one-line permutation of 1..n."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        lengths.append(length)
    return IntegerPartition(sorted(lengths, reverse=True))


# --- Murnaghan-Nakayama ------------------------------------------------------


def _beta(lam: tuple[int, ...], length: int) -> list[int]:
    return [lam[i] + length - 1 - i if i < len(lam) else length - 1 - i for i in range(length)]


def _from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = [b - (length - 1 - i) for i, b in enumerate(beta)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], delta: tuple[int, ...]) -> int:
    if not delta:
        return 1 if not lam else 0
    r, rest = delta[0], delta[1:]
    length = len(lam)
    beta = _beta(lam, length)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # each bead jumped over is one row of the rim hook beyond the first
        height = sum(1 for x in beta if target < x < b)
        new = [target if x == b else x for x in beta]
        total += (-1) ** height * _mn(_from_beta(new), rest)
    return total


def irreducible_character(lam: Sequence[int], delta: Sequence[int]) -> int:
    """chi_lambda evaluated on the class of cycle type delta."""
    lam, delta = as_partition(lam), as_partition(delta)
    if lam.size != delta.size:
        raise DimensionError(f"{lam} and {delta} have different sizes")
    return _mn(tuple(lam), tuple(delta))


def character_table(n: int) -> list[CharacterTableRow]:
    classes = [c.delta for c in conjugacy_classes(n)]
    return [
        CharacterTableRow(lam, {d: irreducible_character(lam, d) for d in classes})
        for lam in integer_partitions(n)
    ]


def character_table_csv(n: int, header_comment: str | None = None) -> str:
    classes = [c.delta for c in conjugacy_classes(n)]
    buf = io.StringIO()
    if header_comment:
        buf.write(f"# {header_comment}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda"] + [str(d) for d in classes])
    for row in character_table(n):
        w.writerow([str(row.lam)] + [row.values[d] for d in classes])
    return buf.getvalue()


# --- fixed points -------------------------------------------------------------------


def fixed_points(delta: Sequence[int]) -> int:
    return sum(1 for p in delta if p == 1)


def power_fixed_points(delta: Sequence[int], m: int) -> int:
    """F(sigma^m) for sigma of cycle type delta: sum over d | m of d times the number of d-cycles."""
    return sum(p for p in delta if m % p == 0)


def fixed_point_power(delta: Sequence[int], mu: Sequence[int]) -> int:
    """F_mu(delta) = prod_i F(sigma^{mu_i})."""
    out = 1
    for m in mu:
        out *= power_fixed_points(delta, m)
    return out


# --- multiplicities ------------------------------------------------------------------


def _stirling_skew(lam: IntegerPartition, k: int, n: int, shift: int) -> int:
    # sum over t of S(k+shift, t+shift) f^{lam/[n-t]}, t from |lam#| to n
    total = 0
    for t in range(lam.sharp().size, n + 1):
        s = stirling2(k + shift, t + shift)
        if s == 0 or (lam[0] if lam else 0) < n - t:
            continue
        total += s * skew_count(lam, (n - t,) if n - t else ())
    return total


def multiplicity(lam: Sequence[int], k: int, n: int, method: str = "character") -> int:
    """Multiplicity of the S_n-irreducible lam in the k-fold tensor power of the permutation module."""
    lam = as_partition(lam)
    if lam.size != n:
        raise DimensionError(f"{lam} is not a partition of {n}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if method == "character":
        total = sum(
            Fraction(fixed_points(c.delta) ** k * irreducible_character(lam, c.delta), c.z)
            for c in conjugacy_classes(n)
        )
        return _integral(total)
    if method == "stirling_skew":
        return _stirling_skew(lam, k, n, 0)
    if method == "bratteli":
        from .tableaux import path_counts

        return path_counts(n, 2 * k)[2 * k].get(lam, 0)
    raise ValueError(f"unknown method {method!r}")


def half_multiplicity(mu: Sequence[int], k: int, n: int, method: str = "character") -> int:
    """Multiplicity of the S_{n-1}-irreducible mu in the k-fold tensor power restricted to S_{n-1}.

    This is the dimension of the irreducible module of the half-integer
    centralizer labelled by mu.
    """
    mu = as_partition(mu)
    if mu.size != n - 1:
        raise DimensionError(f"{mu} is not a partition of {n - 1}")
    if method == "character":
        if n == 1:
            return 1
        total = sum(
            Fraction((fixed_points(c.delta) + 1) ** k * irreducible_character(mu, c.delta), c.z)
            for c in conjugacy_classes(n - 1)
        )
        return _integral(total)
    if method == "stirling_skew":
        return _stirling_skew(mu, k, n - 1, 1)
    if method == "bratteli":
        from .tableaux import path_counts

        return path_counts(n, 2 * k + 1)[2 * k + 1].get(mu, 0)
    raise ValueError(f"unknown method {method!r}")


def _integral(q: Fraction) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {q}")
    return q.numerator


# --- partition algebra characters ---------------------------------------------------


def gamma_mu(mu: Sequence[int], k: int, n: int) -> AlgebraElement:
    """Diagram of cycles (1..mu_1)(...)... side by side, then empty columns.

    Each cycle sends column j to column j+1 (cyclically) within its group:
    bottom vertex j is joined to top vertex j+1.  An empty column has its top
    and bottom vertices as separate singletons.
    """
    mu = as_partition(mu)
    ell = mu.size
    if ell > k:
        raise DomainError(f"|mu| = {ell} exceeds k = {k}")
    blocks: list[tuple[int, ...]] = []
    start = 1
    for r in mu:
        for j in range(r):
            target = start + (j + 1) % r
            blocks.append((start + j, k + target))
        start += r
    for col in range(ell + 1, k + 1):
        blocks += [(col,), (k + col,)]
    return AlgebraElement(2 * k, n, DIAGRAM, {SetPartition(blocks, 2 * k): 1})


def partition_algebra_character(lam: Sequence[int], mu: Sequence[int], k: int, n: int) -> Fraction:
    """xi_lam(gamma_mu) = n^{k-l} sum_delta z_delta^{-1} F_mu(delta) chi_lam(delta), for n >= 2k."""
    lam, mu = as_partition(lam), as_partition(mu)
    if n < 2 * k:
        raise DomainError(f"character formula needs n >= 2k, got n={n}, k={k}")
    if lam.size != n:
        raise DimensionError(f"{lam} is not a partition of {n}")
    if mu.size > k:
        raise DomainError(f"|mu| = {mu.size} exceeds k = {k}")
    total = sum(
        Fraction(fixed_point_power(c.delta, mu) * irreducible_character(lam, c.delta), c.z)
        for c in conjugacy_classes(n)
    )
    return n ** (k - mu.size) * total
