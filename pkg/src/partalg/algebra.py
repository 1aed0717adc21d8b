"""Elements of the partition algebras P_k(n) and P_{k+1/2}(n).

An element is a finite linear combination of set partitions in either the
diagram basis or the orbit basis.  The rank is encoded by a single integer
``two_k``: even values are the integer levels, odd values the half-integer
levels.  Half-integer elements are stored on the ground set of the next integer
level with the last column forced into one block.

Vertex convention: bottom row 1..k, top row k+1..2k, column i is {i, k+i}.
In a product ``a * b`` the diagram of ``a`` sits above the diagram of ``b``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .combinatorics import falling_factorial
from .errors import DimensionError, DomainError, ParityError, ParseError
from .linalg import fraction_str, parse_fraction
from .setpart import (
    SetPartition,
    coarsenings,
    coarsenings_with_mobius,
    identity_partition,
    propagating_data,
)

DIAGRAM = "diagram"
ORBIT = "orbit"
BASES = (DIAGRAM, ORBIT)

Scalar = Union[int, Fraction]


def columns(two_k: int) -> int:
    """Number of columns of the diagrams used to store level two_k/2."""
    return (two_k + 1) // 2


def in_half_algebra(pi: SetPartition) -> bool:
    """True when the last column of ``pi`` is contained in a single block."""
    k = pi.m // 2
    where = pi.block_of()
    return where[k] == where[2 * k]


class AlgebraElement:
    """Immutable linear combination of set partitions with rational coefficients."""

    __slots__ = ("two_k", "n", "basis", "terms")

    def __init__(
        self,
        two_k: int,
        n: int,
        basis: str,
        terms: Mapping[SetPartition, Scalar] | None = None,
        *,
        check: bool = True,
    ):
        if two_k < 0:
            raise ValueError("two_k must be nonnegative")
        if n < 1:
            raise ValueError("n must be positive")
        if basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}, got {basis!r}")
        self.two_k = two_k
        self.n = n
        self.basis = basis
        # coefficients are ints or Fractions; both are exact and compare/hash alike
        clean: dict[SetPartition, Scalar] = {}
        ground = 2 * columns(two_k)
        for pi, c in (terms or {}).items():
            if not c:
                continue
            if check:
                if not isinstance(pi, SetPartition):
                    raise TypeError("keys must be SetPartition instances")
                if pi.m != ground:
                    raise DimensionError(f"key {pi} has ground set {pi.m}, expected {ground}")
                if two_k % 2 and not in_half_algebra(pi):
                    raise ParityError(f"{pi} does not keep column {ground // 2} in one block")
            if check and not isinstance(c, (int, Fraction)):
                raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")
            clean[pi] = c
        self.terms = clean

    # -- basic protocol --------------------------------------------------------
    @property
    def k(self) -> Fraction:
        return Fraction(self.two_k, 2)

    def same_algebra(self, other: "AlgebraElement") -> None:
        if (self.two_k, self.n) != (other.two_k, other.n):
            raise DimensionError(
                f"elements live in P_{self.k}({self.n}) and P_{other.k}({other.n})"
            )

    def __repr__(self) -> str:
        return f"AlgebraElement(two_k={self.two_k}, n={self.n}, basis={self.basis!r}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sym = "d" if self.basis == DIAGRAM else "x"
        parts = []
        for pi in sorted(self.terms):
            c = self.terms[pi]
            parts.append(f"{c}*{sym}[{pi}]" if c != 1 else f"{sym}[{pi}]")
        return " + ".join(parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if (self.two_k, self.n) != (other.two_k, other.n):
            return False
        if self.basis != other.basis:
            other = change_basis(other, self.basis)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.two_k, self.n, self.basis, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def _like(self, terms: Mapping[SetPartition, Scalar]) -> "AlgebraElement":
        return AlgebraElement(self.two_k, self.n, self.basis, terms, check=False)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self.same_algebra(other)
        if other.basis != self.basis:
            other = change_basis(other, self.basis)
        out = dict(self.terms)
        for pi, c in other.terms.items():
            out[pi] = out.get(pi, 0) + c
        return self._like(out)

    def __neg__(self) -> "AlgebraElement":
        return self._like({pi: -c for pi, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "AlgebraElement":
        return self._like({pi: v * c for pi, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other: Scalar) -> "AlgebraElement":
        return self.scale(Fraction(1) / Fraction(other))

    def __pow__(self, exponent: int) -> "AlgebraElement":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = identity(self.two_k, self.n, self.basis)
        for _ in range(exponent):
            result = result * self
        return result

    # -- serialization ---------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "two_k": self.two_k,
            "n": self.n,
            "basis": self.basis,
            "terms": [
                {"partition": str(pi), "coeff": fraction_str(self.terms[pi])}
                for pi in sorted(self.terms)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, data: "str | dict") -> "AlgebraElement":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad element JSON: {exc.msg}", exc.pos) from None
        try:
            two_k, n, basis = int(data["two_k"]), int(data["n"]), data["basis"]
            raw = data["terms"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"element JSON is missing or has a bad field: {exc}") from None
        ground = 2 * columns(two_k)
        terms: dict[SetPartition, Fraction] = {}
        for item in raw:
            pi = SetPartition.parse(item["partition"], ground)
            terms[pi] = terms.get(pi, 0) + parse_fraction(item.get("coeff", "1"))
        try:
            return cls(two_k, n, basis, terms)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def make_element(
    basis: str,
    terms: Mapping["SetPartition | str", Scalar] | Iterable[tuple["SetPartition | str", Scalar]],
    two_k: int,
    n: int,
) -> AlgebraElement:
    """Build an element, parsing string keys and summing repeated keys."""
    items = terms.items() if isinstance(terms, Mapping) else terms
    ground = 2 * columns(two_k)
    out: dict[SetPartition, Fraction] = {}
    for key, c in items:
        pi = key if isinstance(key, SetPartition) else SetPartition.parse(key, ground)
        out[pi] = out.get(pi, 0) + Fraction(c)
    return AlgebraElement(two_k, n, basis, out)


def basis_element(pi: "SetPartition | str", two_k: int, n: int, basis: str = DIAGRAM) -> AlgebraElement:
    return make_element(basis, {pi: 1}, two_k, n)


def identity(two_k: int, n: int, basis: str = DIAGRAM) -> AlgebraElement:
    """The unit: the diagram with k vertical strands (a single term in either basis)."""
    return AlgebraElement(two_k, n, basis, {identity_partition(columns(two_k)): 1})


def zero(two_k: int, n: int, basis: str = DIAGRAM) -> AlgebraElement:
    return AlgebraElement(two_k, n, basis)


# --- change of basis ---------------------------------------------------------


def to_orbit(e: AlgebraElement) -> AlgebraElement:
    """d_pi = sum of x_rho over all rho coarser than pi."""
    if e.basis == ORBIT:
        return e
    out: dict[SetPartition, Fraction] = {}
    for pi, c in e.terms.items():
        for rho in coarsenings(pi):
            out[rho] = out.get(rho, 0) + c
    return AlgebraElement(e.two_k, e.n, ORBIT, out, check=False)


def to_diagram(e: AlgebraElement) -> AlgebraElement:
    """x_pi = sum of mu(pi, rho) d_rho over all rho coarser than pi."""
    if e.basis == DIAGRAM:
        return e
    out: dict[SetPartition, Fraction] = {}
    for pi, c in e.terms.items():
        for rho, mu in coarsenings_with_mobius(pi):
            out[rho] = out.get(rho, 0) + c * mu
    return AlgebraElement(e.two_k, e.n, DIAGRAM, out, check=False)


def change_basis(e: AlgebraElement, basis: str) -> AlgebraElement:
    if basis == ORBIT:
        return to_orbit(e)
    if basis == DIAGRAM:
        return to_diagram(e)
    raise ValueError(f"unknown basis {basis!r}")


# --- diagram multiplication ---------------------------------------------------


def _stack(p1: SetPartition, p2: SetPartition) -> tuple[list[int], int]:
    """Union-find over three rows: result bottom 0..k-1, middle k..2k-1, result top 2k..3k-1."""
    k = p1.m // 2
    parent = list(range(3 * k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(nodes: list[int]) -> None:
        root = find(nodes[0])
        for v in nodes[1:]:
            r = find(v)
            if r != root:
                parent[r] = root

    # upper diagram: its bottom row is the middle, its top row the result top
    for b in p1.blocks:
        join([k + v - 1 for v in b])
    # lower diagram: its bottom row is the result bottom, its top row the middle
    for b in p2.blocks:
        join([v - 1 for v in b])
    return [find(x) for x in range(3 * k)], k


@lru_cache(maxsize=1 << 18)
def diagram_product(p1: SetPartition, p2: SetPartition) -> tuple[SetPartition, int]:
    """(pi1 * pi2, number of components confined to the middle row)."""
    if p1.m != p2.m or p1.m % 2:
        raise DimensionError("diagram product needs equal even ground sets")
    roots, k = _stack(p1, p2)
    groups: dict[int, list[int]] = {}
    for x in range(k):
        groups.setdefault(roots[x], []).append(x + 1)
    for x in range(2 * k, 3 * k):
        groups.setdefault(roots[x], []).append(x - k + 1)
    middle_roots = {roots[x] for x in range(k, 2 * k)}
    loops = len(middle_roots - set(groups))
    blocks = tuple(sorted(tuple(g) for g in groups.values()))
    return SetPartition._trusted(2 * k, blocks), loops


def _diagram_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    n = a.n
    out: dict[SetPartition, Fraction] = {}
    for p1, c1 in a.terms.items():
        for p2, c2 in b.terms.items():
            rho, loops = diagram_product(p1, p2)
            out[rho] = out.get(rho, 0) + c1 * c2 * n**loops
    return AlgebraElement(a.two_k, n, DIAGRAM, out, check=False)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product ``a b`` in P_k(n).

    Two orbit-basis operands are multiplied with the orbit rule (abstract mode)
    and the result stays in the orbit basis.  Any other combination is
    converted to the diagram basis and multiplied there.
    """
    a.same_algebra(b)
    if a.basis == ORBIT and b.basis == ORBIT:
        return multiply_orbit(a, b)
    return _diagram_multiply(to_diagram(a), to_diagram(b))


# --- orbit multiplication ------------------------------------------------------


def _partial_matchings(left: int, right: int) -> Iterable[list[tuple[int, int]]]:
    """All sets of disjoint pairs (i, j) with i < left, j < right."""
    def rec(i: int, used: frozenset) -> Iterable[list[tuple[int, int]]]:
        if i == left:
            yield []
            return
        for rest in rec(i + 1, used):
            yield rest
        for j in range(right):
            if j not in used:
                for rest in rec(i + 1, used | {j}):
                    yield [(i, j)] + rest

    return rec(0, frozenset())


@lru_cache(maxsize=1 << 16)
def _rows(pi: SetPartition) -> tuple[SetPartition, SetPartition]:
    bottom, top, _ = propagating_data(pi)
    return bottom, top


@lru_cache(maxsize=1 << 18)
def orbit_product(p1: SetPartition, p2: SetPartition, n: int) -> tuple[tuple[SetPartition, int], ...]:
    """Structure constants of x_{p1} x_{p2} in the abstract algebra: ((rho, coeff), ...)."""
    if p1.m != p2.m or p1.m % 2:
        raise DimensionError("orbit product needs equal even ground sets")
    k = p1.m // 2
    if _rows(p1)[0] != _rows(p2)[1]:
        return ()
    star, loops = diagram_product(p1, p2)
    top_only = [b for b in p1.blocks if b[0] > k]  # blocks of p1 avoiding its bottom row
    bottom_only = [b for b in p2.blocks if b[-1] <= k]
    # such blocks survive unchanged as blocks of the stacked product
    star_blocks = list(star.blocks)
    index = {b: i for i, b in enumerate(star_blocks)}
    top_idx = [index[b] for b in top_only]
    bot_idx = [index[b] for b in bottom_only]
    out = []
    for matching in _partial_matchings(len(top_idx), len(bot_idx)):
        if matching:
            merged = set()
            blocks = []
            for i, j in matching:
                ti, bj = top_idx[i], bot_idx[j]
                merged.update((ti, bj))
                blocks.append(tuple(sorted(star_blocks[ti] + star_blocks[bj])))
            blocks.extend(b for i, b in enumerate(star_blocks) if i not in merged)
            rho = SetPartition._trusted(2 * k, tuple(sorted(blocks)))
        else:
            rho = star
        coeff = falling_factorial(n - len(rho), loops)
        if coeff:
            out.append((rho, coeff))
    return tuple(out)


def multiply_orbit(a: AlgebraElement, b: AlgebraElement, mode: str = "abstract") -> AlgebraElement:
    """Orbit-basis product.

    ``mode="abstract"`` keeps every term, which is the product in P_k(n).
    ``mode="image"`` additionally drops terms with more than n blocks, which is
    the product in the centralizer algebra (the quotient by the kernel of the
    tensor representation).
    """
    if mode not in ("abstract", "image"):
        raise ValueError(f"mode must be 'abstract' or 'image', got {mode!r}")
    a.same_algebra(b)
    a, b = to_orbit(a), to_orbit(b)
    n = a.n
    # only pairs whose middle rows match can contribute
    by_top: dict[SetPartition, list[tuple[SetPartition, Fraction]]] = {}
    for p2, c2 in b.terms.items():
        by_top.setdefault(_rows(p2)[1], []).append((p2, c2))
    out: dict[SetPartition, Fraction] = {}
    for p1, c1 in a.terms.items():
        for p2, c2 in by_top.get(_rows(p1)[0], ()):
            c = c1 * c2
            for rho, coeff in orbit_product(p1, p2, n):
                if mode == "image" and len(rho) > n:
                    continue
                out[rho] = out.get(rho, 0) + c * coeff
    return AlgebraElement(a.two_k, n, ORBIT, out, check=False)


def truncate(e: AlgebraElement) -> AlgebraElement:
    """Drop orbit terms with more than n blocks (image in the centralizer)."""
    e = to_orbit(e)
    return e._like({pi: c for pi, c in e.terms.items() if len(pi) <= e.n})


# --- generators ---------------------------------------------------------------


def _check_index(i: int, lo: int, hi: int, name: str) -> None:
    if not lo <= i <= hi:
        raise IndexError(f"{name} index {i} outside [{lo}, {hi}]")


def generator_s(i: int, k: int, n: int) -> AlgebraElement:
    """Swap of columns i and i+1."""
    _check_index(i, 1, k - 1, "s")
    blocks = [(j, k + j) for j in range(1, k + 1) if j not in (i, i + 1)]
    blocks += [(i, k + i + 1), (i + 1, k + i)]
    return AlgebraElement(2 * k, n, DIAGRAM, {SetPartition(blocks, 2 * k): 1})


def generator_p(i: int, k: int, n: int) -> AlgebraElement:
    """(1/n) times the diagram whose column i is cut into two singletons."""
    _check_index(i, 1, k, "p")
    blocks = [(j, k + j) for j in range(1, k + 1) if j != i] + [(i,), (k + i,)]
    return AlgebraElement(2 * k, n, DIAGRAM, {SetPartition(blocks, 2 * k): Fraction(1, n)})


def generator_b(i: int, k: int, n: int) -> AlgebraElement:
    """The diagram joining columns i and i+1 into one block (the half-step generator)."""
    _check_index(i, 1, k - 1, "b")
    blocks = [(j, k + j) for j in range(1, k + 1) if j not in (i, i + 1)]
    blocks.append((i, i + 1, k + i, k + i + 1))
    return AlgebraElement(2 * k, n, DIAGRAM, {SetPartition(blocks, 2 * k): 1})


def generator_p_half(two_l: int, k: int, n: int) -> AlgebraElement:
    """p_l for l = two_l/2 in {1/2, 1, ..., k+1/2}: p_{1/2} and p_{k+1/2} are the identity."""
    if two_l in (1, 2 * k + 1):
        return identity(2 * k, n)
    if two_l % 2 == 0:
        return generator_p(two_l // 2, k, n)
    return generator_b((two_l - 1) // 2, k, n)


@dataclass(frozen=True)
class PresentationReport:
    relation: str
    clause: str
    indices: tuple
    holds: bool
    witness: tuple[AlgebraElement, AlgebraElement] | None = None

    def to_dict(self) -> dict:
        out = {"relation": self.relation, "clause": self.clause, "indices": list(self.indices), "holds": self.holds}
        if self.witness is not None:
            lhs, rhs = self.witness
            out["witness"] = {"lhs": lhs.to_dict(), "rhs": rhs.to_dict()}
        return out


def _half(two: int) -> str:
    return str(two // 2) if two % 2 == 0 else f"{two}/2"


def check_presentation(
    k: int, n: int, overrides: Mapping[str, AlgebraElement] | None = None
) -> list[PresentationReport]:
    """Evaluate every instance of the Coxeter, idempotent and mixed relations.

    Generators are named ``s{i}`` and ``p{two_l}`` (so ``p3`` is p_{3/2}).
    ``overrides`` replaces named generators, which is how a perturbed generator
    is fed in as a negative control.
    """
    overrides = dict(overrides or {})
    one = identity(2 * k, n)

    def s(i: int) -> AlgebraElement:
        return overrides.get(f"s{i}") or generator_s(i, k, n)

    def p(two_l: int) -> AlgebraElement:
        return overrides.get(f"p{two_l}") or generator_p_half(two_l, k, n)

    reports: list[PresentationReport] = []

    def record(clause: str, name: str, idx: tuple, lhs: AlgebraElement, rhs: AlgebraElement) -> None:
        ok = to_diagram(lhs) == to_diagram(rhs)
        reports.append(PresentationReport(name, clause, idx, ok, None if ok else (lhs, rhs)))

    # (a) Coxeter relations of the symmetric group
    for i in range(1, k):
        record("a", "s_i^2 = 1", (i,), s(i) * s(i), one)
    for i in range(1, k):
        for j in range(i + 2, k):
            record("a", "s_i s_j = s_j s_i", (i, j), s(i) * s(j), s(j) * s(i))
    for i in range(1, k - 1):
        record("a", "s_i s_i+1 s_i = s_i+1 s_i s_i+1", (i,), s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1))

    # (b) idempotent relations among p_l, l in {1, 3/2, ..., k}
    ells = range(2, 2 * k + 1)
    for l in ells:
        record("b", "p_l^2 = p_l", (_half(l),), p(l) * p(l), p(l))
    for l in ells:
        for m in ells:
            if m > l and m - l != 1:
                record("b", "p_l p_m = p_m p_l", (_half(l), _half(m)), p(l) * p(m), p(m) * p(l))
    for l in ells:
        for m in (l - 1, l + 1):
            record("b", "p_l p_(l+-1/2) p_l = p_l", (_half(l), _half(m)), p(l) * p(m) * p(l), p(l))

    # (c) mixed relations
    for i in range(1, k):
        record("c", "s_i p_i p_i+1 = p_i p_i+1", (i,), s(i) * p(2 * i) * p(2 * i + 2), p(2 * i) * p(2 * i + 2))
        record("c", "s_i p_i s_i = p_i+1", (i,), s(i) * p(2 * i) * s(i), p(2 * i + 2))
        record("c", "s_i p_i+1/2 = p_i+1/2", (i,), s(i) * p(2 * i + 1), p(2 * i + 1))
        record("c", "p_i+1/2 s_i = p_i+1/2", (i,), p(2 * i + 1) * s(i), p(2 * i + 1))
    for i in range(1, k - 1):
        lhs = s(i) * s(i + 1) * p(2 * i + 1) * s(i + 1) * s(i)
        record("c", "s_i s_i+1 p_i+1/2 s_i+1 s_i = p_i+3/2", (i,), lhs, p(2 * i + 3))
    for i in range(1, k):
        for l in ells:
            if l not in (2 * i - 1, 2 * i, 2 * i + 1, 2 * i + 2, 2 * i + 3):
                record("c", "s_i p_l = p_l s_i", (i, _half(l)), s(i) * p(l), p(l) * s(i))
    return reports


# --- essential idempotents and the tower ------------------------------------------


def _e_partition(kc: int, n: int) -> SetPartition:
    split = n + 1 - kc if kc <= n else 0
    blocks: list[tuple[int, ...]] = []
    for i in range(1, kc + 1):
        if i <= split:
            blocks += [(i,), (kc + i,)]
        else:
            blocks.append((i, kc + i))
    return SetPartition(blocks, 2 * kc)


def e_kn(two_k: int, n: int) -> AlgebraElement:
    """The orbit element generating the kernel of the tensor representation (needs two_k > n).

    For n >= k > n/2 the first n+1-k columns are cut into top and bottom
    singletons and the remaining columns are vertical strands (n+1 blocks).
    For k > n every column is a vertical strand.  At a half-integer level the
    last column is a vertical strand, so the same orbit element is used.
    """
    if two_k <= n:
        raise DomainError(f"e_kn needs 2k > n, got 2k={two_k}, n={n}")
    kc = columns(two_k)
    return AlgebraElement(two_k, n, ORBIT, {_e_partition(kc, n): 1})


def c_kn(two_k: int, n: int) -> int:
    """Scalar c with e_kn^2 = c e_kn: (-1)^(n+1-k) (n+1-k)! when n >= k, else 1."""
    if two_k <= n:
        raise DomainError(f"c_kn needs 2k > n, got 2k={two_k}, n={n}")
    kc = columns(two_k)
    if kc > n:
        return 1
    j = n + 1 - kc
    return (-1) ** j * factorial(j)


def _add_column(pi: SetPartition) -> SetPartition:
    k = pi.m // 2
    blocks = [tuple(v if v <= k else v + 1 for v in b) for b in pi.blocks]
    blocks.append((k + 1, 2 * k + 2))
    return SetPartition._trusted(2 * k + 2, tuple(sorted(blocks)))


def embed(e: AlgebraElement, target_two_k: int) -> AlgebraElement:
    """Image of ``e`` in the larger algebra of the tower, adding vertical strands on the right.

    Each diagram d_pi maps to d_pi with an extra vertical strand.  Orbit input is
    routed through the diagram basis and returned in the orbit basis.
    """
    if target_two_k < e.two_k:
        raise DomainError(f"cannot embed two_k={e.two_k} into smaller two_k={target_two_k}")
    basis = e.basis
    d = to_diagram(e)
    terms = dict(d.terms)
    two_k = d.two_k
    while two_k < target_two_k:
        if two_k % 2 == 0:
            terms = {_add_column(pi): c for pi, c in terms.items()}
        two_k += 1
    out = AlgebraElement(target_two_k, e.n, DIAGRAM, terms, check=False)
    return change_basis(out, basis)
