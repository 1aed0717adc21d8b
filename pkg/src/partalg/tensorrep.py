"""The tensor representation of P_k(n) on k-fold tensors of the permutation module.

Basis vectors of the tensor space are k-tuples over [1, n], indexed in
mixed radix with the leftmost factor most significant (values are stored
0-based internally).  A matrix entry sits at (row, col) = (top tuple,
bottom tuple): the bottom row of a diagram reads the column tuple and the top
row the row tuple.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import (
    DIAGRAM,
    ORBIT,
    AlgebraElement,
    basis_element,
    columns,
    generator_b,
    generator_p,
    generator_s,
    in_half_algebra,
    multiply,
    to_diagram,
    to_orbit,
)
from .errors import BudgetExceeded, DimensionError, ParityError
from .linalg import RowReducer, SparseExactMatrix, rank
from .setpart import SetPartition, enumerate_set_partitions

DEFAULT_BUDGET = 20000


def standard_labeling(pi: SetPartition) -> tuple[int, ...]:
    """Labels 1..|pi| assigned to 1..m by first occurrence of each block."""
    return tuple(lab + 1 for lab in pi.rgs())


def tuple_pattern(values: Sequence[int]) -> SetPartition:
    """The set partition recording which positions of ``values`` are equal."""
    return SetPartition.from_labels(values)


def tuple_index(values: Sequence[int], n: int) -> int:
    """Mixed-radix index of a 0-based tuple, leftmost entry most significant."""
    idx = 0
    for v in values:
        idx = idx * n + v
    return idx


def _check_budget(n: int, k: int, budget: int | None) -> int:
    dim = n**k
    limit = DEFAULT_BUDGET if budget is None else budget
    if dim > limit:
        raise BudgetExceeded(f"matrix dimension n^k = {dim} exceeds budget {limit}")
    return dim


def _assignments(count: int, n: int, injective: bool) -> Iterable[tuple[int, ...]]:
    if injective:
        return itertools.permutations(range(n), count)
    return itertools.product(range(n), repeat=count)


def _basis_entries(pi: SetPartition, n: int, basis: str, frozen_last: bool) -> Iterable[tuple[int, int]]:
    """(row, col) positions of the 1-entries of Phi(d_pi) or Phi(x_pi)."""
    kc = pi.m // 2
    blocks = pi.blocks
    injective = basis == ORBIT
    if frozen_last:
        # the block holding the last column is pinned to value n-1 (0-based)
        pinned = next(i for i, b in enumerate(blocks) if kc in b)
        free = [i for i in range(len(blocks)) if i != pinned]
        values_pool = range(n - 1) if injective else range(n)
        if injective:
            choices = itertools.permutations(values_pool, len(free))
        else:
            choices = itertools.product(values_pool, repeat=len(free))
        width = kc - 1
    else:
        free = list(range(len(blocks)))
        choices = _assignments(len(blocks), n, injective)
        width = kc
    for choice in choices:
        value = [0] * len(blocks)
        if frozen_last:
            value[pinned] = n - 1
        for i, v in zip(free, choice):
            value[i] = v
        point = [0] * (2 * kc)
        for i, b in enumerate(blocks):
            for pos in b:
                point[pos - 1] = value[i]
        bottom = point[:width]
        top = point[kc : kc + width]
        yield tuple_index(top, n), tuple_index(bottom, n)


def _assemble(e: AlgebraElement, n: int, dim: int, frozen_last: bool) -> SparseExactMatrix:
    entries: dict[tuple[int, int], Fraction] = {}
    for pi, c in e.terms.items():
        if e.basis == ORBIT and len(pi) > n:
            continue
        for key in _basis_entries(pi, n, e.basis, frozen_last):
            entries[key] = entries.get(key, 0) + c
    return SparseExactMatrix(dim, entries)


def phi(e: AlgebraElement, n: int | None = None, budget: int | None = None) -> SparseExactMatrix:
    """Matrix of ``e`` acting on (C^n)^{tensor k}.

    Orbit basis: x_pi has a 1 at (r', r) exactly when equal coordinates of
    (r, r') are the ones sharing a block of pi, so it vanishes when pi has
    more than n blocks.  Diagram basis: d_pi has a 1 whenever coordinates in a
    common block agree.
    """
    n = e.n if n is None else n
    if e.two_k % 2:
        raise ParityError("half-integer elements are represented by phi_half")
    k = e.two_k // 2
    dim = _check_budget(n, k, budget)
    return _assemble(e, n, dim, frozen_last=False)


def phi_half(e: AlgebraElement, n: int | None = None, budget: int | None = None) -> SparseExactMatrix:
    """Matrix of a half-integer element on k-tuples extended by a frozen last coordinate n."""
    n = e.n if n is None else n
    if e.two_k % 2 == 0:
        raise ParityError("integer-level elements are represented by phi")
    k = e.two_k // 2
    dim = _check_budget(n, k, budget)
    return _assemble(e, n, dim, frozen_last=True)


def represent(e: AlgebraElement, n: int | None = None, budget: int | None = None) -> SparseExactMatrix:
    """phi or phi_half according to the parity of two_k."""
    return phi_half(e, n, budget) if e.two_k % 2 else phi(e, n, budget)


def permutation_matrix(sigma: Sequence[int], k: int, budget: int | None = None) -> SparseExactMatrix:
    """Diagonal action of sigma (a 1-based one-line permutation of [1, n]) on k-tuples."""
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{list(sigma)} is not a permutation of 1..{n}")
    dim = _check_budget(n, k, budget)
    entries = {}
    for tup in itertools.product(range(n), repeat=k):
        image = [sigma[v] - 1 for v in tup]
        entries[(tuple_index(image, n), tuple_index(tup, n))] = 1
    return SparseExactMatrix(dim, entries)


def adjacent_transpositions(n: int, fix_last: bool = False) -> list[list[int]]:
    """One-line forms of (i, i+1) generating S_n, or S_{n-1} when ``fix_last``."""
    top = n - 2 if fix_last else n - 1
    out = []
    for i in range(1, top + 1):
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        out.append(perm)
    return out


def commutant_check(M: SparseExactMatrix, n: int, k: int, fix_last: bool = False) -> bool:
    """True iff M commutes with every adjacent transposition of S_n (or S_{n-1})."""
    if M.dim != n**k:
        raise DimensionError(f"matrix dimension {M.dim} is not {n}^{k}")
    for perm in adjacent_transpositions(n, fix_last):
        P = permutation_matrix(perm, k, budget=M.dim)
        if P @ M != M @ P:
            return False
    return True


# --- image and kernel ------------------------------------------------------------


def _ground(two_k: int) -> int:
    return 2 * columns(two_k)


def level_partitions(two_k: int, max_blocks: int | None = None) -> list[SetPartition]:
    """Keys of the basis at level two_k/2 (half levels keep the last column together)."""
    parts = enumerate_set_partitions(_ground(two_k), max_blocks)
    if two_k % 2:
        parts = [p for p in parts if in_half_algebra(p)]
    return parts


def orbit_count(two_k: int, n: int) -> int:
    """Number of basis keys at level two_k/2 with at most n blocks."""
    return len(level_partitions(two_k, n))


def _tuple_vectors(two_k: int, n: int, keys: list[SetPartition]) -> list[dict[int, int]]:
    # scan every point of [n]^(2k) once and file it under its equality pattern
    kc = columns(two_k)
    wanted = {pi: i for i, pi in enumerate(keys)}
    vectors: list[dict[int, int]] = [{} for _ in keys]
    for idx, point in enumerate(itertools.product(range(n), repeat=2 * kc)):
        if two_k % 2 and (point[kc - 1] != n - 1 or point[2 * kc - 1] != n - 1):
            continue
        slot = wanted.get(tuple_pattern(point))
        if slot is not None:
            vectors[slot][idx] = 1
    return vectors


def image_dimension(two_k: int, n: int, path: str = "tuple", budget: int | None = None) -> int:
    """Exact rank of the images of the orbit basis elements with at most n blocks.

    ``path="tuple"`` vectorizes each x_pi as its 2k-tuple indicator; ``path="matrix"``
    materializes the matrices and flattens them.  The two must agree.
    """
    keys = level_partitions(two_k, n)
    kc = columns(two_k)
    width = kc - (two_k % 2)
    _check_budget(n, width, budget)
    if path == "tuple":
        return rank(_tuple_vectors(two_k, n, keys))
    if path == "matrix":
        mats = (represent(basis_element(pi, two_k, n, ORBIT), n, budget) for pi in keys)
        return rank(m.vectorize() for m in mats)
    raise ValueError(f"unknown path {path!r}")


def kernel_basis(two_k: int, n: int) -> list[AlgebraElement]:
    """Orbit elements x_pi with more than n blocks."""
    return [basis_element(pi, two_k, n, ORBIT) for pi in level_partitions(two_k) if len(pi) > n]


# --- two-sided ideals ---------------------------------------------------------------


def _coords(e: AlgebraElement, index: dict[SetPartition, int]) -> dict[int, Fraction]:
    return {index[pi]: c for pi, c in e.terms.items()}


def _element(vec: dict[int, Fraction], keys: list[SetPartition], two_k: int, n: int) -> AlgebraElement:
    return AlgebraElement(two_k, n, ORBIT, {keys[i]: c for i, c in vec.items()}, check=False)


def _generators(two_k: int, n: int) -> list[AlgebraElement]:
    kc = columns(two_k)
    gens: list[AlgebraElement] = []
    if two_k % 2 == 0:
        gens += [generator_s(i, kc, n) for i in range(1, kc)]
        gens += [generator_p(i, kc, n) for i in range(1, kc + 1)]
        gens += [generator_b(i, kc, n) for i in range(1, kc)]
    else:
        # the half level: permutations of the first k columns, cuts of those
        # columns, and joins of neighbouring columns including the last one
        gens += [generator_s(i, kc, n) for i in range(1, kc - 1)]
        gens += [generator_p(i, kc, n) for i in range(1, kc)]
        gens += [generator_b(i, kc, n) for i in range(1, kc)]
    # drop the 1/n on the cut generators: spans are unaffected and coefficients stay integral
    return [AlgebraElement(two_k, n, DIAGRAM, {pi: 1 for pi in g.terms}) for g in gens]


def principal_ideal_dimension(
    g: AlgebraElement, method: str = "products", max_two_k: int = 6
) -> int:
    """Dimension of the two-sided ideal generated by ``g``.

    ``method="products"`` spans all a g b over basis elements a, b: first a
    basis of the left ideal {a g}, then every basis vector times every b.
    ``method="closure"`` saturates span{g} under left and right multiplication
    by algebra generators, which is cheaper and reaches larger levels.
    """
    if g.two_k > max_two_k:
        raise BudgetExceeded(f"two_k={g.two_k} exceeds the ideal budget two_k <= {max_two_k}")
    two_k, n = g.two_k, g.n
    keys = level_partitions(two_k)
    index = {pi: i for i, pi in enumerate(keys)}
    g = to_orbit(g)
    if method == "products":
        left = RowReducer()
        for pi in keys:
            left.add(_coords(multiply(basis_element(pi, two_k, n, ORBIT), g), index))
        ideal = RowReducer()
        for vec in left.basis():
            elem = _element(vec, keys, two_k, n)
            for pi in keys:
                ideal.add(_coords(multiply(elem, basis_element(pi, two_k, n, ORBIT)), index))
        return ideal.rank
    if method == "closure":
        gens = [to_orbit(x) for x in _generators(two_k, n)]
        ideal = RowReducer()
        queue = [g] if ideal.add(_coords(g, index)) else []
        while queue:
            elem = queue.pop()
            for x in gens:
                for prod in (multiply(x, elem), multiply(elem, x)):
                    if ideal.add(_coords(prod, index)):
                        queue.append(prod)
        return ideal.rank
    raise ValueError(f"unknown method {method!r}")
