import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from partalg import algebra as alg
from partalg.characters import (
    centralizer_order,
    character_table,
    character_table_csv,
    conjugacy_classes,
    cycle_type,
    fixed_point_power,
    fixed_points,
    gamma_mu,
    half_multiplicity,
    irreducible_character,
    multiplicity,
    partition_algebra_character,
    power_fixed_points,
)
from partalg.combinatorics import IntegerPartition, hook_dimension, integer_partitions, restricted_bell
from partalg.errors import DimensionError, DomainError
from partalg.tensorrep import permutation_matrix, phi


def kostka(lam, gamma):
    # semistandard fillings of lam with content gamma, built one value at a time as horizontal strips
    def rec(shape, value):
        if value == len(gamma):
            return 1 if tuple(shape) == tuple(lam) else 0
        total = 0
        need = gamma[value]

        def place(row, remaining, cur):
            nonlocal total
            if row == len(lam):
                if remaining == 0:
                    total += rec(cur, value + 1)
                return
            base = cur[row]
            limit = lam[row] - base
            if row > 0:
                limit = min(limit, shape[row - 1] - base)
            for add in range(0, min(limit, remaining) + 1):
                nxt = list(cur)
                nxt[row] = base + add
                place(row + 1, remaining - add, nxt)

        place(0, need, list(shape))
        return total

    return rec([0] * len(lam), 0)


def permutation_character(gamma, delta):
    # fixed tabloids of shape gamma: each cycle of delta goes into one row
    count = 0
    for rows in itertools.product(range(len(gamma)), repeat=len(delta)):
        sizes = [0] * len(gamma)
        for cyc, r in zip(delta, rows):
            sizes[r] += cyc
        count += sizes == list(gamma)
    return count


def characters_by_kostka_inverse(n):
    lams = integer_partitions(n)
    size = len(lams)
    K = [[Fraction(kostka(lam, gam)) for gam in lams] for lam in lams]
    # invert the unitriangular Kostka matrix
    inv = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size - 1, -1, -1):
        for row in range(col - 1, -1, -1):
            f = K[row][col]
            if f:
                for j in range(size):
                    K[row][j] -= f * K[col][j]
                    inv[row][j] -= f * inv[col][j]
    # pi_gamma = sum_lam K[lam][gamma] chi_lam, so chi = (K^T)^{-1} pi
    table = {}
    for i, lam in enumerate(lams):
        for delta in lams:
            table[(lam, delta)] = sum(inv[j][i] * permutation_character(gam, delta) for j, gam in enumerate(lams))
    return table


def representative(delta):
    perm, start = [], 1
    for r in delta:
        perm += [start + (j + 1) % r for j in range(r)]
        start += r
    return perm


@pytest.mark.parametrize("n", range(1, 7))
def test_characters_match_kostka_oracle(n):
    table = characters_by_kostka_inverse(n)
    for (lam, delta), value in table.items():
        assert irreducible_character(lam, delta) == value


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality_and_degrees(n):
    classes = conjugacy_classes(n)
    assert sum(c.size for c in classes) == factorial(n)
    for lam in integer_partitions(n):
        assert irreducible_character(lam, [1] * n) == hook_dimension(lam)
        norm = sum(Fraction(irreducible_character(lam, c.delta) ** 2, c.z) for c in classes)
        assert norm == 1


def test_character_table_examples():
    rows = character_table(3)
    assert [r.values[IntegerPartition((3,))] for r in rows] == [1, -1, 1]
    text = character_table_csv(3, "hdr")
    assert text.splitlines()[0] == "# hdr"
    assert text.splitlines()[2] == "[3],1,1,1"
    with pytest.raises(DimensionError):
        irreducible_character((2, 1), (2,))


def test_class_data():
    assert centralizer_order((2, 2, 1)) == 8
    assert cycle_type([2, 3, 1, 5, 4]) == (3, 2)
    assert [str(c.delta) for c in conjugacy_classes(3)] == ["[3]", "[2,1]", "[1,1,1]"]


@given(st.permutations(list(range(1, 7))), st.integers(min_value=1, max_value=6))
def test_power_fixed_points_match_direct_powers(perm, m):
    power = list(range(1, 7))
    for _ in range(m):
        power = [perm[v - 1] for v in power]
    direct = sum(1 for i, v in enumerate(power, 1) if i == v)
    delta = cycle_type(perm)
    assert power_fixed_points(delta, m) == direct
    assert fixed_points(delta) == sum(1 for i, v in enumerate(perm, 1) if i == v)


def test_fixed_point_power():
    assert fixed_point_power((2, 1, 1), (1, 2)) == 2 * 4


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("k", range(0, 5))
def test_multiplicity_methods_agree(n, k):
    for lam in integer_partitions(n):
        vals = {multiplicity(lam, k, n, m) for m in ("character", "stirling_skew", "bratteli")}
        assert len(vals) == 1
    total = sum(multiplicity(lam, k, n) ** 2 for lam in integer_partitions(n))
    assert total == restricted_bell(2 * k, n)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("k", range(0, 4))
def test_half_multiplicity_methods_agree(n, k):
    for mu in integer_partitions(n - 1):
        vals = {half_multiplicity(mu, k, n, m) for m in ("character", "stirling_skew", "bratteli")}
        assert len(vals) == 1
    total = sum(half_multiplicity(mu, k, n) ** 2 for mu in integer_partitions(n - 1))
    assert total == restricted_bell(2 * k + 1, n)


def test_multiplicity_argument_checks():
    with pytest.raises(DimensionError):
        multiplicity((2,), 1, 3)
    with pytest.raises(ValueError):
        multiplicity((3,), 1, 3, "guess")


def test_gamma_mu_shapes():
    assert str(gamma_mu((2,), 2, 4)) == "d[1,4|2,3]"
    assert str(gamma_mu((1,), 2, 4)) == "d[1,3|2|4]"
    assert str(gamma_mu((), 2, 4)) == "d[1|2|3|4]"
    with pytest.raises(DomainError):
        gamma_mu((2, 1), 2, 4)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5)])
def test_character_sum_identity(k, n):
    for ell in range(k + 1):
        for mu in integer_partitions(ell):
            for c in conjugacy_classes(n):
                total = sum(
                    irreducible_character(lam, c.delta) * partition_algebra_character(lam, mu, k, n)
                    for lam in integer_partitions(n)
                )
                assert total == n ** (k - ell) * fixed_point_power(c.delta, mu)


def test_trace_of_sigma_times_gamma():
    k, n = 2, 4
    for ell in range(k + 1):
        for mu in integer_partitions(ell):
            g = phi(gamma_mu(mu, k, n))
            for c in conjugacy_classes(n):
                trace = (permutation_matrix(representative(c.delta), k) @ g).trace()
                assert trace == n ** (k - ell) * fixed_point_power(c.delta, mu)


def test_character_values_are_integers_and_dimension_matches():
    # at mu = [1^k] the element is the identity, so the value is the module dimension
    k, n = 2, 4
    for lam in integer_partitions(n):
        assert partition_algebra_character(lam, (1, 1), k, n) == multiplicity(lam, k, n)


def test_character_domain():
    with pytest.raises(DomainError):
        partition_algebra_character((3,), (1,), 2, 3)
