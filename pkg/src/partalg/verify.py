"""Invariant suites behind ``partalg verify``.

Each suite returns a list of check records; a record is a dict with at least
``suite``, ``name`` and ``status`` ("pass", "fail", "note" or "skipped").
Notes carry measured facts that are reported without affecting the exit code.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import factorial

from . import algebra as alg
from .characters import (
    conjugacy_classes,
    fixed_point_power,
    gamma_mu,
    irreducible_character,
    multiplicity,
    partition_algebra_character,
)
from .combinatorics import bell, integer_partitions, restricted_bell
from .errors import BudgetExceeded
from .setpart import coarsenings, enumerate_set_partitions, is_refinement, mobius
from .tableaux import (
    SetPartitionTableau,
    bijection_A,
    bijection_B,
    enumerate_spt,
    enumerate_vacillating,
)
from .tensorrep import (
    image_dimension,
    kernel_basis,
    orbit_count,
    permutation_matrix,
    phi,
    principal_ideal_dimension,
)

SUITES = ("bases", "homomorphism", "idempotents", "kernel", "bijection", "characters", "identities")
EXTRA_SUITES = ("presentation",)


def _check(suite: str, name: str, ok: bool, **detail) -> dict:
    rec = {"suite": suite, "name": name, "status": "pass" if ok else "fail"}
    rec.update(detail)
    return rec


def _random_element(rng: random.Random, two_k: int, n: int, basis: str, terms: int = 3) -> alg.AlgebraElement:
    keys = enumerate_set_partitions(two_k)
    picks = {rng.choice(keys): rng.randint(-3, 3) for _ in range(terms)}
    return alg.make_element(basis, picks, two_k, n)


def suite_bases(rng: random.Random) -> list[dict]:
    out = []
    ok = True
    for m in range(1, 6):
        for pi in enumerate_set_partitions(m):
            above = coarsenings(pi)
            for rho in above:
                total = sum(mobius(s, rho) for s in above if is_refinement(s, rho))
                ok &= total == (1 if pi == rho else 0)
    out.append(_check("bases", "moebius inversion on partition lattices m<=5", ok))
    bad = 0
    for _ in range(50):
        two_k = rng.choice([2, 4, 6])
        e = _random_element(rng, two_k, rng.randint(1, 5), alg.DIAGRAM)
        if alg.to_diagram(alg.to_orbit(e)).terms != e.terms:
            bad += 1
    out.append(_check("bases", "diagram -> orbit -> diagram round trip (50 random)", bad == 0, failures=bad))
    bad = 0
    for _ in range(50):
        two_k, n = rng.choice([2, 4, 6]), rng.randint(2, 6)
        a = _random_element(rng, two_k, n, alg.DIAGRAM)
        b = _random_element(rng, two_k, n, alg.DIAGRAM)
        lhs = alg.to_orbit(alg.multiply(a, b))
        rhs = alg.multiply_orbit(alg.to_orbit(a), alg.to_orbit(b))
        if lhs.terms != rhs.terms:
            bad += 1
    out.append(_check("bases", "diagram and orbit products agree (50 random)", bad == 0, failures=bad))
    bad = 0
    for _ in range(30):
        two_k, n = rng.choice([2, 4, 6]), rng.randint(2, 4)
        a, b, c = (_random_element(rng, two_k, n, alg.DIAGRAM) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad += 1
    out.append(_check("bases", "associativity (30 random triples)", bad == 0, failures=bad))
    return out


def suite_homomorphism(rng: random.Random) -> list[dict]:
    out = []
    for k, n in ((2, 2), (2, 3)):
        keys = enumerate_set_partitions(2 * k)
        mats = {pi: phi(alg.basis_element(pi, 2 * k, n)) for pi in keys}
        bad = 0
        for p1, p2 in itertools.product(keys, keys):
            prod = phi(alg.basis_element(p1, 2 * k, n) * alg.basis_element(p2, 2 * k, n))
            if prod != mats[p1] @ mats[p2]:
                bad += 1
        out.append(_check("homomorphism", f"all diagram pairs at k={k}, n={n}", bad == 0, pairs=len(keys) ** 2, failures=bad))
    keys = enumerate_set_partitions(6)
    bad = 0
    for _ in range(30):
        a = alg.basis_element(rng.choice(keys), 6, 3)
        b = alg.basis_element(rng.choice(keys), 6, 3)
        if phi(a * b) != phi(a) @ phi(b):
            bad += 1
    out.append(_check("homomorphism", "30 random diagram pairs at k=3, n=3", bad == 0, failures=bad))
    return out


def suite_idempotents(rng: random.Random) -> list[dict]:
    out = []
    bad = []
    for two_k in range(1, 9):
        for n in range(1, 8):
            if two_k <= n:
                continue
            e = alg.e_kn(two_k, n)
            if alg.multiply_orbit(e, e) != e.scale(alg.c_kn(two_k, n)):
                bad.append([two_k, n])
    out.append(_check("idempotents", "e^2 = c e for two_k <= 8, n <= 7, two_k > n", not bad, failures=bad))
    e = alg.e_kn(6, 3)
    out.append(_check("idempotents", "e_{3,3}^2 = -e_{3,3}", alg.multiply_orbit(e, e) == -e))
    # measured constants where n = 2k - 1, next to the alternative reciprocal-factorial value
    for k in range(1, 5):
        n = 2 * k - 1
        e = alg.e_kn(2 * k, n)
        sq = alg.multiply_orbit(e, e)
        measured = sq.terms.get(next(iter(e.terms)), Fraction(0))
        alternative = Fraction((-1) ** k, factorial(k))
        out.append({
            "suite": "idempotents",
            "name": f"squaring constant at k={k}, n={n}",
            "status": "note",
            "measured": str(measured),
            "closed_form": str(alg.c_kn(2 * k, n)),
            "reciprocal_factorial_form": str(alternative),
            "matches_reciprocal_form": measured == alternative,
        })
    return out


def suite_kernel(rng: random.Random) -> list[dict]:
    out = []
    for two_k, n in ((4, 2), (4, 3), (6, 3), (6, 4)):
        want = restricted_bell(two_k, n)
        got = image_dimension(two_k, n)
        out.append(_check("kernel", f"image dimension two_k={two_k}, n={n}", got == want == orbit_count(two_k, n), value=got, expected=want))
    for two_k, n in ((5, 3), (7, 3)):
        want = restricted_bell(two_k, n)
        got = image_dimension(two_k, n)
        out.append(_check("kernel", f"half-level image dimension two_k={two_k}, n={n}", got == want, value=got, expected=want))
    zero_images = all(phi(x).is_zero() for x in kernel_basis(4, 2))
    out.append(_check("kernel", "kernel basis at k=2, n=2 maps to zero", zero_images and len(kernel_basis(4, 2)) == 7))
    for k, n in ((2, 2), (2, 3), (3, 3)):
        want = bell(2 * k) - restricted_bell(2 * k, n)
        got = principal_ideal_dimension(alg.e_kn(2 * k, n))
        out.append(_check("kernel", f"ideal generated by e at k={k}, n={n}", got == want, value=got, expected=want))
    g = alg.embed(alg.e_kn(4, 2), 6)
    got = principal_ideal_dimension(g, method="closure")
    out.append(_check("kernel", "ideal generated by embedded e_{2,2} at k=3, n=2", got == 203 - 32, value=got, expected=171))
    return out


SEVEN_LABEL_TABLEAU = "0 6 / 2 4,7 / 1,3,5"
SEVEN_LABEL_SHAPES = "[5];[4];[4,1];[4];[4,1];[3,1];[3,2];[3,1];[3,2];[2,2];[2,2,1];[2,1,1];[2,2,1];[2,1,1];[2,2,1]"
EIGHT_LABEL_TABLEAU = "0 4 1,3,5 6,7 2,8"


def suite_bijection(rng: random.Random) -> list[dict]:
    out = []
    cases = 0
    bad = 0
    for n in range(1, 5):
        for k in range(0, 4):
            for lam in integer_partitions(n):
                spts = enumerate_spt(lam, k, n)
                vts = enumerate_vacillating(lam, k, n)
                images = {bijection_A(s) for s in spts}
                cases += len(spts)
                if images != set(vts) or any(bijection_B(bijection_A(s)) != s for s in spts):
                    bad += 1
    out.append(_check("bijection", "round trips for n <= 4, k <= 3", bad == 0, cases=cases, failures=bad))
    t7 = SetPartitionTableau.parse(SEVEN_LABEL_TABLEAU)
    vt = bijection_A(t7)
    out.append(_check("bijection", "seven-label worked example", str(vt) == SEVEN_LABEL_SHAPES and bijection_B(vt) == t7))
    t8 = SetPartitionTableau.parse(EIGHT_LABEL_TABLEAU)
    vt = bijection_A(t8)
    ok = vt.k == 8 and str(vt.shape) == "[5]" and str(bijection_B(vt).set_partition()) == "1,3,5|2,8|4|6,7"
    out.append(_check("bijection", "eight-label worked example", ok))
    return out


def suite_characters(rng: random.Random) -> list[dict]:
    out = []
    ok = True
    for n in range(1, 6):
        classes = conjugacy_classes(n)
        lams = integer_partitions(n)
        for a in lams:
            for b in lams:
                s = sum(Fraction(irreducible_character(a, c.delta) * irreducible_character(b, c.delta), c.z) for c in classes)
                ok &= s == (1 if a == b else 0)
    out.append(_check("characters", "row orthogonality n <= 5", ok))
    bad = []
    for n in range(1, 6):
        for k in range(0, 5):
            for lam in integer_partitions(n):
                vals = {multiplicity(lam, k, n, m) for m in ("character", "stirling_skew", "bratteli")}
                if len(vals) != 1:
                    bad.append([str(lam), k, n])
    out.append(_check("characters", "three multiplicity formulas agree n <= 5, k <= 4", not bad, failures=bad))
    k, n = 2, 4
    ok = True
    for mu in (m for ell in range(k + 1) for m in integer_partitions(ell)):
        g = phi(gamma_mu(mu, k, n))
        for c in conjugacy_classes(n):
            sigma = _representative(c.delta)
            want = n ** (k - mu.size) * fixed_point_power(c.delta, mu)
            trace = (permutation_matrix(sigma, k) @ g).trace()
            total = sum(irreducible_character(lam, c.delta) * partition_algebra_character(lam, mu, k, n) for lam in integer_partitions(n))
            ok &= trace == want == total
    out.append(_check("characters", "trace identity at k=2, n=4", ok))
    return out


def _representative(delta) -> list[int]:
    perm = []
    start = 1
    for r in delta:
        perm += [start + (j + 1) % r for j in range(r)]
        start += r
    return perm


def suite_identities(rng: random.Random) -> list[dict]:
    out = []
    bad = []
    for n in range(1, 7):
        perms = list(itertools.permutations(range(1, n + 1)))
        fixed = [sum(1 for i, v in enumerate(p, 1) if i == v) for p in perms]
        for ell in range(0, 9):
            total = Fraction(sum(f**ell for f in fixed), factorial(n))
            if total != restricted_bell(ell, n):
                bad.append([ell, n])
    out.append(_check("identities", "B(l,n) = average of F^l over S_n, n <= 6, l <= 8", not bad, failures=bad))
    ok = all(restricted_bell(2 * k, 2) == 2 ** (2 * k - 1) for k in range(1, 7))
    out.append(_check("identities", "B(2k,2) = 2^(2k-1)", ok))
    ok = all(restricted_bell(m, n) == bell(m) for m in range(11) for n in range(m, 12))
    out.append(_check("identities", "B(m,n) = B(m) for n >= m", ok))
    return out


def suite_presentation(rng: random.Random) -> list[dict]:
    out = []
    for k, n in ((2, 2), (2, 3), (3, 2), (3, 3)):
        for rep in alg.check_presentation(k, n):
            out.append(_check("presentation", f"k={k}, n={n}: {rep.relation} {list(rep.indices)}", rep.holds, clause=rep.clause))
    return out


RUNNERS = {
    "bases": suite_bases,
    "homomorphism": suite_homomorphism,
    "idempotents": suite_idempotents,
    "kernel": suite_kernel,
    "bijection": suite_bijection,
    "characters": suite_characters,
    "identities": suite_identities,
    "presentation": suite_presentation,
}


def run_suites(names: list[str], seed: int = 0) -> list[dict]:
    records = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        try:
            records.extend(RUNNERS[name](rng))
        except BudgetExceeded as exc:
            records.append({"suite": name, "name": "budget", "status": "skipped", "reason": str(exc)})
    return records
