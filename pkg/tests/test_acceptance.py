"""End-to-end acceptance criteria, one test per criterion.

Each test prints a single PASS line when its assertions hold; run with
`pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
"""

import math
import random
from fractions import Fraction

import pytest

from rankforge import (
    FamilySpec,
    NumberField,
    Poly,
    construct_family,
    enumerate_prime_ideals,
    expand_from_roots,
    is_good_prime,
    landau_sum,
    rank_estimate,
)
from rankforge.errors import RepeatedRoot, ZeroRoot
from rankforge.legendre import verify_quad_sums
from rankforge.nagao import average_A_p_analytic, average_A_p_direct, nagao_partial_sum
from rankforge.primes import sieve


@pytest.fixture(scope="module")
def sweep():
    return verify_quad_sums(max_q=343, exhaustive_max_q=49, seed=0)


def test_criterion_1_oracle_equivalence(sweep):
    assert [r.q for r in sweep][:4] == [3, 5, 7, 9]
    for r in sweep:
        if r.q <= 49:
            assert r.mode == "exhaustive"
            assert r.checked == (r.q - 1) * r.q * r.q
        else:
            assert r.mode == "random" and r.checked == 1000
        assert r.mismatches == 0
    print("\nACCEPTANCE 1 (Prop 3.1 oracle equivalence, q <= 343): PASS")


def test_criterion_2_conic_bound(sweep):
    assert all(r.conic_violations == 0 for r in sweep)
    print("\nACCEPTANCE 2 (conic bound q-1 <= #C <= q+1): PASS")


@pytest.fixture(scope="module")
def fam_q():
    K = NumberField([0, 1])
    return construct_family(FamilySpec(
        K=K, rho=tuple(K.elem(i) for i in range(1, 7)), alpha=K.one))


@pytest.fixture(scope="module")
def fam_s5():
    K = NumberField([-1, -1, 1])
    return construct_family(FamilySpec(
        K=K, rho=tuple(K.elem(i) for i in range(1, 7)), alpha=K.one))


def test_criterion_3_central_identity_over_q(fam_q):
    good_count = 0
    for P in enumerate_prime_ideals(fam_q.K, 2000):
        if not is_good_prime(fam_q, P)[0]:
            continue
        res = average_A_p_analytic(fam_q, P)
        assert res.A_p == Fraction(-6), f"A_p != -6 at p = {P.p}"
        if P.norm <= 200:
            assert average_A_p_direct(fam_q, P).sum_a_t == res.sum_a_t
        good_count += 1
    assert good_count > 250
    print(f"\nACCEPTANCE 3 (A_p = -6 over Q, {good_count} good p <= 2000, "
          "direct agreement p <= 200): PASS")


def test_criterion_4_central_identity_over_sqrt5(fam_s5):
    split = inert = 0
    for P in enumerate_prime_ideals(fam_s5.K, 2000):
        if not is_good_prime(fam_s5, P)[0]:
            continue
        res = average_A_p_analytic(fam_s5, P)
        assert res.A_p == Fraction(-6), f"A_p != -6 at ideal {P.label()}"
        if P.f == 1:
            split += 1
        else:
            inert += 1
    assert split > 100 and inert >= 5  # both residue degrees exercised
    print(f"\nACCEPTANCE 4 (A_p = -6 over Q(sqrt5), {split} split + {inert} "
          "inert ideals of norm <= 2000): PASS")


def test_criterion_5_rank_convergence(fam_q):
    X = 10 ** 4
    rows = nagao_partial_sum(fam_q, X, checkpoints=[X])
    partial = rows[-1].partial_sum
    assert abs(partial - 6) < 0.3
    # independent oracle for the expected gap: direct theta(X)
    theta = sum(math.log(p) for p in sieve(X))
    assert abs(partial - 6 * theta / X) < 0.1
    est = rank_estimate(fam_q, X)
    assert est.nearest_integer == 6
    print(f"\nACCEPTANCE 5 (rank-6 convergence: partial_sum = {partial:.4f}, "
          f"estimate = {est.nearest_integer}): PASS")


def test_criterion_6_landau():
    fields = {
        "Q": NumberField([0, 1]),
        "Q(i)": NumberField([1, 0, 1]),
        "Q(sqrt5)": NumberField([-1, -1, 1]),
    }
    ratios = {}
    for name, K in fields.items():
        _, ratio, _ = landau_sum(K, 10 ** 6)
        assert 0.95 <= ratio <= 1.05, f"{name}: ratio {ratio}"
        ratios[name] = round(ratio, 5)
    print(f"\nACCEPTANCE 6 (Landau ratios at 10^6: {ratios}): PASS")


def test_criterion_7_gauss_splitting_law():
    from rankforge.number_field import prime_ideals_above

    K = NumberField([1, 0, 1])
    for p in sieve(10 ** 4):
        if p == 2:
            continue
        fs = sorted(P.f for P in prime_ideals_above(K, p))
        if p % 4 == 1:
            assert fs == [1, 1], f"p = {p} should split"
        else:
            assert fs == [2], f"p = {p} should be inert"
    print("\nACCEPTANCE 7 (Q(i) splitting law, odd p <= 10^4): PASS")


def _random_nonzero(K, rng):
    while True:
        x = K.elem([Fraction(rng.randrange(-50, 51), rng.randrange(1, 7))
                    for _ in range(K.n)])
        if x:
            return x


def test_criterion_8_construction_identity():
    cases = [(NumberField([0, 1]), 100, 12345),
             (NumberField([-1, -1, 1]), 25, 54321)]
    total = 0
    for K, count, seed in cases:
        rng = random.Random(seed)
        built = 0
        while built < count:
            rho = tuple(_random_nonzero(K, rng) for _ in range(6))
            alpha = _random_nonzero(K, rng)
            try:
                fam = construct_family(FamilySpec(K=K, rho=rho, alpha=alpha))
            except RepeatedRoot:
                continue
            x3 = Poly([K.zero, K.zero, K.zero, K.one])
            lhs = fam.g * fam.g + x3 * fam.h
            assert (lhs - expand_from_roots(fam.roots, fam.A)).is_zero
            built += 1
        total += built
        # rejections
        with pytest.raises(RepeatedRoot):
            construct_family(FamilySpec(
                K=K, rho=(K.elem(1), K.elem(-1)) + tuple(
                    K.elem(i) for i in (2, 3, 4, 5)), alpha=K.one))
        with pytest.raises(ZeroRoot):
            construct_family(FamilySpec(
                K=K, rho=(K.zero,) + tuple(K.elem(i) for i in range(1, 6)),
                alpha=K.one))
    print(f"\nACCEPTANCE 8 (construction identity, {total} random specs): PASS")
