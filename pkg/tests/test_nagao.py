import math
import random
from fractions import Fraction

import pytest

from rankforge import (
    Poly,
    average_A_p_analytic,
    average_A_p_direct,
    enumerate_prime_ideals,
    fiber_polynomial,
    is_good_prime,
    make_field,
    nagao_partial_sum,
    rank_estimate,
    trace_a_t,
)
from rankforge.errors import BadPrime, RankforgeError
from rankforge.nagao import curve_trace, default_checkpoints
from conftest import ideal_above


def test_curve_trace_oracle_f5():
    # y^2 = x^3 + x over F_5 has 4 points including infinity
    F5 = make_field(5, [0, 1])
    cubic = Poly([F5.zero, F5.one, F5.zero, F5.one])
    assert curve_trace(cubic, F5) == 2
    points = 1 + sum(1 + F5.chi(cubic(x)) for x in F5.elements())
    assert points == 5 + 1 - 2


def test_trace_sums_to_direct_total(fam_rat):
    P = ideal_above(fam_rat.K, 37)
    fld = P.residue_field
    total = sum(trace_a_t(fam_rat, P, t) for t in fld.elements())
    res = average_A_p_direct(fam_rat, P)
    assert total == res.sum_a_t == -6 * 37


def test_ap_examples(fam_rat):
    for p in (37, 41):
        P = ideal_above(fam_rat.K, p)
        direct = average_A_p_direct(fam_rat, P)
        analytic = average_A_p_analytic(fam_rat, P)
        assert direct.A_p == analytic.A_p == Fraction(-6)
        assert direct.sum_a_t == analytic.sum_a_t == -6 * p


def test_bad_prime_raises(fam_rat):
    P = ideal_above(fam_rat.K, 3)
    with pytest.raises(BadPrime):
        average_A_p_direct(fam_rat, P)
    res = average_A_p_analytic(fam_rat, P, allow_bad=True)
    assert res.good is False


def test_method_agreement_small_norms(fam_rat, fam_sqrt5):
    for fam, bound in ((fam_rat, 200), (fam_sqrt5, 200)):
        for P in enumerate_prime_ideals(fam.K, bound):
            if not is_good_prime(fam, P)[0]:
                continue
            d = average_A_p_direct(fam, P)
            a = average_A_p_analytic(fam, P)
            assert d.sum_a_t == a.sum_a_t
            assert d.A_p == a.A_p == -6


def test_sqrt5_inert_prime(fam_sqrt5):
    P = ideal_above(fam_sqrt5.K, 13, 169)
    assert P.norm == 169
    assert average_A_p_analytic(fam_sqrt5, P).A_p == -6
    assert average_A_p_direct(fam_sqrt5, P).A_p == -6


def test_hasse_bound_nonsingular_fibers(fam_rat):
    P = ideal_above(fam_rat.K, 37)
    fld = P.residue_field
    bound = 2 * math.sqrt(fld.q)
    for t in fld.elements():
        f = fiber_polynomial(fam_rat, P, t)
        if f.degree != 3 or not _cubic_disc(f, fld):
            continue
        assert abs(trace_a_t(fam_rat, P, t)) <= bound


def _cubic_disc(f, fld):
    d, c, b, a = (list(f.coeffs) + [fld.zero] * 4)[:4]
    return (18 * a * b * c * d - 4 * (b ** 3) * d + (b * c) ** 2
            - 4 * a * (c ** 3) - 27 * (a * d) ** 2)


def test_partial_sum_is_theta_like(fam_rat):
    # every good A_p is -6, so the sum is 6 * sum(log p) / X over good p
    X = 43
    rows = nagao_partial_sum(fam_rat, X, checkpoints=[X])
    good = [P.norm for P in enumerate_prime_ideals(fam_rat.K, X)
            if is_good_prime(fam_rat, P)[0]]
    assert good == [13, 17, 19, 23, 29, 31, 37, 41, 43]
    expected = 6 * sum(math.log(p) for p in good) / X
    assert abs(rows[-1].partial_sum - expected) < 1e-12
    assert rows[-1].ideals_used == len(good)
    assert rows[-1].ideals_skipped_bad == 5  # 2, 3, 5, 7, 11


def test_partial_sum_below_least_good_prime(fam_rat):
    rows = nagao_partial_sum(fam_rat, 11, checkpoints=[11])
    assert rows[-1].partial_sum == 0.0
    assert rows[-1].ideals_used == 0
    est = rank_estimate(fam_rat, 11)
    assert est.nearest_integer == 0 and est.low_confidence


def test_checkpoint_grid():
    assert default_checkpoints(10000) == [1000, 2000, 4000, 8000, 10000]
    assert default_checkpoints(500) == [500]
    assert default_checkpoints(1000) == [1000]


def test_series_rows_monotone_checkpoints(fam_rat):
    rows = nagao_partial_sum(fam_rat, 2000)
    assert [r.X for r in rows] == [1000, 2000]
    assert rows[1].ideals_used >= rows[0].ideals_used


def test_direct_cap_enforced(fam_rat):
    with pytest.raises(RankforgeError):
        nagao_partial_sum(fam_rat, 5000, method="direct", checkpoints=[5000])


def test_threads_match_serial(fam_rat):
    serial = nagao_partial_sum(fam_rat, 1500, checkpoints=[1500])
    threaded = nagao_partial_sum(fam_rat, 1500, checkpoints=[1500], threads=4)
    assert serial == threaded


def test_normalization_identity(fam_rat):
    # sum over t of a_t equals -q * (root character sum) at good primes
    P = ideal_above(fam_rat.K, 53)
    from rankforge import reduce_elem

    fld = P.residue_field
    root_sum = sum(fld.chi(reduce_elem(r, P)) for r in fam_rat.roots)
    res = average_A_p_analytic(fam_rat, P)
    assert res.sum_a_t == -P.norm * root_sum


def test_rank_estimate_small_window(fam_rat):
    est = rank_estimate(fam_rat, 600)
    assert est.nearest_integer == 6
    assert not est.low_confidence
