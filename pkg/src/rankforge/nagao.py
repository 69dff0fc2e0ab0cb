"""Traces of Frobenius for the family fibers, their prime averages, and the
partial sums whose limit is the generic rank.

The direct method enumerates all N(P) fibers at cost O(q^2); the analytic
method collapses the t-sum with the closed-form quadratic character sum and
costs O(q). At good primes both give the average -6 exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadPrime, RankforgeError
from .family import fiber_polynomial, is_good_prime, reduce_family, require_good
from .number_field import enumerate_prime_ideals

DIRECT_NORM_CAP = 1000  # O(q^2) work; analytic is the default beyond this


def curve_trace(cubic, fld):
    """q + 1 - #E for y^2 = cubic(x): the negated affine character sum.

    Defined uniformly for singular cubics too (affine points plus one at
    infinity), so the direct and analytic routes stay consistent.
    """
    chi = fld.chi
    return -sum(chi(cubic(x)) for x in fld.elements())


def trace_a_t(fam, P, t):
    """a_t(P) for a single fiber."""
    require_good(fam, P)
    return curve_trace(fiber_polynomial(fam, P, t), P.residue_field)


@dataclass(frozen=True)
class ApResult:
    prime: object  # PrimeIdeal
    sum_a_t: int
    A_p: Fraction
    method: str
    good: bool


def _check_good(fam, P, allow_bad):
    good, reason = is_good_prime(fam, P)
    if not good and not allow_bad:
        raise BadPrime(reason)
    return good


def average_A_p_direct(fam, P, allow_bad=False):
    """Average of a_t over all fibers, by full enumeration. O(q^2)."""
    good = _check_good(fam, P, allow_bad)
    fld = P.residue_field
    q, p = fld.q, fld.p
    gbar, hbar, _ = reduce_family(fam, P)
    total = 0
    if fld.r == 1:
        chi = fld.chi_table()
        gi = [c.coeffs[0] for c in gbar]
        hi = [c.coeffs[0] for c in hbar]
        gx = [_int_horner(gi, x, p) for x in range(p)]
        hx = [_int_horner(hi, x, p) for x in range(p)]
        x3 = [pow(x, 3, p) for x in range(p)]
        for t in range(p):
            tt = t * t % p
            s = 0
            for x in range(p):
                s += chi[(tt * x3[x] + 2 * gx[x] * t - hx[x]) % p]
            total -= s
    else:
        chi = fld.chi
        elems = fld.elements()
        gvals = {x: _horner(gbar, x, fld) for x in elems}
        hvals = {x: _horner(hbar, x, fld) for x in elems}
        for t in elems:
            tt = t * t
            s = 0
            for x in elems:
                v = gvals[x] * t
                s += chi(tt * x * x * x + v + v - hvals[x])
            total -= s
    return ApResult(prime=P, sum_a_t=total, A_p=Fraction(total, q),
                    method="direct", good=good)


def average_A_p_analytic(fam, P, allow_bad=False):
    """Average of a_t via the closed-form collapse of the t-sum. O(q).

    For fixed x != 0 the t-sum is quadratic with leading coefficient x^3
    and discriminant 4 D_T(x), so it contributes (q-1)chi(x) at roots of
    D_T and -chi(x) elsewhere; the x = 0 column vanishes at good primes.
    """
    good = _check_good(fam, P, allow_bad)
    fld = P.residue_field
    q, p = fld.q, fld.p
    _, _, dtbar = reduce_family(fam, P)
    s = 0
    if fld.r == 1:
        chi = fld.chi_table()
        dti = [c.coeffs[0] for c in dtbar]
        for x in range(1, p):
            v = _int_horner(dti, x, p)
            if v == 0:
                s += (q - 1) * chi[x]
            else:
                s -= chi[x]
    else:
        chi = fld.chi
        for x in fld.elements()[1:]:
            v = _horner(dtbar, x, fld)
            if not v:
                s += (q - 1) * chi(x)
            else:
                s -= chi(x)
    total = -s
    return ApResult(prime=P, sum_a_t=total, A_p=Fraction(total, q),
                    method="analytic", good=good)


def average_A_p(fam, P, method="analytic", allow_bad=False):
    if method == "direct":
        return average_A_p_direct(fam, P, allow_bad)
    if method == "analytic":
        return average_A_p_analytic(fam, P, allow_bad)
    raise RankforgeError(f"unknown method {method!r}")


@dataclass(frozen=True)
class RankSeriesRow:
    X: int
    partial_sum: float
    ideals_used: int
    ideals_skipped_bad: int


def default_checkpoints(X):
    """1000, 2000, 4000, ... capped by and always including X."""
    grid = []
    c = 1000
    while c < X:
        grid.append(c)
        c *= 2
    grid.append(X)
    return grid


def _series_term(fam, method, P):
    """(norm, contribution to sum of -A_p log N), or (norm, None) if bad."""
    good, _ = is_good_prime(fam, P)
    if not good:
        return P.norm, None
    if method == "direct" and P.norm > DIRECT_NORM_CAP:
        raise RankforgeError(
            f"direct method capped at norm {DIRECT_NORM_CAP}; "
            "use the analytic method for large primes")
    res = average_A_p(fam, P, method=method)
    return P.norm, -float(res.A_p) * math.log(P.norm)


def _series_terms(fam, X, method, threads=1):
    ideals = enumerate_prime_ideals(fam.K, X)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            yield from pool.map(
                lambda P: _series_term(fam, method, P), ideals)
    else:
        for P in ideals:
            yield _series_term(fam, method, P)


def nagao_partial_sum(fam, X, method="analytic", checkpoints=None, threads=1):
    """Rows of (1/X') sum of -A_p log N(P) over good primes of norm <= X'.

    Sums are accumulated incrementally over one pass in norm order; bad
    primes are skipped and counted. threads > 1 parallelizes the per-prime
    averages; the merge stays deterministic.
    """
    if checkpoints is None:
        checkpoints = default_checkpoints(X)
    checkpoints = sorted(set(checkpoints))
    rows = []
    total = 0.0
    used = skipped = 0
    idx = 0
    for norm, contrib in _series_terms(fam, X, method, threads):
        while idx < len(checkpoints) and norm > checkpoints[idx]:
            rows.append(RankSeriesRow(checkpoints[idx], total / checkpoints[idx],
                                      used, skipped))
            idx += 1
        if contrib is None:
            skipped += 1
        else:
            total += contrib
            used += 1
    while idx < len(checkpoints):
        rows.append(RankSeriesRow(checkpoints[idx], total / checkpoints[idx],
                                  used, skipped))
        idx += 1
    return rows


@dataclass(frozen=True)
class RankEstimate:
    X: int
    partial_sum: float
    theta_good: float
    nearest_integer: int
    residual: float
    low_confidence: bool


def rank_estimate(fam, X, method="analytic"):
    """Nagao partial sum at X, normalized by the good-prime theta sum.

    nearest_integer = round(partial_sum * X / theta_good) corrects for the
    finite-X deficit of sum(log N)/X against the Landau asymptotic.
    """
    rows = nagao_partial_sum(fam, X, method=method, checkpoints=[X])
    partial = rows[-1].partial_sum
    theta = 0.0
    for P in enumerate_prime_ideals(fam.K, X):
        good, _ = is_good_prime(fam, P)
        if good:
            theta += math.log(P.norm)
    if theta == 0.0:
        return RankEstimate(X=X, partial_sum=partial, theta_good=0.0,
                            nearest_integer=0, residual=0.0,
                            low_confidence=True)
    normalized = partial * X / theta
    nearest = round(normalized)
    return RankEstimate(X=X, partial_sum=partial, theta_good=theta,
                        nearest_integer=nearest,
                        residual=normalized - nearest,
                        low_confidence=rows[-1].ideals_used == 0)


def _int_horner(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _horner(coeffs, x, fld):
    acc = fld.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
