"""Closed-form quadratic character sums over F_q and their oracles.

For a != 0 the t-sum of chi(a t^2 + b t + c) collapses to (q-1)chi(a) when
the discriminant vanishes and -chi(a) otherwise; quad_sum_brute is the
independent enumeration oracle, conic_count the point count on
s^2 = a t^2 + b t + c.
"""

import random
from dataclasses import dataclass

from ._modpoly import find_irreducible
from .errors import FieldMismatch, ZeroLeadingCoefficient
from .finite_field import FqElem, FqField
from .primes import sieve


@dataclass(frozen=True)
class QuadSumInput:
    a: FqElem
    b: FqElem
    c: FqElem

    def __post_init__(self):
        if not (self.a.field == self.b.field == self.c.field):
            raise FieldMismatch("coefficients in different fields")

    @property
    def field(self):
        return self.a.field


def _unpack(inp, b=None, c=None):
    if isinstance(inp, QuadSumInput):
        return inp.a, inp.b, inp.c
    return QuadSumInput(inp, b, c).a, b, c


def quad_sum_closed(inp, b=None, c=None):
    """Closed form, valid only for a != 0 in odd characteristic."""
    a, b, c = _unpack(inp, b, c)
    if not a:
        raise ZeroLeadingCoefficient("closed form requires a != 0")
    fld = a.field
    disc = b * b - 4 * a * c
    chi_a = fld.chi(a)
    if not disc:
        return (fld.q - 1) * chi_a
    return -chi_a


def quad_sum_brute(inp, b=None, c=None):
    """Direct enumeration of sum over t of chi(a t^2 + b t + c)."""
    a, b, c = _unpack(inp, b, c)
    fld = a.field
    chi = fld.chi
    return sum(chi(a * t * t + b * t + c) for t in fld.elements())


def conic_count(inp, b=None, c=None):
    """#{(s, t) : s^2 = a t^2 + b t + c} = q + quad_sum_brute."""
    a, b, c = _unpack(inp, b, c)
    fld = a.field
    chi = fld.chi
    return sum(1 + chi(a * t * t + b * t + c) for t in fld.elements())


# ---------------------------------------------------------------------------
# bulk verification sweep


@dataclass
class SweepResult:
    q: int
    p: int
    r: int
    mode: str  # "exhaustive" or "random"
    checked: int
    mismatches: int
    conic_violations: int

    @property
    def ok(self):
        return self.mismatches == 0 and self.conic_violations == 0


def odd_prime_powers(limit):
    """(q, p, r) for every odd prime power q <= limit, ascending in q."""
    out = []
    for p in sieve(limit):
        if p == 2:
            continue
        q, r = p, 1
        while q <= limit:
            out.append((q, p, r))
            q *= p
            r += 1
    out.sort()
    return out


def standard_field(p, r):
    """F_{p^r} over a deterministic (smallest) irreducible modulus."""
    return FqField(p, find_irreducible(p, r), check_irreducible=False)


def _sweep_prime(p, triples):
    """Closed-vs-brute check over F_p with plain int arithmetic."""
    chi = [0] * p
    for v in range(1, p):
        chi[v * v % p] = 1
    for v in range(1, p):
        if chi[v] == 0:
            chi[v] = -1
    tt = [t * t % p for t in range(p)]
    mism = viol = checked = 0
    for a, b, c in triples:
        s = 0
        for t in range(p):
            s += chi[(a * tt[t] + b * t + c) % p]
        disc = (b * b - 4 * a * c) % p
        closed = (p - 1) * chi[a] if disc == 0 else -chi[a]
        if closed != s:
            mism += 1
        # the parametrization bound applies to the nondegenerate conic only
        if disc != 0 and not (p - 1 <= p + s <= p + 1):
            viol += 1
        checked += 1
    return checked, mism, viol


def _sweep_extension(fld, triples):
    """Same check over F_{p^r} using encoded add/mul tables."""
    q, p = fld.q, fld.p
    elems = fld.elements()
    chi = fld.chi_table()
    add = [[fld.encode(u + v) for v in elems] for u in elems]
    mul = [[fld.encode(u * v) for v in elems] for u in elems]
    four = 4 % p  # constants embed along the prime subfield
    tt = [mul[t][t] for t in range(q)]
    mism = viol = checked = 0
    for a, b, c in triples:
        ma, mb = mul[a], mul[b]
        s = 0
        for t in range(q):
            s += chi[add[add[ma[tt[t]]][mb[t]]][c]]
        disc = add[mul[b][b]][mul[mul[four][a]][fld.encode(-elems[c])]]
        closed = (q - 1) * chi[a] if disc == 0 else -chi[a]
        if closed != s:
            mism += 1
        if disc != 0 and not (q - 1 <= q + s <= q + 1):
            viol += 1
        checked += 1
    return checked, mism, viol


def verify_quad_sums(max_q=343, exhaustive_max_q=49, seed=0, samples=1000):
    """Oracle-equivalence and conic-bound sweep.

    Exhaustive over all (a, b, c) with a != 0 for q <= exhaustive_max_q;
    seeded random triples for larger q up to max_q. Returns one SweepResult
    per odd prime power q.
    """
    results = []
    for q, p, r in odd_prime_powers(max_q):
        exhaustive = q <= exhaustive_max_q
        if exhaustive:
            triples = ((a, b, c)
                       for a in range(1, q)
                       for b in range(q)
                       for c in range(q))
        else:
            rng = random.Random(seed * 1000003 + q)
            triples = ((rng.randrange(1, q), rng.randrange(q), rng.randrange(q))
                       for _ in range(samples))
        if r == 1:
            checked, mism, viol = _sweep_prime(p, triples)
        else:
            fld = standard_field(p, r)
            checked, mism, viol = _sweep_extension(fld, triples)
        results.append(SweepResult(
            q=q, p=p, r=r,
            mode="exhaustive" if exhaustive else "random",
            checked=checked, mismatches=mism, conic_violations=viol))
    return results
