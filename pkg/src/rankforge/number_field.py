"""Number fields K = Q(theta), prime-ideal enumeration, residue reduction.

O_K is approximated by the order Z[theta]: factoring the minimal polynomial
mod p (Dedekind) gives the primes of O_K for every p outside the excluded
set, which defaults to the primes dividing disc(m).
"""

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import DenominatorNotInvertible, NotKnownIrreducible, RankforgeError
from .finite_field import FqField
from .poly import Poly, discriminant, factor_mod_p, poly_to_str, xgcd
from .primes import sieve

_CERTIFY_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class NumberField:
    """K = Q(theta) for a monic irreducible integer polynomial m(theta)."""

    def __init__(self, min_poly, excluded_primes=None, assert_irreducible=False):
        coeffs = [int(c) for c in min_poly]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise RankforgeError("minimal polynomial must be monic, degree >= 1")
        self.m = tuple(coeffs)
        self.n = len(coeffs) - 1
        self.m_poly = Poly([Fraction(c) for c in coeffs])
        disc = discriminant(self.m_poly)
        assert disc.denominator == 1
        self.disc_m = int(disc)
        if self.disc_m == 0:
            raise RankforgeError("minimal polynomial is not squarefree")
        self._certify_irreducible(assert_irreducible)
        if excluded_primes is None:
            excluded_primes = _prime_divisors(abs(self.disc_m))
        self.excluded_primes = frozenset(int(p) for p in excluded_primes)

    def _certify_irreducible(self, asserted):
        if self.n == 1:
            return
        if self.n <= 3:
            # a reducible monic quadratic/cubic has an integer root dividing
            # the constant term
            c0 = self.m[0]
            if c0 == 0:
                raise RankforgeError("minimal polynomial has root 0")
            for d in _divisors(abs(c0)):
                for r in (d, -d):
                    if _int_poly_eval(self.m, r) == 0:
                        raise RankforgeError(
                            f"minimal polynomial has rational root {r}")
            return
        for p in _CERTIFY_PRIMES:
            if self.disc_m % p == 0:
                continue
            if len(factor_mod_p(self.m, p)) == 1:
                return
        if not asserted:
            raise NotKnownIrreducible(
                "degree >= 4 and no mod-p certificate found; "
                "pass assert_irreducible=True to proceed")

    def elem(self, coeffs):
        """Element of K from rational coordinates in the power basis."""
        if isinstance(coeffs, (int, Fraction)):
            coeffs = [coeffs]
        c = [Fraction(x) for x in coeffs]
        if len(c) > self.n:
            reduced = Poly(c) % self.m_poly
            c = list(reduced.coeffs)
        c += [Fraction(0)] * (self.n - len(c))
        return KElem(self, tuple(c))

    @property
    def zero(self):
        return self.elem(0)

    @property
    def one(self):
        return self.elem(1)

    def theta(self):
        return self.elem([0, 1]) if self.n > 1 else self.elem(0)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"NumberField({list(self.m)})"


class KElem:
    """Element of K in the power basis 1, theta, ..., theta^(n-1)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return self.field.elem(other)
        if isinstance(other, KElem):
            if other.field != self.field:
                raise RankforgeError("elements of different number fields")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return KElem(self.field, tuple(
            a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return KElem(self.field, tuple(
            a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return KElem(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prod = (Poly(self.coeffs) * Poly(other.coeffs)) % self.field.m_poly
        c = list(prod.coeffs)
        c += [Fraction(0)] * (self.field.n - len(c))
        return KElem(self.field, tuple(c))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in K")
        d, u, _ = xgcd(Poly(self.coeffs), self.field.m_poly)
        assert d.degree == 0
        inv = u * (Fraction(1) / d.coeffs[0])
        inv = inv % self.field.m_poly
        c = list(inv.coeffs)
        c += [Fraction(0)] * (self.field.n - len(c))
        return KElem(self.field, tuple(c))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one
        base = self
        while e > 0:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def norm(self):
        """Field norm N_{K/Q} as a Fraction (resultant with the min poly)."""
        if not self:
            return Fraction(0)
        return resultant_norm(self.field.m_poly, Poly(self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self == self.field.elem(other)
        return (isinstance(other, KElem)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.m, self.coeffs))

    def __repr__(self):
        return "KElem[" + ",".join(str(c) for c in self.coeffs) + "]"


def resultant_norm(m_poly, elem_poly):
    from .poly import resultant
    return resultant(m_poly, elem_poly)


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime of O_K above p, from Dedekind factorization of m mod p."""

    p: int
    factor: Poly  # monic irreducible over F_p, int coefficients
    f: int
    e: int
    norm: int
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False)

    @property
    def residue_field(self):
        fld = self._cache.get("residue_field")
        if fld is None:
            fld = FqField(self.p, list(self.factor.coeffs),
                          check_irreducible=False)
            self._cache["residue_field"] = fld
        return fld

    def sort_key(self):
        return (self.norm, self.p, self.factor.coeffs)

    def label(self):
        return f"({self.p}, {poly_to_str(self.factor)})"


def prime_ideals_above(K, p):
    """The primes of Z[theta] above a non-excluded rational prime p."""
    out = []
    for fac, e in factor_mod_p(K.m_poly, p):
        f = fac.degree
        out.append(PrimeIdeal(p=p, factor=fac, f=f, e=e, norm=p ** f))
    return out


def enumerate_prime_ideals(K, X):
    """All primes of norm <= X, sorted by (norm, p, factor); excluded
    rational primes are skipped."""
    ideals = []
    for p in sieve(X):
        if p in K.excluded_primes:
            continue
        if K.n == 1:
            ideals.append(PrimeIdeal(p=p, factor=Poly([0, 1]), f=1, e=1, norm=p))
            continue
        if p == 2:
            # factor_mod_p rejects p = 2; fall back to exhaustive splitting
            for ideal in _ideals_above_two(K):
                if ideal.norm <= X:
                    ideals.append(ideal)
            continue
        for ideal in prime_ideals_above(K, p):
            if ideal.norm <= X:
                ideals.append(ideal)
    ideals.sort(key=PrimeIdeal.sort_key)
    return ideals


def _ideals_above_two(K):
    """Brute-force factorization of m mod 2 (degree is tiny)."""
    from . import _modpoly

    f = _modpoly.trim([c % 2 for c in K.m])
    out = []
    factors = {}
    # trial division by all monic polynomials of degree 1..n over F_2
    g = list(f)
    d = 1
    while len(g) > 1:
        found = False
        for code in range(2 ** d):
            cand = [(code >> i) & 1 for i in range(d)] + [1]
            q, r = _modpoly.divmod_(g, cand, 2)
            if not r:
                key = tuple(cand)
                factors[key] = factors.get(key, 0) + 1
                g = q
                found = True
                break
        if not found:
            d += 1
    for key in sorted(factors, key=lambda k: (len(k), k[::-1])):
        fac = Poly(list(key))
        out.append(PrimeIdeal(p=2, factor=fac, f=fac.degree,
                              e=factors[key], norm=2 ** fac.degree))
    return out


def reduce_elem(x, P):
    """Image of x in the residue field O_K/P (theta maps to the class of
    the variable mod P.factor)."""
    p = P.p
    fld = P.residue_field
    ints = []
    for c in x.coeffs:
        if c.denominator % p == 0:
            raise DenominatorNotInvertible(
                f"denominator {c.denominator} not invertible mod {p}")
        ints.append(c.numerator * pow(c.denominator, -1, p) % p)
    theta = fld.generator() if fld.r > 1 else fld.elem(-P.factor.coeffs[0])
    acc = fld.zero
    for c in reversed(ints):
        acc = acc * theta + c
    return acc


def landau_sum(K, X):
    """(sum of log N(P) over norms <= X, sum/X, ideal count).

    Compensated (Kahan) summation; everything upstream is exact.
    """
    total = 0.0
    comp = 0.0
    count = 0
    for P in enumerate_prime_ideals(K, X):
        y = math.log(P.norm) - comp
        t = total + y
        comp = (t - total) - y
        total = t
        count += 1
    return total, (total / X if X else 0.0), count


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _int_poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
