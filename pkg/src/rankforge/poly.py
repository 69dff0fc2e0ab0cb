"""Univariate polynomials over exact coefficient domains.

Poly is duck-typed over its coefficients: anything with ring operators,
truthiness for zero-testing, and / for leading-coefficient inversion works
(Fraction, FqElem, KElem). Factorization over prime fields operates on
plain int coefficient lists.
"""

import random
from fractions import Fraction

from . import _modpoly
from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    NonMonicDivisor,
    ZeroLeadingCoefficient,
    ZeroPolynomial,
)
from .primes import sqrt_mod_p


class Poly:
    """Dense polynomial, constant term first, canonical (no trailing zeros)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _zero_coeff(self):
        return self.coeffs[-1] * 0

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            z = self._zero_coeff()
            out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        return Poly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __divmod__(self, other):
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        lead = other.lc
        if isinstance(lead, int) and lead != 1:
            raise NonMonicDivisor("non-monic divisor over a non-field domain")
        rem = list(self.coeffs)
        dg = other.degree
        if len(rem) - 1 < dg:
            return Poly(), self
        quo = [self._zero_coeff() if self.coeffs else 0] * (len(rem) - dg)
        while len(rem) - 1 >= dg and any(bool(c) for c in rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < dg:
                break
            c = rem[-1] if isinstance(lead, int) else rem[-1] / lead
            k = len(rem) - 1 - dg
            quo[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
            rem.pop()
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.lc
        return Poly([c / lead for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def gcd(f, g):
    """Monic gcd over a field domain."""
    while not g.is_zero:
        f, g = g, f % g
    if f.is_zero:
        return f
    return f.monic()


def xgcd(f, g):
    """(d, u, v) with d = uf + vg monic, over a field domain."""
    if f.is_zero and g.is_zero:
        return Poly(), Poly(), Poly()
    sample = (f if not f.is_zero else g).lc
    one = sample / sample
    r0, r1 = f, g
    s0, s1 = Poly([one]), Poly()
    t0, t1 = Poly(), Poly([one])
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = one / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def resultant(f, g):
    """Resultant over a field domain (used for discriminants and norms)."""
    if f.is_zero or g.is_zero:
        return Fraction(0)
    res = Fraction(1)
    while g.degree > 0:
        r = f % g
        if r.is_zero:
            return f.lc * 0
        res *= g.lc ** (f.degree - r.degree)
        if (f.degree * g.degree) % 2 == 1:
            res = -res
        f, g = g, r
    return res * g.lc ** f.degree


def discriminant(f):
    """Discriminant of f over its coefficient field."""
    n = f.degree
    if n < 1:
        raise ZeroPolynomial("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 == 1 else 1
    return sign * r / f.lc


def expand_from_roots(roots, leading):
    """leading * prod (x - r_i)."""
    if not leading:
        raise ZeroLeadingCoefficient("leading coefficient is zero")
    one = leading ** 0
    acc = Poly([leading])
    for r in roots:
        acc = acc * Poly([-r, one])
    return acc


def roots_in_fq(f, field):
    """Roots of f in the given field, with multiplicities.

    Exhaustive scan (q is small throughout this package); multiplicities
    via repeated synthetic division.
    """
    if f.is_zero:
        raise ZeroPolynomial("every element is a root of the zero polynomial")
    out = {}
    for u in field.elements():
        if not f(u):
            mult = 0
            g = f
            lin = Poly([-u, field.one])
            while True:
                q, r = divmod(g, lin)
                if not r.is_zero:
                    break
                mult += 1
                g = q
            out[u] = mult
    return out


# ---------------------------------------------------------------------------
# factorization over F_p (int coefficient lists internally)


def _sff(f, p):
    """Squarefree decomposition of monic f; yields (factor, multiplicity)."""
    out = []
    c = _modpoly.gcd(f, _modpoly.deriv(f, p), p)
    w = _modpoly.divmod_(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _modpoly.gcd(w, c, p)
        z = _modpoly.divmod_(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        w = y
        c = _modpoly.divmod_(c, y, p)[0]
        i += 1
    if len(c) > 1:
        # c is a p-th power: strip exponents (coefficients are F_p-fixed)
        root = c[::p]
        for g, m in _sff(root, p):
            out.append((g, m * p))
    return out


def _ddf(f, p):
    """Distinct-degree split of squarefree monic f; yields (product, degree)."""
    out = []
    h = [0, 1]
    i = 1
    g = f
    while len(g) - 1 >= 2 * i:
        h = _modpoly.powmod(h, p, g, p)
        d = _modpoly.gcd(g, _modpoly.sub(h, [0, 1], p), p)
        if len(d) > 1:
            out.append((d, i))
            g = _modpoly.divmod_(g, d, p)[0]
            h = _modpoly.mod(h, g, p)
        i += 1
    if len(g) > 1:
        out.append((g, len(g) - 1))
    return out


def _edf(f, d, p, rng):
    """Equal-degree split (Cantor-Zassenhaus, odd p) into irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    if d == 1 and p < 50:
        # exhaustive root search for tiny prime fields
        return sorted(
            [[(-x) % p, 1] for x in range(p) if _modpoly.eval_at(f, x, p) == 0])
    e = (p ** d - 1) // 2
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        _modpoly.trim(a)
        if len(a) <= 1:
            continue
        b = _modpoly.sub(_modpoly.powmod(a, e, f, p), [1], p)
        g = _modpoly.gcd(b, f, p)
        if 1 < len(g) < len(f):
            rest = _modpoly.divmod_(f, g, p)[0]
            return _edf(g, d, p, rng) + _edf(rest, d, p, rng)


def _factor_quadratic(f, p):
    """Monic quadratic over F_p via the discriminant; avoids the generic path
    so Dedekind enumeration over quadratic fields stays fast."""
    c0, b = f[0], f[1]
    disc = (b * b - 4 * c0) % p
    if disc == 0:
        half = pow(2, p - 2, p)
        r = (-b * half) % p
        return [([(-r) % p, 1], 2)]
    s = sqrt_mod_p(disc, p)
    if s is None:
        return [(list(f), 1)]
    half = pow(2, p - 2, p)
    r1 = ((-b + s) * half) % p
    r2 = ((-b - s) * half) % p
    roots = sorted(((-r1) % p, (-r2) % p))
    return [([roots[0], 1], 1), ([roots[1], 1], 1)]


def factor_mod_p(m, p):
    """Factor a monic integer polynomial over F_p.

    Returns a list of (Poly with int coefficients in [0, p), multiplicity),
    sorted by (degree, coefficients). Deterministic: the equal-degree
    splitting RNG is seeded from (m, p).
    """
    if p == 2:
        raise EvenCharacteristic("p = 2 is rejected")
    if isinstance(m, Poly):
        coeffs = [int(c) for c in m.coeffs]
    else:
        coeffs = [int(c) for c in m]
    f = _modpoly.trim([c % p for c in coeffs])
    if len(f) < 2:
        raise ZeroPolynomial("need degree >= 1")
    f = _modpoly.monic(f, p)
    if len(f) == 2:
        return [(Poly(f), 1)]
    if len(f) == 3:
        fac = _factor_quadratic(f, p)
        return [(Poly(g), e) for g, e in
                sorted(fac, key=lambda t: (len(t[0]), t[0][::-1]))]
    rng = random.Random((p, tuple(f)).__hash__() ^ 0x5EED)
    result = []
    for sf, mult in _sff(f, p):
        for prod, d in _ddf(sf, p):
            for irr in _edf(prod, d, p, rng):
                result.append((irr, mult))
    result.sort(key=lambda t: (len(t[0]), t[0][::-1]))
    return [(Poly(g), e) for g, e in result]


# ---------------------------------------------------------------------------
# text format: comma-separated coefficients, constant first; rationals as
# "num/den"


def fraction_from_str(s):
    s = s.strip().replace("−", "-")
    return Fraction(s)


def fraction_to_str(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def poly_from_str(s):
    """Parse "c0,c1,...,cn" into a Poly with Fraction coefficients."""
    parts = [t for t in s.split(",") if t.strip()]
    return Poly([fraction_from_str(t) for t in parts])


def poly_to_str(f):
    if isinstance(f, Poly):
        coeffs = f.coeffs
    else:
        coeffs = f
    if not coeffs:
        return "0"
    return ",".join(fraction_to_str(c) for c in coeffs)
