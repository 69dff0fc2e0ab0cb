"""The rank-6 curve family y^2 = x^3 T^2 + 2 g(x) T - h(x) over K.

Roots of the degree-6 polynomial D_T(x) = g(x)^2 + x^3 h(x) are prescribed
as r_i = rho_i^2 with the leading coefficient A = alpha^2, so squareness
survives reduction at every good prime simultaneously. The coefficients of
g and h are solved degree by degree from the elementary symmetric functions
of the r_i and the identity is re-verified by exact expansion.
"""

from dataclasses import dataclass

from .errors import (
    BadPrime,
    DenominatorNotInvertible,
    InternalIdentityFailure,
    RepeatedRoot,
    ZeroAlpha,
    ZeroRoot,
)
from .number_field import KElem, NumberField, PrimeIdeal, reduce_elem
from .poly import Poly, expand_from_roots


@dataclass(frozen=True)
class FamilySpec:
    K: NumberField
    rho: tuple  # six nonzero KElem whose squares are pairwise distinct
    alpha: KElem

    def __post_init__(self):
        if len(self.rho) != 6:
            raise ValueError("exactly six roots are required")


def elementary_symmetric(values, one):
    """s_0..s_k of the given values (s_0 = 1)."""
    s = [one]
    for v in values:
        s.append(s[-1] * 0)
        for k in range(len(s) - 1, 0, -1):
            s[k] = s[k] + s[k - 1] * v
    return s


@dataclass(frozen=True)
class CurveFamily:
    spec: FamilySpec
    a: KElem
    b: KElem
    c: KElem
    A: KElem
    B: KElem
    C: KElem
    D: KElem
    g: Poly
    h: Poly
    D_T: Poly
    roots: tuple  # r_i = rho_i^2
    bad_divisor: int

    @property
    def K(self):
        return self.spec.K


def construct_family(spec):
    """Solve for (a, b, c, A, B, C, D) so that D_T = A * prod(x - rho_i^2)."""
    K = spec.K
    alpha = spec.alpha
    if not alpha:
        raise ZeroAlpha("alpha must be nonzero")
    for i, rho in enumerate(spec.rho):
        if not rho:
            raise ZeroRoot(f"rho_{i + 1} is zero")
    roots = tuple(rho * rho for rho in spec.rho)
    for i in range(6):
        for j in range(i + 1, 6):
            if roots[i] == roots[j]:
                raise RepeatedRoot(
                    f"rho_{i + 1}^2 = rho_{j + 1}^2")

    A = alpha * alpha
    s = elementary_symmetric(roots, K.one)
    prod_rho = K.one
    for rho in spec.rho:
        prod_rho = prod_rho * rho

    c = alpha * prod_rho
    two_c = c + c
    b = -(A * s[5]) / two_c
    a = (A * s[4] - b * b) / two_c
    B = -(A * s[1]) - a - a
    C = A * s[2] - b - b - a * a
    D = -(A * s[3]) - two_c - (a * b + a * b)

    g = Poly([c, b, a, K.one])
    h = Poly([D, C, B, A - K.one])
    x3 = Poly([K.zero, K.zero, K.zero, K.one])
    D_T = g * g + x3 * h

    target = expand_from_roots(roots, A)
    if not (D_T - target).is_zero:
        raise InternalIdentityFailure("expansion does not match A*prod(x - r_i)")

    return CurveFamily(
        spec=spec, a=a, b=b, c=c, A=A, B=B, C=C, D=D,
        g=g, h=h, D_T=D_T, roots=roots,
        bad_divisor=_bad_divisor(spec, roots, (a, b, c, A, B, C, D)))


def _bad_divisor(spec, roots, coefficients):
    """A nonzero rational integer divisible by every bad residue
    characteristic: 2, numerator-norms of alpha, rho_i and all pairwise
    root differences, and every coefficient denominator."""
    d = 2
    for elem in (spec.alpha, *spec.rho):
        d *= abs(elem.norm().numerator)
    for i in range(6):
        for j in range(i + 1, 6):
            d *= abs((roots[i] - roots[j]).norm().numerator)
    for elem in (*coefficients, spec.alpha, *spec.rho):
        for coord in elem.coeffs:
            d *= coord.denominator
    return d


def _family_data(fam):
    return (fam.spec.alpha, *fam.spec.rho,
            fam.a, fam.b, fam.c, fam.A, fam.B, fam.C, fam.D)


def is_good_prime(fam, P):
    """(good, reason). Good means: odd norm, all family data reduces, and
    the six reduced roots stay distinct and nonzero (with alpha a unit)."""
    if P.norm % 2 == 0:
        return False, f"even residue characteristic {P.p}"
    try:
        for elem in _family_data(fam):
            reduce_elem(elem, P)
        alpha_bar = reduce_elem(fam.spec.alpha, P)
        rho_bars = [reduce_elem(rho, P) for rho in fam.spec.rho]
        root_bars = [reduce_elem(r, P) for r in fam.roots]
    except DenominatorNotInvertible:
        return False, f"denominator not invertible mod {P.p}"
    if not alpha_bar:
        return False, f"alpha vanishes mod {P.p}"
    if not all(rho_bars):
        return False, f"a root vanishes mod {P.p}"
    for i in range(6):
        for j in range(i + 1, 6):
            if root_bars[i] == root_bars[j]:
                return False, f"repeated roots mod {P.p}"
    return True, None


def require_good(fam, P):
    good, reason = is_good_prime(fam, P)
    if not good:
        raise BadPrime(reason)


def reduce_family(fam, P):
    """Reduced (g, h, D_T) coefficient lists over the residue field of P."""
    gbar = [reduce_elem(c, P) for c in fam.g.coeffs]
    hbar = [reduce_elem(c, P) for c in fam.h.coeffs]
    dtbar = [reduce_elem(c, P) for c in fam.D_T.coeffs]
    return gbar, hbar, dtbar


def fiber_polynomial(fam, P, t):
    """The cubic in x of the fiber at T = t over the residue field:
    t^2 x^3 + 2 g(x) t - h(x)."""
    fld = P.residue_field
    if t.field != fld:
        raise BadPrime("t must live in the residue field of P")
    gbar, hbar, _ = reduce_family(fam, P)
    gbar += [fld.zero] * (4 - len(gbar))
    hbar += [fld.zero] * (4 - len(hbar))
    tt = t * t
    coeffs = []
    for i in range(4):
        v = gbar[i] * t
        v = v + v - hbar[i]
        if i == 3:
            v = v + tt
        coeffs.append(v)
    return Poly(coeffs)
