"""Arithmetic in F_{p^r} for odd p, with the quadratic character.

Elements live in a polynomial basis over F_p with an explicitly supplied
modulus; the prime-field case r = 1 goes through the same code path.
"""

from . import _modpoly
from .errors import (
    CompositeCharacteristic,
    DivisionByZero,
    FieldMismatch,
    ReducibleModulus,
)
from .primes import is_prime


class FqField:
    """The field with q = p^r elements, p an odd prime.

    modulus is a monic irreducible polynomial over F_p of degree r,
    given constant-first as a sequence of ints.
    """

    def __init__(self, p, modulus, check_irreducible=True):
        if p == 2 or not is_prime(p):
            raise CompositeCharacteristic(f"{p} is not an odd prime")
        mod = [c % p for c in modulus]
        _modpoly.trim(mod)
        if len(mod) < 2 or mod[-1] != 1:
            raise ReducibleModulus("modulus must be monic of degree >= 1")
        if check_irreducible and not _modpoly.is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {mod} factors over F_{p}")
        self.p = p
        self.r = len(mod) - 1
        self.modulus = tuple(mod)
        self.q = p ** self.r
        self._elements = None
        self._chi = None

    def elem(self, coeffs):
        """Element from a coefficient sequence (or an int) mod p."""
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = [x % self.p for x in coeffs]
        if len(c) > self.r:
            c = list(_modpoly.mod(_modpoly.trim(c), list(self.modulus), self.p))
        c += [0] * (self.r - len(c))
        return FqElem(self, tuple(c))

    @property
    def zero(self):
        return self.elem(0)

    @property
    def one(self):
        return self.elem(1)

    def generator(self):
        """The class of the basis variable theta."""
        return self.elem([0, 1])

    def encode(self, u):
        """Index of u in enumeration order (base-p digits, constant first)."""
        code = 0
        for c in reversed(u.coeffs):
            code = code * self.p + c
        return code

    def decode(self, code):
        coeffs = []
        for _ in range(self.r):
            coeffs.append(code % self.p)
            code //= self.p
        return FqElem(self, tuple(coeffs))

    def elements(self):
        """All q elements, lexicographic on coefficient vectors. Cached."""
        if self._elements is None:
            self._elements = [self.decode(i) for i in range(self.q)]
        return self._elements

    def chi_table(self):
        """chi by element code, built by marking squares. Cached.

        Cross-checked against the Euler-criterion route in the tests.
        """
        if self._chi is None:
            p, q = self.p, self.q
            if self.r == 1:
                table = [-1] * q
                table[0] = 0
                for v in range(1, q):
                    table[v * v % p] = 1
            else:
                table = [-1] * q
                table[0] = 0
                m = list(self.modulus)
                for elem in self.elements()[1:]:
                    sq = _modpoly.mod(
                        _modpoly.mul(list(elem.coeffs), list(elem.coeffs), p), m, p)
                    code = 0
                    for c in reversed(sq + [0] * (self.r - len(sq))):
                        code = code * p + c
                    table[code] = 1
            self._chi = table
        return self._chi

    def chi(self, u):
        """Quadratic character of u via the cached squares table."""
        if u.field is not self:
            raise FieldMismatch("element of a different field")
        return self.chi_table()[self.encode(u)]

    def __eq__(self, other):
        return (isinstance(other, FqField)
                and self.p == other.p and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        if self.r == 1:
            return f"F_{self.p}"
        return f"F_{self.q} = F_{self.p}[x]/{list(self.modulus)}"


class FqElem:
    """Immutable element of an FqField; coefficient tuple of length r."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, int):
            return self.field.elem(other)
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise FieldMismatch("elements of different fields")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        prod = _modpoly.mod(
            _modpoly.mul(list(self.coeffs), list(other.coeffs), f.p),
            list(f.modulus), f.p)
        prod += [0] * (f.r - len(prod))
        return FqElem(f, tuple(prod))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        f = self.field
        inv = _modpoly.powmod(list(self.coeffs), f.q - 2, list(f.modulus), f.p)
        inv += [0] * (f.r - len(inv))
        return FqElem(f, tuple(inv))

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
        f = self.field
        out = _modpoly.powmod(list(self.coeffs), e, list(f.modulus), f.p)
        out += [0] * (f.r - len(out))
        return FqElem(f, tuple(out))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field.elem(other)
        return (isinstance(other, FqElem)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.coeffs))

    def __repr__(self):
        return f"FqElem{list(self.coeffs)}@{self.field!r}"


def make_field(p, modulus):
    """Field descriptor for F_p[x]/(modulus); validates p and irreducibility."""
    return FqField(p, modulus)


def enumerate_elements(field):
    """All q elements in deterministic lexicographic order."""
    return list(field.elements())


def quadratic_character(u):
    """Euler's criterion: u^((q-1)/2), read as 0 / +1 / -1."""
    if not u:
        return 0
    v = u ** ((u.field.q - 1) // 2)
    return 1 if v == u.field.one else -1
