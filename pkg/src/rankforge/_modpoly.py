"""Dense polynomial arithmetic over F_p on plain coefficient lists.

Coefficients are ints in [0, p), constant term first, no trailing zeros;
the zero polynomial is []. Shared by the finite-field and factorization
code so neither has to depend on the other.
"""


def trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def add(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return trim(out)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def scale(f, k, p):
    k %= p
    return trim([c * k % p for c in f])


def divmod_(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    quo = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        k = len(f) - 1 - dg
        c = f[-1] * inv_lead % p
        quo[k] = c
        for i, b in enumerate(g):
            f[k + i] = (f[k + i] - c * b) % p
        trim(f)
    return trim(quo), f


def mod(f, g, p):
    return divmod_(f, g, p)[1]


def monic(f, p):
    if not f:
        return []
    return scale(f, pow(f[-1], p - 2, p), p)


def gcd(f, g, p):
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def powmod(f, e, m, p):
    """f^e mod m, square and multiply."""
    result = [1]
    f = mod(f, m, p)
    while e > 0:
        if e & 1:
            result = mod(mul(result, f, p), m, p)
        f = mod(mul(f, f, p), m, p)
        e >>= 1
    return result


def deriv(f, p):
    return trim([i * c % p for i, c in enumerate(f)][1:])


def eval_at(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


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


def is_irreducible(f, p):
    """Rabin's irreducibility test for monic f over F_p."""
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if powmod(x, p ** n, f, p) != x:
        return False
    for d in _prime_divisors(n):
        h = sub(powmod(x, p ** (n // d), f, p), x, p)
        if len(gcd(h, f, p)) != 1:
            return False
    return True


def find_irreducible(p, r):
    """Smallest monic irreducible of degree r over F_p, lexicographic in
    (c_{r-1}, ..., c_0)."""
    if r == 1:
        return [0, 1]
    bound = p ** r
    for code in range(bound):
        coeffs = []
        v = code
        for _ in range(r):
            coeffs.append(v % p)
            v //= p
        f = coeffs + [1]
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable
