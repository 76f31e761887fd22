"""Finite fields GF(p^e) and their extensions GF(q^m).

Elements are plain ints.  An element of GF(p^e) is encoded by its
coefficient vector over GF(p) in radix p, constant term as the least
significant digit.  An element of GF(q^m) is encoded the same way over
GF(q): ``sum(c_i * q**i)`` where ``c_i`` are base-field ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ParameterError

MAX_Q = 1 << 16
TABLE_Q = 256  # fields up to this size get dense numpy op tables


def _factor(n):
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q):
    """Return (p, e) with q == p**e, or raise ParameterError."""
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise ParameterError(f"field order must be an integer >= 2, got {q!r}")
    fs = _factor(int(q))
    if len(set(fs)) != 1:
        raise ParameterError(f"{q} is not a prime power")
    return fs[0], len(fs)


def _digits(x, base, width):
    out = []
    for _ in range(width):
        x, r = divmod(x, base)
        out.append(r)
    return out


def _undigits(ds, base):
    x = 0
    for d in reversed(ds):
        x = x * base + d
    return x


# -- polynomials over a prime field (lists, low degree first) --------------

def _pmod_p(a, f, p):
    a = [x % p for x in a]
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while a and a[-1] == 0:
        a.pop()
    while len(a) - 1 >= df:
        c = a[-1] * lead_inv % p
        s = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[s + i] = (a[s + i] - c * fi) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _pmulmod_p(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod_p(out, f, p)


def _x_pow_mod_p(n, f, p):
    result, base = [1], [0, 1]
    while n:
        if n & 1:
            result = _pmulmod_p(result, base, f, p)
        base = _pmulmod_p(base, base, f, p)
        n >>= 1
    return result


def _is_primitive_p(f, p):
    e = len(f) - 1
    order = p**e - 1
    if _x_pow_mod_p(order, f, p) != [1]:
        return False
    return all(_x_pow_mod_p(order // r, f, p) != [1] for r in set(_factor(order)))


def first_primitive_poly(p, e):
    """Smallest monic primitive polynomial of degree e over GF(p).

    Candidates are ordered by the integer whose radix-p digits are the
    lower coefficients, constant term least significant.
    """
    for low in range(1, p**e):
        f = _digits(low, p, e) + [1]
        if f[0] and _is_primitive_p(f, p):
            return tuple(f)
    raise AssertionError("no primitive polynomial found")


class GF:
    """The field GF(q), q = p**e <= 2**16, with log/exp tables."""

    def __init__(self, q, modulus=None):
        p, e = prime_power(q)
        if q > MAX_Q:
            raise ParameterError(f"field order {q} exceeds {MAX_Q}")
        self.q, self.p, self.e = int(q), p, e
        if e == 1:
            self.modulus = (0, 1)
        else:
            from ._moduli import BASE_PRIMITIVE

            self.modulus = tuple(modulus or BASE_PRIMITIVE.get(q) or first_primitive_poly(p, e))
        self._build_tables()

    def _build_tables(self):
        q, p = self.q, self.p
        exp = [0] * (2 * q)
        log = [0] * q
        if self.e == 1:
            g = next(g for g in range(1, p) if p == 2 or all(
                pow(g, (p - 1) // r, p) != 1 for r in set(_factor(p - 1))))
            x = 1
            for i in range(q - 1):
                exp[i] = x
                log[x] = i
                x = x * g % p
        else:
            f = list(self.modulus)
            poly = [1]
            for i in range(q - 1):
                v = _undigits(poly + [0] * (self.e - len(poly)), p)
                exp[i] = v
                log[v] = i
                poly = _pmod_p([0] + poly, f, p)
        for i in range(q - 1, 2 * q):
            exp[i] = exp[i - (q - 1)]
        self._exp, self._log = exp, log
        self.generator = exp[1] if q > 2 else 1
        if q <= TABLE_Q:
            a = np.arange(q)
            self.add_t = self._add_arr(a[:, None], a[None, :]).astype(np.uint8)
            self.neg_t = np.array([self.neg(int(x)) for x in a], dtype=np.uint8)
            self.sub_t = self.add_t[:, self.neg_t]
            self.mul_t = np.array([[self.mul(int(x), int(y)) for y in a] for x in a], dtype=np.uint8)
            self.inv_t = np.array([0] + [self.inv(int(x)) for x in a[1:]], dtype=np.uint8)

    def _add_arr(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.e == 1:
            return (a + b) % self.p
        out, mult = 0, 1
        for _ in range(self.e):
            out = out + ((a % self.p + b % self.p) % self.p) * mult
            a, b, mult = a // self.p, b // self.p, mult * self.p
        return out

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self):
        return hash((self.q, self.modulus))

    def __call__(self, value):
        return FieldElement(self, int(value) % self.q if self.e == 1 else self._check(value))

    def _check(self, v):
        if not 0 <= v < self.q:
            raise ParameterError(f"{v} is not an element of GF({self.q})")
        return int(v)

    def elements(self):
        return range(self.q)

    # scalar ops on int encodings
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        return _undigits([(x + y) % self.p for x, y in
                          zip(_digits(a, self.p, self.e), _digits(b, self.p, self.e))], self.p)

    def neg(self, a):
        if self.p == 2:
            return a
        if self.e == 1:
            return -a % self.p
        return _undigits([-x % self.p for x in _digits(a, self.p, self.e)], self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frobenius(self, a, i=1):
        """a -> a**(p**i), the absolute Frobenius."""
        return self.pow(a, self.p ** (i % self.e))

    def to_digits(self, a):
        """Coefficient vector of a over GF(p), constant first."""
        return _digits(a, self.p, self.e)


@dataclass(frozen=True)
class FieldElement:
    """Convenience wrapper giving operator syntax to field ints."""

    field: object
    value: int

    def _other(self, o):
        if isinstance(o, FieldElement):
            if o.field != self.field:
                raise ParameterError("elements of different fields")
            return o.value
        return self.field(o).value

    def __add__(self, o):
        return FieldElement(self.field, self.field.add(self.value, self._other(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElement(self.field, self.field.sub(self.value, self._other(o)))

    def __rsub__(self, o):
        return FieldElement(self.field, self.field.sub(self._other(o), self.value))

    def __mul__(self, o):
        return FieldElement(self.field, self.field.mul(self.value, self._other(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElement(self.field, self.field.div(self.value, self._other(o)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@{self.field!r}"


@lru_cache(maxsize=None)
def field(q):
    """Cached GF(q)."""
    return GF(q)


# -- polynomials over an arbitrary base field ------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, f, F):
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = F.inv(f[-1])
    while len(a) - 1 >= df:
        c = F.mul(a[-1], inv_lead)
        s = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[s + i] = F.sub(a[s + i], F.mul(c, fi))
        _trim(a)
    return a


def poly_mulmod(a, b, f, F):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_mod(out, f, F)


def poly_powmod(a, n, f, F):
    result, base = [1], poly_mod(a, f, F)
    while n:
        if n & 1:
            result = poly_mulmod(result, base, f, F)
        base = poly_mulmod(base, base, f, F)
        n >>= 1
    return result


def poly_gcd(a, b, F):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_mod(a, b, F)
    return a


def is_irreducible(f, F):
    """Rabin's test for a monic f over F."""
    m = len(f) - 1
    if m < 1:
        return False
    x = [0, 1]

    def x_qpow(i):
        r = x
        for _ in range(i):
            r = poly_powmod(r, F.q, f, F)
        return r

    def minus_x(a):
        a = list(a) + [0] * max(0, 2 - len(a))
        a[1] = F.sub(a[1], 1)
        return _trim(a)

    if minus_x(x_qpow(m)):
        return False
    for r in set(_factor(m)):
        g = poly_gcd(f, minus_x(x_qpow(m // r)), F)
        if len(g) > 1:
            return False
    return True


def first_irreducible(F, m):
    """Smallest monic irreducible of degree m over F (radix-q order of the
    lower coefficients, constant least significant)."""
    if m == 1:
        return (0, 1)
    for low in range(1, F.q**m):
        f = _digits(low, F.q, m) + [1]
        if f[0] and is_irreducible(f, F):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class ExtensionField:
    """GF(q^m) as GF(q)[x]/(f) for a fixed monic irreducible f."""

    def __init__(self, base, m, modulus=None):
        if isinstance(base, int):
            base = field(base)
        if m < 1:
            raise ParameterError(f"extension degree must be >= 1, got {m}")
        self.base, self.m = base, int(m)
        self.q = base.q
        self.order = base.q**m
        if modulus is None:
            from ._moduli import EXTENSION_MODULI

            modulus = EXTENSION_MODULI.get((base.q, m)) or first_irreducible(base, m)
        self.modulus = tuple(modulus)
        if len(self.modulus) != m + 1 or self.modulus[-1] != 1:
            raise ParameterError("modulus must be monic of degree m")
        self._mul_cache = {}

    def __repr__(self):
        return f"GF({self.q}^{self.m})"

    def coords(self, a):
        return _digits(a, self.q, self.m)

    def from_coords(self, cs):
        if len(cs) != self.m:
            raise ParameterError(f"expected {self.m} coordinates")
        return _undigits([int(c) for c in cs], self.q)

    def add(self, a, b):
        F = self.base
        return self.from_coords([F.add(x, y) for x, y in zip(self.coords(a), self.coords(b))])

    def neg(self, a):
        return self.from_coords([self.base.neg(x) for x in self.coords(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, c, a):
        """Multiply by a base-field scalar."""
        return self.from_coords([self.base.mul(c, x) for x in self.coords(a)])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        r = poly_mulmod(_trim(self.coords(a)), _trim(self.coords(b)), self.modulus, self.base)
        return _undigits(r, self.q)

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def frobenius(self, a, i=1):
        """a -> a**(q**i), by i successive q-th powers."""
        for _ in range(i % self.m):
            a = self.pow(a, self.q)
        return a

    def elements(self):
        return range(self.order)
