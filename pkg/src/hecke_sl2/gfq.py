"""Exact arithmetic in F_q = F_p[x]/(f) for small prime powers q.

Elements are represented by their integer encoding sum(c_i * p^i) of the
coefficient vector (c_0, ..., c_{deg-1}) in the power basis of x; all
operations go through precomputed tables, so everything downstream
(series, matrices, row reduction) can work on plain numpy integer arrays.

The modulus f is chosen deterministically: the lexicographically smallest
irreducible monic polynomial of the requested degree, coefficients compared
low-degree first.  Two builds of the same (p, deg) are identical, which is
what makes serialized certificates reproducible without a polynomial table.
"""

from __future__ import annotations

import functools
from itertools import product

import numpy as np

from .errors import InvalidParameter


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, low degree first)

def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return out


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    del a[dm:]
    return [c % p for c in a]


def _is_irreducible(m, p):
    """Trial division by all monic polynomials of degree <= deg(m)/2."""
    deg = len(m) - 1
    for e in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=e):
            div = list(tail) + [1]
            if not any(_poly_mod(m, div, p)):
                return False
    return True


class Fq:
    """The field F_q, q = p^deg, with table-driven arithmetic on int encodings."""

    def __init__(self, p: int, deg: int, _token=None):
        if _token is not _BUILD_TOKEN:
            raise InvalidParameter("use field_build(p, deg) to construct fields")
        self.p = p
        self.deg = deg
        self.q = p ** deg
        self.modulus = self._find_modulus()
        self._build_tables()

    def _find_modulus(self):
        if self.deg == 1:
            return (0, 1)  # f = x, the prime-field case
        for tail in product(range(self.p), repeat=self.deg):
            cand = list(tail) + [1]
            if _is_irreducible(cand, self.p):
                return tuple(cand)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _build_tables(self):
        p, q, deg = self.p, self.q, self.deg
        mod = list(self.modulus)
        coeffs = [self.coeffs(a) for a in range(q)]

        def enc(poly):
            return sum(c * p ** i for i, c in enumerate(poly[:deg]))

        mul = np.zeros((q, q), dtype=np.int16)
        for a in range(q):
            for b in range(a, q):
                v = enc(_poly_mod(_poly_mul(list(coeffs[a]), list(coeffs[b]), p), mod, p)
                        if deg > 1 else [(a * b) % p])
                mul[a, b] = v
                mul[b, a] = v
        add = np.zeros((q, q), dtype=np.int16)
        for a in range(q):
            for b in range(a, q):
                v = enc([(x + y) % p for x, y in zip(coeffs[a], coeffs[b])])
                add[a, b] = v
                add[b, a] = v
        neg = np.array([enc([(-x) % p for x in coeffs[a]]) for a in range(q)],
                       dtype=np.int16)
        inv = np.zeros(q, dtype=np.int16)
        for a in range(1, q):
            for b in range(1, q):
                if mul[a, b] == 1:
                    inv[a] = b
                    break
            else:
                raise AssertionError(f"{a} has no inverse; modulus not irreducible?")
        self._mul = mul
        self._add = add
        self._sub = add[:, neg]  # sub[a, b] = a + (-b)
        self._neg = neg
        self._inv = inv
        # frobenius^j for j = 0..deg-1 (x -> x^(p^j))
        frob = np.zeros((deg, q), dtype=np.int16)
        frob[0] = np.arange(q)
        for j in range(1, deg):
            frob[j] = [self.pow(int(frob[j - 1][a]), p) for a in range(q)]
        self._frob = frob

    # -- scalar operations (ints in [0, q)) --------------------------------

    def coeffs(self, a: int):
        """Coefficient tuple (c_0, ..., c_{deg-1}) of the encoding a."""
        out = []
        for _ in range(self.deg):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def encode(self, coeffs) -> int:
        if len(coeffs) != self.deg:
            raise InvalidParameter("coefficient vector has wrong length")
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def add(self, a, b):
        return int(self._add[a, b])

    def sub(self, a, b):
        return int(self._sub[a, b])

    def mul(self, a, b):
        return int(self._mul[a, b])

    def neg(self, a):
        return int(self._neg[a])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return int(self._inv[a])

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def frobenius(self, a, j: int):
        """a^(p^j); frobenius(., deg) is the identity."""
        return int(self._frob[j % self.deg, a])

    def elements(self):
        """All of F_q in the canonical (integer-encoding) order."""
        return range(self.q)

    # -- vectorized operations on numpy int arrays --------------------------

    def vadd(self, A, B):
        if self.deg == 1:
            return (A + B) % self.p
        return self._add[A, B]

    def vsub(self, A, B):
        if self.deg == 1:
            return (A - B) % self.p
        return self._sub[A, B]

    def vmul(self, A, B):
        if self.deg == 1:
            return (A * B) % self.p
        return self._mul[A, B]

    def vneg(self, A):
        if self.deg == 1:
            return (-A) % self.p
        return self._neg[A]

    def vinv(self, A):
        if np.any(A == 0):
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self._inv[A]

    # -----------------------------------------------------------------------

    def to_json_dict(self):
        return {"p": self.p, "deg": self.deg, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"Fq(p={self.p}, deg={self.deg})"

    def __reduce__(self):  # pickle through the canonical constructor
        return (field_build, (self.p, self.deg))


_BUILD_TOKEN = object()


@functools.lru_cache(maxsize=None)
def field_build(p: int, deg: int) -> Fq:
    """Canonical F_{p^deg}; pure in (p, deg), so repeated builds coincide."""
    if not is_prime(p):
        raise InvalidParameter(f"p = {p} is not prime")
    if deg < 1:
        raise InvalidParameter("deg must be >= 1")
    return Fq(p, deg, _token=_BUILD_TOKEN)
