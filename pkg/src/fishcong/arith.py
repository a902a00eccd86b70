"""Exact arithmetic kernel.

Arbitrary-precision rationals, dense polynomials, truncated q-series,
q-Pochhammer products, Gaussian binomials, p-adic valuations, Legendre
symbols and base-p digits.  Everything here is exact; no floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from operator import mul

Rational = Fraction

INFINITY = math.inf

try:  # optional accelerator for the big-integer series kernels
    from gmpy2 import mpz as _fast_int
except ImportError:  # pragma: no cover
    _fast_int = int


def fast_ints(coeffs):
    """Convert a coefficient list to the fast integer type."""
    return [_fast_int(c) for c in coeffs]


# ---------------------------------------------------------------------------
# internal dense-coefficient helpers (plain lists, int or Fraction entries)

def mul_trunc(a, b, n):
    """Coefficient list of a*b truncated to length n.

    Operands may be shorter than n; missing coefficients are zero.
    """
    la, lb = len(a), len(b)
    out = [0] * n
    for k in range(min(n, la + lb - 1) if la and lb else 0):
        lo = k - lb + 1
        if lo < 0:
            lo = 0
        hi = k if k < la else la - 1
        if lo > hi:
            continue
        end = k - hi - 1
        bs = b[k - lo:end:-1] if end >= 0 else b[k - lo::-1]
        out[k] = sum(map(mul, a[lo:hi + 1], bs))
    return out


def one_minus_q_pow(e, n):
    """Coefficient list of (1-q)**e modulo q**n (e >= 0)."""
    out = []
    c = 1
    for j in range(n):
        out.append(c if j % 2 == 0 else -c)
        c = c * (e - j) // (j + 1)
        if c == 0:
            out.extend([0] * (n - len(out)))
            break
    return out[:n]


def compose_coeffs_one_minus_q(coeffs, n):
    """Coefficient list of p(1-q) mod q**n for p given by its coefficients."""
    out = [0] * n
    # Horner in the substituted variable: out = out*(1-q) + c
    for c in reversed(coeffs):
        prev = out
        out = [0] * n
        out[0] = prev[0] + c
        for i in range(1, n):
            out[i] = prev[i] - prev[i - 1]
    return out


# ---------------------------------------------------------------------------
# polynomials

class Poly:
    """Dense polynomial with exact coefficients, index i = coefficient of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def term(cls, power, coeff=1):
        return cls([0] * power + [coeff])

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly()
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return Poly(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        return Poly([c * a for a in self.coeffs])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def poly_mul(p: Poly, r: Poly) -> Poly:
    return p * r


def poly_divmod(p: Poly, d: Poly):
    """Exact-rational polynomial division: p = q*d + r with deg r < deg d."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dc = d.coeffs
    lead = Fraction(dc[-1])
    quot = [0] * max(len(rem) - len(dc) + 1, 0)
    for i in range(len(rem) - len(dc), -1, -1):
        c = rem[i + len(dc) - 1]
        if c == 0:
            continue
        q = Fraction(c) / lead
        quot[i] = q
        for j, dj in enumerate(dc):
            rem[i + j] -= q * dj
    return Poly(quot), Poly(rem)


# ---------------------------------------------------------------------------
# truncated q-series

class TruncSeries:
    """Power series in q with exact coefficients, truncated at a stated order.

    The coefficient list always has length exactly ``order``.  Arithmetic
    between series of different orders truncates to the minimum order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        cs = list(coeffs)
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("order must be >= 1")
        cs = cs[:order]
        cs += [0] * (order - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def from_poly(cls, p: Poly, order):
        return cls(list(p.coeffs), order)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            n = min(self.order, other.order)
            return TruncSeries(mul_trunc(self.coeffs, other.coeffs, n), n)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        return TruncSeries([c * a for a in self.coeffs], self.order)

    def valuation(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"


def series_mul(s: TruncSeries, t: TruncSeries) -> TruncSeries:
    return s * t


def qpochhammer(n: int, order: int) -> TruncSeries:
    """(q;q)_n truncated at the given order; n = 0 gives the constant 1."""
    if order < 1:
        raise ValueError("order must be >= 1")
    out = [1] + [0] * (order - 1)
    for j in range(1, n + 1):
        if j >= order:
            continue  # (1 - q^j) == 1 mod q^order
        factor = [1] + [0] * (j - 1) + [-1]
        out = mul_trunc(out, factor, order)
    return TruncSeries(out, order)


def qbinomial(n: int, k: int) -> Poly:
    """Gaussian binomial [n k]_q as an exact polynomial; zero outside 0<=k<=n."""
    if k < 0 or k > n:
        return Poly()
    k = min(k, n - k)
    num = Poly([1])
    den = Poly([1])
    for j in range(1, k + 1):
        num *= Poly.term(0, 1) + Poly.term(n - k + j, -1)
        den *= Poly.term(0, 1) + Poly.term(j, -1)
    quot, rem = poly_divmod(num, den)
    assert not rem, "Gaussian binomial division must be exact"
    return Poly([int(c) if isinstance(c, Fraction) else c for c in quot.coeffs])


def compose_one_minus_q(p: Poly, order: int) -> TruncSeries:
    """Expansion of p(1-q) truncated at the given order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return TruncSeries(compose_coeffs_one_minus_q(p.coeffs, order), order)


def pochhammer_one_minus(n: int, order: int) -> TruncSeries:
    """(1-q;1-q)_n mod q^order; has q-adic valuation >= n."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if n >= order:
        return TruncSeries([0], order)
    # track the quotient by q^n; factor (1 - (1-q)^j) contributes one power of q
    out = [1]
    for j in range(1, n + 1):
        length = order - j
        g = _poch_step(j, length)
        out = mul_trunc(out, g, length)
    return TruncSeries([0] * n + out, order)


def _poch_step(j, length):
    """Coefficients of (1 - (1-q)^j) / q, truncated to the given length."""
    c = j
    out = []
    for i in range(length):
        out.append(c if i % 2 == 0 else -c)
        c = c * (j - i - 1) // (i + 2)
        if c == 0:
            break
    return out


def ord_p(r, p: int):
    """p-adic valuation of an integer or Fraction; +inf for zero."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if r == 0:
        return INFINITY
    if isinstance(r, Fraction):
        return _ord_int(r.numerator, p) - _ord_int(r.denominator, p)
    return _ord_int(int(r), p)


def _ord_int(n, p):
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, via Euler's criterion."""
    if p == 2:
        raise ValueError("p must be an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def base_p_digits(n: int, p: int):
    """Little-endian base-p digits of n >= 0; empty list for n = 0."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits
