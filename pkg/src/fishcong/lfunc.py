"""Periodic characters, generalized Bernoulli numbers, L-values at
non-positive integers, and the L-value formula for the Taylor coefficients
of partial theta functions at q = 1.

All operations are exact except ``asymptotic_residual``, which is the one
floating-point probe and is quarantined behind an explicit precision
parameter and an indeterminate outcome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import Poly, ord_p


class PeriodicChi:
    """Periodic integer-valued function of mean value zero.

    ``values[a]`` is the value on the residue class a mod period.
    """

    __slots__ = ("period", "values")

    def __init__(self, values):
        values = tuple(int(v) for v in values)
        if not values:
            raise ValueError("period must be >= 1")
        if sum(values) != 0:
            raise ValueError("character must have mean value zero")
        object.__setattr__(self, "period", len(values))
        object.__setattr__(self, "values", values)

    def __call__(self, n: int) -> int:
        return self.values[n % self.period]

    def support(self):
        """Residues a mod period with a nonzero value."""
        return tuple(a for a, v in enumerate(self.values) if v)

    def __eq__(self, other):
        if isinstance(other, PeriodicChi):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"PeriodicChi({list(self.values)!r})"

    def __setattr__(self, name, value):
        raise AttributeError("PeriodicChi is immutable")


def chi_12() -> PeriodicChi:
    """The quadratic character mod 12: +1 at 1, 11 and -1 at 5, 7."""
    v = [0] * 12
    v[1] = v[11] = 1
    v[5] = v[7] = -1
    return PeriodicChi(v)


def hikami_chi(m: int, alpha: int) -> PeriodicChi:
    """The period-(8m+4) sign pattern attached to the m-fold nested sum:
    +1 at 2m-2a-1 and 6m+2a+5, -1 at 2m+2a+3 and 6m-2a+1."""
    M = 8 * m + 4
    v = [0] * M
    v[(2 * m - 2 * alpha - 1) % M] += 1
    v[(6 * m + 2 * alpha + 5) % M] += 1
    v[(2 * m + 2 * alpha + 3) % M] -= 1
    v[(6 * m - 2 * alpha + 1) % M] -= 1
    return PeriodicChi(v)


@dataclass(frozen=True)
class ThetaDatum:
    """Parameters (a, b, chi) of the partial theta series
    sum_n n*chi(n)*q^((n^2-a^2)/b), plus a declared proportionality to a
    Habiro-ring element (checked empirically, never trusted)."""

    a: int
    b: int
    chi: PeriodicChi
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        if self.b == 0:
            raise ValueError("b must be nonzero")
        if self.a < 0:
            raise ValueError("a must be >= 0")


def fishburn_datum() -> ThetaDatum:
    return ThetaDatum(1, 24, chi_12(), scale=Fraction(-1, 2))


def hikami_datum(m: int, alpha: int) -> ThetaDatum:
    return ThetaDatum(2 * m - 2 * alpha - 1, 8 * (2 * m + 1),
                      hikami_chi(m, alpha), scale=Fraction(-1, 2))


@dataclass(frozen=True)
class HSequence:
    datum: ThetaDatum
    values: tuple  # Fractions H(0..N-1)


# ---------------------------------------------------------------------------
# Bernoulli machinery

_bernoulli_cache = [Fraction(1)]


def bernoulli_number(k: int) -> Fraction:
    """B_k with the convention B_1 = -1/2."""
    while len(_bernoulli_cache) <= k:
        n = len(_bernoulli_cache)
        # sum_{j<=n} C(n+1, j) B_j = 0 for n >= 1
        s = sum(math.comb(n + 1, j) * _bernoulli_cache[j] for j in range(n))
        _bernoulli_cache.append(Fraction(-s, n + 1))
    return _bernoulli_cache[k]


@lru_cache(maxsize=None)
def bernoulli_poly(k: int) -> Poly:
    """The Bernoulli polynomial B_k(x)."""
    return Poly([math.comb(k, j) * bernoulli_number(k - j) for j in range(k + 1)])


def gen_bernoulli(chi: PeriodicChi, k: int) -> Fraction:
    """Generalized Bernoulli number B_{k,chi}, by the closed form
    M^(k-1) * sum_a chi(a) B_k(a/M)."""
    M = chi.period
    bp = bernoulli_poly(k)
    s = sum(chi.values[a] * bp(Fraction(a, M)) for a in range(M) if chi.values[a])
    return Fraction(M) ** (k - 1) * s


def gen_bernoulli_series(chi: PeriodicChi, kmax: int):
    """B_{0,chi}..B_{kmax,chi} by expanding the generating function
    sum_a chi(a) t e^{at} / (e^{Mt} - 1); independent cross-check path."""
    M = chi.period
    n = kmax + 1
    # numerator / t and denominator / t, truncated to n terms in t
    num = [Fraction(0)] * n
    for a in range(M):
        if chi.values[a]:
            term = Fraction(1)
            for j in range(n):
                num[j] += chi.values[a] * term
                term = term * a / (j + 1)
    den = [Fraction(M) ** (j + 1) / math.factorial(j + 1) for j in range(n)]
    quot = [Fraction(0)] * n
    for j in range(n):
        acc = num[j] - sum(den[j - i] * quot[i] for i in range(j))
        quot[j] = acc / den[0]
    fact = 1
    out = []
    for k in range(n):
        out.append(quot[k] * fact)
        fact *= k + 1
    return out


_lvalue_cache = {}


def l_value(chi: PeriodicChi, s: int) -> Fraction:
    """L_chi(s) at a non-positive integer s, via -B_{n+1,chi}/(n+1)."""
    if s > 0:
        raise ValueError("only non-positive arguments are supported")
    key = (chi, s)
    v = _lvalue_cache.get(key)
    if v is None:
        n = -s
        v = -gen_bernoulli(chi, n + 1) / (n + 1)
        _lvalue_cache[key] = v
    return v


def l_operator(chi: PeriodicChi, f: Poly) -> Fraction:
    """The linear functional sending x^n to L_chi(-n), extended to f."""
    return sum((Fraction(c) * l_value(chi, -n) for n, c in enumerate(f.coeffs)),
               Fraction(0))


# ---------------------------------------------------------------------------
# the H coefficients

def _y_poly(d: ThetaDatum) -> Poly:
    """(x^2 - a^2)/b as a polynomial in x."""
    return Poly([Fraction(-d.a * d.a, d.b), 0, Fraction(1, d.b)])


def h_coefficient(d: ThetaDatum, n: int) -> Fraction:
    """H(n) = (-1)^n * L-functional of x * C((x^2-a^2)/b, n)."""
    return h_sequence(d, n + 1).values[n]


def h_sequence(d: ThetaDatum, count: int) -> HSequence:
    """H(0..count-1) via the binomial-polynomial formula."""
    y = _y_poly(d)
    x = Poly([0, 1])
    prod = Poly([1])  # (y)(y-1)...(y-n+1), built incrementally
    fact = 1
    sign = 1
    values = []
    for n in range(count):
        if n:
            prod = prod * (y - Poly([n - 1]))
            fact *= n
            sign = -sign
        values.append(sign * l_operator(d.chi, x * prod) / fact)
    return HSequence(d, tuple(values))


def _power_sum_values(d: ThetaDatum, count: int):
    """b^-n * L-functional of x (x^2-a^2)^n for n < count."""
    w = Poly([-d.a * d.a, 0, 1])  # x^2 - a^2 over the integers
    x = Poly([0, 1])
    prod = Poly([1])
    out = []
    bpow = Fraction(1)
    for n in range(count):
        if n:
            prod = prod * w
            bpow /= d.b
        out.append(bpow * l_operator(d.chi, x * prod))
    return out


def h_via_stirling(d: ThetaDatum, count: int) -> HSequence:
    """H(0..count-1) by inverting the triangular system
    sum_j {n j} j! (-1)^j H(j) = b^-n * L(x (x^2-a^2)^n)
    with signed first-kind Stirling numbers."""
    v = _power_sum_values(d, count)
    values = []
    fact = 1
    sign = 1
    for n in range(count):
        if n:
            fact *= n
            sign = -sign
        w = sum(stirling1(n, k) * v[k] for k in range(n + 1))
        values.append(sign * w / fact)
    return HSequence(d, tuple(values))


def alpha_coefficients(d: ThetaDatum, count: int):
    """Asymptotic-expansion coefficients: the series in t matching the
    theta sum at q = e^-t is sum alpha(n) t^n."""
    v = _power_sum_values(d, count)
    out = []
    fact = 1
    sign = 1
    for n in range(count):
        if n:
            fact *= n
            sign = -sign
        out.append(sign * v[n] / fact)
    return out


# ---------------------------------------------------------------------------
# Stirling numbers

@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind: (x)(x-1)..(x-n+1) = sum s(n,k) x^k."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k > n:
        return 0
    return stirling1(n - 1, k - 1) - (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind."""
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


# ---------------------------------------------------------------------------
# integrality witness and the floating-point probe

@dataclass(frozen=True)
class IntegralityReport:
    ok: bool
    bound: int
    first_violation: tuple = None  # (n, reason)


def theta_integrality_check(d: ThetaDatum, bound: int) -> IntegralityReport:
    """Verify that every supported n <= bound yields an integral, nonnegative
    exponent (n^2 - a^2)/b; reports the first violation."""
    for n in range(bound + 1):
        if d.chi(n) == 0:
            continue
        e = n * n - d.a * d.a
        if e % d.b != 0:
            return IntegralityReport(False, bound, (n, "exponent not integral"))
        if e // d.b < 0:
            return IntegralityReport(False, bound, (n, "exponent negative"))
    return IntegralityReport(True, bound)


@dataclass(frozen=True)
class ResidualProbe:
    residual: object  # mpmath mpf, or None when indeterminate
    indeterminate: bool
    tail_cutoff: int  # first omitted index of the theta sum
    error_bound: object


def asymptotic_residual(d: ThetaDatum, t: Fraction, count: int,
                        precision: int = 60) -> ResidualProbe:
    """|theta sum at q = e^-t minus the first ``count`` asymptotic terms|.

    The theta sum is evaluated directly in ``precision``-digit floating
    point; the tail is cut once a term drops below 10^-precision.  When the
    residual is smaller than the accumulated error allowance the probe
    reports an indeterminate outcome instead of a fabricated number.
    """
    import mpmath

    t = Fraction(t)
    if t <= 0 or t > Fraction(1, 10):
        raise ValueError("t must lie in (0, 1/10]")
    if precision < 30:
        raise ValueError("precision must be >= 30 digits")

    alphas = alpha_coefficients(d, count) if count else []
    with mpmath.workdps(precision + 10):
        tf = mpmath.mpf(t.numerator) / t.denominator
        cutoff = mpmath.mpf(10) ** (-precision)
        total = mpmath.mpf(0)
        magnitude = mpmath.mpf(0)
        tail_cutoff = 1
        if d.chi.support():
            n = 1
            while True:
                c = d.chi(n)
                if c:
                    e = (n * n - d.a * d.a) // d.b
                    term = n * c * mpmath.exp(-e * tf)
                    total += term
                    magnitude += abs(term)
                    if n > d.a and abs(term) < cutoff:
                        break
                n += 1
            tail_cutoff = n + 1
        approx = mpmath.mpf(0)
        for j, a in enumerate(alphas):
            term = mpmath.mpf(a.numerator) / a.denominator * tf ** j
            approx += term
            magnitude += abs(term)
        residual = abs(total - approx)
        err = magnitude * mpmath.mpf(10) ** (-precision)
        if residual <= err * 100:
            return ResidualProbe(None, True, tail_cutoff, err)
        return ResidualProbe(residual, False, tail_cutoff, err)
