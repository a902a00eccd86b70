"""Habiro-ring streams and their power-series expansion at q = 1.

An element is a stream n -> a_n(q) of integer polynomials standing for
sum a_n(q) (q;q)_n.  The expansion at q = 1 rewrites that sum as
sum c_n q^n after the substitution q -> 1-q; truncating the outer sum at
n < N is exact because (1-q;1-q)_n has q-adic valuation n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .arith import (
    Poly,
    compose_coeffs_one_minus_q,
    fast_ints,
    mul_trunc,
    one_minus_q_pow,
    _poch_step,
)


class HabiroElement:
    """A stream n -> a_n(q) with integer coefficients, plus an id string."""

    def __init__(self, generator: Callable[[int], Poly], ident: str):
        self._generator = generator
        self.ident = ident
        self._cache = {}

    def coeff_poly(self, n: int) -> Poly:
        p = self._cache.get(n)
        if p is None:
            p = self._generator(n)
            self._cache[n] = p
        return p


@dataclass(frozen=True)
class Phi1Expansion:
    """Integer coefficients c_0..c_{N-1} of the expansion at q = 1."""

    coefficients: tuple
    order: int
    source: str


def phi_one(element: HabiroElement, order: int) -> Phi1Expansion:
    """Expansion coefficients of the element at q = 1, truncated at ``order``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    total = [0] * order
    # shifted Pochhammer: Q = (1-q;1-q)_n / q^n, kept at length order - n
    q_shifted = fast_ints([1])
    for n in range(order):
        length = order - n
        a_n = element.coeff_poly(n)
        if a_n:
            for c in a_n.coeffs:
                if c != int(c):
                    raise AssertionError("generator polynomial is not integral")
            comp = fast_ints(compose_coeffs_one_minus_q(a_n.coeffs, length))
            contrib = mul_trunc(comp, q_shifted, length)
            for i, c in enumerate(contrib):
                if c:
                    total[n + i] += c
        if length > 1:
            q_shifted = mul_trunc(q_shifted,
                                  fast_ints(_poch_step(n + 1, length - 1)),
                                  length - 1)
    return Phi1Expansion(tuple(int(c) for c in total), order, element.ident)


def kontsevich() -> HabiroElement:
    """The element with a_n(q) = 1 for all n."""
    one = Poly([1])
    return HabiroElement(lambda n: one, "kontsevich")


def fishburn(order: int) -> tuple:
    """Fishburn numbers xi(0..order-1)."""
    return phi_one(kontsevich(), order).coefficients


def _check_hikami_params(m: int, alpha: int):
    if m == 1:
        if alpha != 0:
            raise ValueError("m = 1 admits only alpha = 0")
    elif m >= 2:
        if not 0 <= alpha <= m - 1:
            raise ValueError("alpha must satisfy 0 <= alpha <= m-1")
    else:
        raise ValueError("m must be >= 1")


def hikami_sequence(m: int, alpha: int, order: int) -> tuple:
    """Coefficients of the m-fold nested q-hypergeometric sum expanded at q = 1.

    The inner indices are bounded by vanishing of the coupling Gaussian
    binomials: index k_i runs over 0..cap where cap = k_{i+1} (+1 when
    i = alpha).  The outer index contributes q-adic valuation, so it is
    cut at ``order``.
    """
    _check_hikami_params(m, alpha)
    if order < 1:
        raise ValueError("order must be >= 1")
    if m == 1:
        return fishburn(order)

    # substituted Gaussian binomial rows: rows[c][k] = [c k]_q at q -> 1-q.
    # The outer index is walked in increasing order, so the first request
    # for any row or inner sum is the longest one; later requests slice.
    row_cache = {}

    def get_row(c, length):
        row = row_cache.get(c)
        if row is not None and len(row[0]) >= length:
            return row
        if c == 0:
            row = [fast_ints([1] + [0] * (length - 1))]
        else:
            prev = get_row(c - 1, length)
            row = [prev[0][:length]]
            for k in range(1, c):
                shifted = mul_trunc(prev[k - 1],
                                    fast_ints(one_minus_q_pow(c - k, length)),
                                    length)
                entry = prev[k][:length] + [0] * (length - len(prev[k]))
                row.append([x + y for x, y in zip(entry, shifted)])
            row.append(fast_ints([1] + [0] * (length - 1)))
        row_cache[c] = row
        return row

    inner_cache = {}

    def inner(i, cap, length):
        # sum over k_i = 0..cap of [cap k_i](1-q) * (1-q)^{k_i^2 (+ k_i)} * child
        key = (i, cap)
        hit = inner_cache.get(key)
        if hit is not None and len(hit) >= length:
            return hit[:length]
        row = get_row(cap, length)
        acc = [0] * length
        for k in range(cap + 1):
            e = k * k + (k if i > alpha else 0)
            term = mul_trunc(row[k], fast_ints(one_minus_q_pow(e, length)),
                             length)
            if i > 1:
                child = inner(i - 1, k + (1 if i - 1 == alpha else 0), length)
                term = mul_trunc(term, child, length)
            for idx, c in enumerate(term):
                acc[idx] += c
        inner_cache[key] = acc
        return acc

    total = [0] * order
    q_shifted = fast_ints([1])  # (1-q;1-q)_t / q^t at length order - t
    for t in range(order):
        length = order - t
        w = inner(m - 1, t + (1 if m - 1 == alpha else 0), length)
        contrib = mul_trunc(q_shifted, w, length)
        for i, c in enumerate(contrib):
            if c:
                total[t + i] += c
        if length > 1:
            q_shifted = mul_trunc(q_shifted,
                                  fast_ints(_poch_step(t + 1, length - 1)),
                                  length - 1)
    return tuple(int(c) for c in total)


def hikami_f2_explicit(order: int) -> tuple:
    """Independent route for (m, alpha) = (2, 0): expand the double sum
    sum_n (q;q)_n sum_k q^{k(k+1)} [n k]_q as exact polynomials in q,
    then substitute q -> 1-q once at the end."""
    if order < 1:
        raise ValueError("order must be >= 1")
    total = [0]  # polynomial in q, untruncated
    poch = [1]   # (q;q)_n
    row = [[1]]  # q-binomial row [n k]_q, built by the Pascal recurrence
    for n in range(order):
        if n:
            poch = _poly_mul_int(poch, [1] + [0] * (n - 1) + [-1])
            new_row = [row[0]]
            for k in range(1, n):
                new_row.append(_poly_add_int(
                    row[k], [0] * (n - k) + row[k - 1]))
            new_row.append([1])
            row = new_row
        inner = [0]
        for k in range(n + 1):
            inner = _poly_add_int(inner, [0] * (k * (k + 1)) + row[k])
        total = _poly_add_int(total, _poly_mul_int(poch, inner))
    out = compose_coeffs_one_minus_q(total, order)
    return tuple(out)


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_add_int(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out
