"""Polynomial/series kernels against naive oracles."""

import math
from fractions import Fraction

import pytest

from fishcong.arith import (
    INFINITY,
    Poly,
    base_p_digits,
    compose_one_minus_q,
    legendre,
    ord_p,
    poly_divmod,
    pochhammer_one_minus,
    qbinomial,
    qpochhammer,
)

from oracles import poly_mul as oracle_mul, qbinomial_oracle


def test_poly_basics():
    p = Poly([1, 2, 3])
    r = Poly([0, -1])
    assert (p * r).coeffs == tuple(oracle_mul([1, 2, 3], [0, -1]))
    assert (p + r).coeffs == (1, 1, 3)
    assert (p - p).coeffs == ()
    assert p(2) == 1 + 4 + 12
    assert Poly([1, 0, 0]).coeffs == (1,)  # trailing zeros trimmed


def test_poly_divmod_exact_and_remainder():
    num = Poly([1, 2, 3]) * Poly([-4, 1, 1])
    q, r = poly_divmod(num, Poly([-4, 1, 1]))
    assert q.coeffs == (1, 2, 3) and not r.coeffs
    q, r = poly_divmod(Poly([1, 0, 1]), Poly([1, 1]))
    assert (q * Poly([1, 1]) + r).coeffs == (1, 0, 1)


@pytest.mark.parametrize("n,k", [(0, 0), (4, 2), (5, 2), (7, 3), (9, 4),
                                 (10, 10), (12, 1)])
def test_qbinomial_matches_pascal_oracle(n, k):
    assert list(qbinomial(n, k).coeffs) == qbinomial_oracle(n, k)


def test_qbinomial_at_one_is_binomial():
    for n in range(12):
        for k in range(n + 1):
            assert qbinomial(n, k)(1) == math.comb(n, k)


def test_qpochhammer_known_values():
    # (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
    s = qpochhammer(2, 6)
    assert s.coeffs[:4] == (1, -1, -1, 1)
    assert qpochhammer(0, 4).coeffs[0] == 1


def test_pochhammer_one_minus_valuation():
    # (1-q;1-q)_n has q-adic valuation exactly n
    for n in range(1, 8):
        coeffs = pochhammer_one_minus(n, 12).coeffs
        assert all(c == 0 for c in coeffs[:n])
        assert coeffs[n] == math.factorial(n)


def test_compose_one_minus_q_is_involutive():
    p = Poly([3, -1, 4, 1, -5])
    once = compose_one_minus_q(p, 10)
    twice = compose_one_minus_q(Poly(list(once.coeffs)), 10)
    assert twice.coeffs[:5] == (3, -1, 4, 1, -5)
    assert all(c == 0 for c in twice.coeffs[5:])


def test_ord_p():
    assert ord_p(0, 5) == INFINITY
    assert ord_p(250, 5) == 3
    assert ord_p(Fraction(4, 75), 5) == -2
    assert ord_p(Fraction(4, 75), 2) == 2
    assert ord_p(-7, 7) == 1


def test_legendre():
    assert [legendre(a, 7) for a in range(7)] == [0, 1, 1, -1, 1, -1, -1]
    assert legendre(-23, 5) == legendre(2, 5) == -1
    with pytest.raises(ValueError):
        legendre(3, 2)


def test_base_p_digits():
    assert base_p_digits(0, 5) == []
    assert base_p_digits(38, 5) == [3, 2, 1]  # 3 + 2*5 + 1*25
    assert sum(d * 7 ** i for i, d in enumerate(base_p_digits(1234, 7))) == 1234
