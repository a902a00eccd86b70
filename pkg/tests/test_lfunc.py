"""L-value kernel: generalized Bernoulli numbers, L-values, the two
coefficient routes, and the floating-point probe."""

import math
from fractions import Fraction

import pytest

from fishcong.lfunc import (
    PeriodicChi,
    ThetaDatum,
    alpha_coefficients,
    asymptotic_residual,
    bernoulli_number,
    chi_12,
    fishburn_datum,
    gen_bernoulli,
    gen_bernoulli_series,
    h_sequence,
    h_via_stirling,
    hikami_chi,
    hikami_datum,
    l_operator,
    l_value,
    stirling1,
    stirling2,
    theta_integrality_check,
)
from fishcong.arith import Poly, ord_p

from oracles import l_value_oracle


def test_periodic_chi_validation():
    with pytest.raises(ValueError):
        PeriodicChi([])
    with pytest.raises(ValueError):
        PeriodicChi([1, 0, 0])  # mean not zero
    chi = chi_12()
    assert chi(13) == 1 and chi(-1) == 1 and chi(5) == -1
    assert chi.support() == (1, 5, 7, 11)
    with pytest.raises(AttributeError):
        chi.period = 3


def test_hikami_chi_m1_is_chi12():
    assert hikami_chi(1, 0) == chi_12()


def test_hikami_chi_support_pattern():
    chi = hikami_chi(2, 0)  # period 20: +1 at 3, 17; -1 at 7, 13
    assert chi.values[3] == chi.values[17] == 1
    assert chi.values[7] == chi.values[13] == -1
    assert sum(map(abs, chi.values)) == 4


def test_bernoulli_numbers():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert bernoulli_number(13) == 0


def test_generalized_bernoulli_closed_form():
    chi = chi_12()
    assert gen_bernoulli(chi, 2) == 4
    assert gen_bernoulli(chi, 4) == -184


def test_generalized_bernoulli_series_cross_check():
    for chi in (chi_12(), hikami_chi(2, 0), hikami_chi(3, 1)):
        series = gen_bernoulli_series(chi, 30)
        for k in range(31):
            assert series[k] == gen_bernoulli(chi, k), (chi, k)


def test_l_values():
    chi = chi_12()
    assert l_value(chi, -1) == -2
    assert l_value(chi, -3) == 46
    for s in range(0, -12, -1):
        assert l_value(chi, s) == l_value_oracle(chi.values, s)
    with pytest.raises(ValueError):
        l_value(chi, 1)


def test_l_operator_linearity():
    chi = chi_12()
    f = Poly([3, 0, -2, 1])
    expected = 3 * l_value(chi, 0) - 2 * l_value(chi, -2) + l_value(chi, -3)
    assert l_operator(chi, f) == expected


def test_stirling_duality():
    for n in range(31):
        for j in range(31):
            s = sum(stirling1(n, k) * stirling2(k, j) for k in range(n + 1))
            assert s == (1 if n == j else 0)


def test_h_sequence_fishburn_values():
    vals = h_sequence(fishburn_datum(), 9).values
    assert vals == tuple(-2 * x for x in (1, 1, 2, 5, 15, 53, 217, 1014, 5335))
    assert all(v.denominator == 1 for v in map(Fraction, vals))


def test_stirling_route_agrees_with_direct_route():
    data = [fishburn_datum(), hikami_datum(2, 0), hikami_datum(3, 1)]
    for d in data:
        assert h_via_stirling(d, 25).values == h_sequence(d, 25).values


def test_theta_integrality():
    assert theta_integrality_check(fishburn_datum(), 500).ok
    assert theta_integrality_check(hikami_datum(3, 2), 500).ok
    bad = ThetaDatum(1, 5, chi_12())
    report = theta_integrality_check(bad, 50)
    assert not report.ok and report.first_violation is not None


def test_datum_validation():
    with pytest.raises(ValueError):
        ThetaDatum(1, 0, chi_12())
    with pytest.raises(ValueError):
        ThetaDatum(-1, 24, chi_12())


def test_asymptotic_probe_ranges():
    with pytest.raises(ValueError):
        asymptotic_residual(fishburn_datum(), Fraction(1, 2), 4)
    with pytest.raises(ValueError):
        asymptotic_residual(fishburn_datum(), Fraction(1, 50), 4, precision=10)


def test_asymptotic_probe_converges():
    # residual after N terms is dominated by the first omitted term
    d = fishburn_datum()
    a6 = abs(alpha_coefficients(d, 7)[6])
    probe = asymptotic_residual(d, Fraction(1, 20), 6, 40)
    assert not probe.indeterminate
    assert probe.residual < 10 * float(a6 * Fraction(1, 20) ** 6)


def test_alpha_consistency_with_h():
    d = fishburn_datum()
    h = h_sequence(d, 8).values
    al = alpha_coefficients(d, 8)
    fact = 1
    for n in range(8):
        if n:
            fact *= n
        lhs = sum(stirling2(n, j) * math.factorial(j) * (-1) ** j * h[j]
                  for j in range(n + 1))
        assert lhs == (-1) ** n * fact * al[n]


def test_generalized_bernoulli_padic_limit():
    # (1/(M p^r)) sum_{a < M p^r} chi(a) a^k approaches B_{k,chi} p-adically
    chi = chi_12()
    p, M = 5, 12
    for k in range(7):
        target = gen_bernoulli(chi, k)
        orders = []
        for r in (1, 2, 3):
            n = M * p ** r
            s = Fraction(sum(chi(a) * a ** k for a in range(n)), n)
            orders.append(ord_p(s - target, p))
        assert orders == sorted(orders), (k, orders)


def test_h_values_p_integral_for_tested_primes():
    for d, primes in ((fishburn_datum(), (5, 7, 11)),
                      (hikami_datum(2, 0), (3, 11, 13))):
        for v in h_sequence(d, 30).values:
            for p in primes:
                assert ord_p(v, p) >= 0
