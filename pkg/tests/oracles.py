"""Slow, obviously-correct reference implementations used to anchor the
fast library code.  Everything here is deliberately naive: plain list
polynomials, no truncation tricks, no shifted valuations.
"""

from fractions import Fraction


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_add(a, b):
    out = list(a) if len(a) >= len(b) else list(b)
    for i, c in enumerate(b if len(a) >= len(b) else a):
        out[i] += c
    return out


def poly_pow(a, e):
    out = [1]
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def fishburn_oracle(count):
    """Fishburn numbers by direct expansion of sum_n prod_j (1-(1-q)^j).

    Each factor is built by literally raising (1 - q) to the j-th power and
    subtracting from 1; the outer sum is truncated at n = count because the
    n-th product has no terms below q^n.
    """
    total = [0] * count
    product = [1]
    for n in range(count):
        total = poly_add(total, product[:count])
        factor = [-c for c in poly_pow([1, -1], n + 1)]
        factor[0] += 1  # constant term cancels: valuation >= 1
        product = poly_mul(product, factor)
        if all(c == 0 for c in product[:count]):
            break
    return total[:count]


def qbinomial_oracle(n, k):
    """Gaussian binomial [n k]_q by the Pascal-style recurrence
    [n k] = [n-1 k-1] + q^k [n-1 k]."""
    if not 0 <= k <= n:
        return [0]
    row = [[1]]
    for m in range(1, n + 1):
        new = [[1]]
        for j in range(1, m):
            new.append(poly_add(row[j - 1], [0] * j + row[j]))
        new.append([1])
        row = new
    return row[k]


def binom_ord(n, k, p):
    """ord_p of C(n, k) straight from Legendre's factorial formula."""

    def fact_ord(m):
        total = 0
        while m:
            m //= p
            total += m
        return total

    return fact_ord(n) - fact_ord(k) - fact_ord(n - k)


def good_matching_oracle(values):
    """Brute-force decomposability check, independent of the gcd-class
    criterion: try every perfect matching of +1 positions to -1 positions
    where some unit multiplier C maps one to the other mod M."""
    M = len(values)
    plus = [i for i, v in enumerate(values) if v == 1]
    minus = [i for i, v in enumerate(values) if v == -1]
    if len(plus) != len(minus):
        return False
    from math import gcd

    def admissible(u, v):
        return any(gcd(c, M) == 1 and u * c % M == v % M
                   for c in range(1, M + 1))

    def match(i, used):
        if i == len(plus):
            return True
        for j, v in enumerate(minus):
            if j not in used and admissible(plus[i], v):
                if match(i + 1, used | {j}):
                    return True
        return False

    return match(0, frozenset())


def l_value_oracle(values, s):
    """L(chi, -n) for n = -s >= 0 by Abel summation of the partial theta
    series at t -> 0 is overkill; instead use the Hurwitz-zeta split
    L(chi, s) = M^{-s} sum_a chi(a) zeta(s, a/M) evaluated at nonpositive
    integers via zeta(-n, x) = -B_{n+1}(x)/(n+1), with Bernoulli
    polynomials expanded from their binomial recurrence."""
    n = -s
    M = len(values)
    k = n + 1

    bern = [Fraction(1)]
    for m in range(1, k + 1):
        acc = Fraction(0)
        for j in range(m):
            from math import comb
            acc += comb(m + 1, j) * bern[j]
        bern.append(-acc / (m + 1))

    from math import comb
    total = Fraction(0)
    for a, v in enumerate(values):
        if v == 0:
            continue
        x = Fraction(a, M)
        bk = sum(comb(k, j) * bern[k - j] * x ** j for j in range(k + 1))
        total += v * (-bk / k)
    return Fraction(M) ** n * total
