"""Congruence machinery: carry-counting valuations, residue sets, the
digit obstruction beta, maximal-B predictors, the good-function decomposer,
empirical verifiers and the symbol-density scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .arith import base_p_digits, legendre, ord_p
from .lfunc import PeriodicChi, ThetaDatum


def primes_up_to(n: int):
    """All primes <= n by a sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def kummer_valuation(n: int, k: int, p: int) -> int:
    """ord_p of C(n, k) as the carry count when adding k to n-k in base p."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    a = base_p_digits(k, p)
    b = base_p_digits(n - k, p)
    carries = 0
    carry = 0
    for i in range(max(len(a), len(b))):
        s = (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) + carry
        carry = s // p
        carries += carry
    return carries


@dataclass(frozen=True)
class ResidueSets:
    """Residues of (x^2 - a^2)/b mod p, over the character support
    (S, S_star) and over all of Z (T, T_star); the plain variants exclude
    x divisible by p."""

    p: int
    S: frozenset
    S_star: frozenset
    T: frozenset
    T_star: frozenset


def residue_sets(a: int, b: int, chi: PeriodicChi, p: int) -> ResidueSets:
    if p < 2 or b % p == 0:
        raise ValueError("p must be a prime not dividing b")
    binv = pow(b % p, -1, p)
    M = chi.period
    L = M * p // math.gcd(M, p)
    S, S_star = set(), set()
    for x in range(L):
        if chi(x) == 0:
            continue
        s = (x * x - a * a) * binv % p
        S_star.add(s)
        if x % p:
            S.add(s)
    T, T_star = set(), set()
    for x in range(p):
        s = (x * x - a * a) * binv % p
        T_star.add(s)
        if x:
            T.add(s)
    return ResidueSets(p, frozenset(S), frozenset(S_star),
                       frozenset(T), frozenset(T_star))


def beta(a: int, b: int, p: int) -> int:
    """The p^1 digit of the base-p expansion of -a^2/b (a p-adic unit ratio)."""
    if p < 2 or b % p == 0:
        raise ValueError("p must be a prime not dividing b")
    p2 = p * p
    r = (-a * a) * pow(b % p2, -1, p2) % p2
    return r // p


def max_B_case1(a: int, b: int, p: int) -> int:
    """Largest B with (a^2 - jb | p) = -1 for all j = 1..B (0 if none)."""
    if p == 2 or b % p == 0:
        raise ValueError("p must be an odd prime not dividing b")
    B = 0
    for j in range(1, p):
        if legendre(a * a - j * b, p) != -1:
            break
        B = j
    return B


def max_B_case2(a: int, b: int, p: int) -> Optional[int]:
    """Largest B with (a^2 - jb | p) != 1 for all j = 1..B; None when the
    digit obstruction beta = p-1 makes the route inapplicable."""
    if p == 2 or b % p == 0:
        raise ValueError("p must be an odd prime not dividing b")
    if beta(a, b, p) == p - 1:
        return None
    B = 0
    for j in range(1, p):
        if legendre(a * a - j * b, p) == 1:
            break
        B = j
    return B


def max_B_residue_route(a: int, b: int, chi: PeriodicChi, p: int):
    """(B from S_star, B from S or None): p-1-max(S*) always, and
    p-1-max(S) when beta != p-1."""
    rs = residue_sets(a, b, chi, p)
    b_star = max(p - 1 - max(rs.S_star), 0) if rs.S_star else p - 1
    if beta(a, b, p) == p - 1:
        b_s = None
    else:
        b_s = max(p - 1 - max(rs.S), 0) if rs.S else p - 1
    return b_star, b_s


@dataclass(frozen=True)
class RouteEquivalenceReport:
    p: int
    consistent: bool
    mismatches: tuple


def route_equivalence_check(a: int, b: int, p: int,
                            bmax: int) -> RouteEquivalenceReport:
    """For each B <= bmax, compare the Legendre-chain conditions with the
    T*/T residue-range conditions; they must agree."""
    rs = residue_sets(a, b, PeriodicChi([0]), p)
    mism = []
    chain_minus = True
    chain_not_plus = True
    for B in range(1, bmax + 1):
        sym = legendre(a * a - B * b, p)
        chain_minus = chain_minus and sym == -1
        chain_not_plus = chain_not_plus and sym != 1
        range_star = B <= p - 1 - max(rs.T_star)
        range_plain = B <= p - 1 - max(rs.T)
        if chain_minus != range_star:
            mism.append((B, "minus-chain", chain_minus, range_star))
        if chain_not_plus != range_plain:
            mism.append((B, "not-plus-chain", chain_not_plus, range_plain))
    return RouteEquivalenceReport(p, not mism, tuple(mism))


# ---------------------------------------------------------------------------
# good functions

@dataclass(frozen=True)
class GoodDecomposition:
    good: bool = True
    pairs: tuple = ()  # (u, v, C): +1 at u, -1 at v, uC = v mod M, (C,M)=1


@dataclass(frozen=True)
class NotGood:
    good: bool = False
    reason: str = ""


def good_check(chi: PeriodicChi):
    """Decompose chi into indicator differences psi_{u,v} with multipliers C.

    A pair (u, v) admits a valid C exactly when gcd(u, M) = gcd(v, M), so
    positions are matched within gcd classes.  Returns the explicit triples
    or a certificate of impossibility.
    """
    if any(v not in (-1, 0, 1) for v in chi.values):
        raise ValueError("good-function analysis needs values in {-1, 0, 1}")
    M = chi.period
    by_gcd_plus = {}
    by_gcd_minus = {}
    for a, v in enumerate(chi.values):
        if v == 0:
            continue
        g = math.gcd(a, M)
        (by_gcd_plus if v == 1 else by_gcd_minus).setdefault(g, []).append(a)
    pairs = []
    for g in sorted(set(by_gcd_plus) | set(by_gcd_minus)):
        plus = by_gcd_plus.get(g, [])
        minus = by_gcd_minus.get(g, [])
        if len(plus) != len(minus):
            return NotGood(reason=f"gcd class {g} has {len(plus)} positive "
                                  f"and {len(minus)} negative positions")
        for u, v in zip(plus, minus):
            C = next((c for c in range(1, M + 1)
                      if math.gcd(c, M) == 1 and u * c % M == v % M), None)
            if C is None:
                return NotGood(reason=f"no multiplier maps {u} to {v} mod {M}")
            pairs.append((u, v, C))
    return GoodDecomposition(pairs=tuple(pairs))


# ---------------------------------------------------------------------------
# claims and verification

@dataclass(frozen=True)
class CongruenceClaim:
    p: int
    B: int
    source: str
    max_A_tested: int = 0
    status: str = "predicted"
    witness: tuple = None  # (n, A, value, ord_p) for refutations

    def as_record(self):
        rec = {"p": self.p, "B": self.B, "source": self.source,
               "A_max": self.max_A_tested, "status": self.status}
        if self.witness is not None:
            n, A, value, v = self.witness
            rec["witness"] = {"n": n, "A": A, "value": str(value), "ord": v}
        return rec


def verify_congruence(seq, p: int, A: int, B: int, nmax: int) -> CongruenceClaim:
    """Check seq[p^A n - B] = 0 mod p^A for n = 1..nmax."""
    top = p ** A * nmax - B
    if top >= len(seq):
        raise ValueError(
            f"sequence too short: need index {top}, have {len(seq)} terms")
    modulus = p ** A
    for n in range(1, nmax + 1):
        idx = p ** A * n - B
        if idx < 0:
            continue
        value = seq[idx]
        if value % modulus:
            return CongruenceClaim(p, B, "declared", A, "refuted",
                                   (n, A, value, ord_p(value, p)))
    return CongruenceClaim(p, B, "declared", A, "verified")


@dataclass(frozen=True)
class LinearComboResult:
    ok: bool
    p: int
    terms: tuple
    witness: tuple = None  # (n, value)


def verify_linear_combo(seq, p: int, terms, nmax: int) -> LinearComboResult:
    """Check sum_i c_i seq[p n + r_i] = 0 mod p for n = 0..nmax."""
    terms = tuple((int(c), int(r)) for c, r in terms)
    top = p * nmax + max((r for _, r in terms), default=0)
    if terms and top >= len(seq):
        raise ValueError(
            f"sequence too short: need index {top}, have {len(seq)} terms")
    for n in range(nmax + 1):
        s = sum(c * seq[p * n + r] for c, r in terms)
        if s % p:
            return LinearComboResult(False, p, terms, (n, s))
    return LinearComboResult(True, p, terms)


_SOURCE_ORDER = ("symbol-chain-strict", "residue-range-full",
                 "symbol-chain-weak", "residue-range-unit")


def predict(d: ThetaDatum, pmax: int):
    """Congruence claims for all odd primes p <= pmax not dividing b.

    For primes dividing the character period only the residue-set route is
    used (the shift argument identifying the two routes needs p coprime to
    the period).
    """
    claims = []
    M = d.chi.period
    for p in primes_up_to(pmax):
        if p == 2 or d.b % p == 0:
            continue
        bounds = {}
        b_star, b_s = max_B_residue_route(d.a, d.b, d.chi, p)
        bounds["residue-range-full"] = b_star
        if b_s is not None:
            bounds["residue-range-unit"] = b_s
        if math.gcd(p, M) == 1:
            bounds["symbol-chain-strict"] = max_B_case1(d.a, d.b, p)
            c2 = max_B_case2(d.a, d.b, p)
            if c2 is not None:
                bounds["symbol-chain-weak"] = c2
        best = min(max(bounds.values()), p - 1)
        for B in range(1, best + 1):
            source = next(s for s in _SOURCE_ORDER
                          if bounds.get(s, -1) >= B)
            claims.append(CongruenceClaim(p, B, source))
    return claims


@dataclass(frozen=True)
class DensityReport:
    fraction: float
    total_primes: int
    minus_primes: tuple       # symbol -1: carry a B = 1 claim outright
    claim_primes: tuple       # symbol != 1 (adds the ramified primes)
    residue_classes: tuple    # residues mod |a^2-b| of the claim primes
    guaranteed: bool
    note: str = ""


def density_scan(a: int, b: int, pmax: int) -> DensityReport:
    """Fraction of odd primes p <= pmax, p not dividing b, with
    (a^2 - b | p) = -1, plus the residue classification of claim-carrying
    primes modulo |a^2 - b|."""
    disc = a * a - b
    note = ""
    guaranteed = True
    if disc >= 0 and math.isqrt(disc) ** 2 == disc:
        guaranteed, note = False, "a^2 - b is a square: no density guarantee"
    elif disc % 4 == 3:
        guaranteed, note = False, "a^2 - b = 3 mod 4: no density guarantee"
    minus, claim = [], []
    total = 0
    for p in primes_up_to(pmax):
        if p == 2 or b % p == 0:
            continue
        total += 1
        sym = legendre(disc, p)
        if sym == -1:
            minus.append(p)
        if sym != 1:
            claim.append(p)
    residues = tuple(sorted({p % abs(disc) for p in claim})) if disc else ()
    fraction = len(minus) / total if total else 0.0
    return DensityReport(fraction, total, tuple(minus), tuple(claim),
                         residues, guaranteed, note)
