"""Exact engines for Fishburn-type sequences and their congruences.

Two independent routes to the same integer sequences — a power-series
expansion at q = 1 of nested q-hypergeometric sums, and special L-values of
odd periodic functions — plus predictors and empirical verifiers for
prime-power congruences of the form xi(p^A n - B) = 0 mod p^A.
"""

from .arith import (
    INFINITY,
    Poly,
    TruncSeries,
    base_p_digits,
    legendre,
    ord_p,
    qbinomial,
    qpochhammer,
)
from .habiro import (
    HabiroElement,
    Phi1Expansion,
    fishburn,
    hikami_sequence,
    kontsevich,
    phi_one,
)
from .lfunc import (
    PeriodicChi,
    ThetaDatum,
    chi_12,
    fishburn_datum,
    gen_bernoulli,
    h_sequence,
    h_via_stirling,
    hikami_chi,
    hikami_datum,
    l_value,
)
from .congruence import (
    CongruenceClaim,
    beta,
    density_scan,
    good_check,
    kummer_valuation,
    route_equivalence_check,
    max_B_case1,
    max_B_case2,
    max_B_residue_route,
    predict,
    residue_sets,
    verify_congruence,
    verify_linear_combo,
)
from .cache import get_sequence

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "Poly", "TruncSeries", "base_p_digits", "legendre", "ord_p",
    "qbinomial", "qpochhammer",
    "HabiroElement", "Phi1Expansion", "fishburn", "hikami_sequence",
    "kontsevich", "phi_one",
    "PeriodicChi", "ThetaDatum", "chi_12", "fishburn_datum", "gen_bernoulli",
    "h_sequence", "h_via_stirling", "hikami_chi", "hikami_datum", "l_value",
    "CongruenceClaim", "beta", "density_scan", "good_check",
    "kummer_valuation", "route_equivalence_check", "max_B_case1", "max_B_case2",
    "max_B_residue_route", "predict", "residue_sets", "verify_congruence",
    "verify_linear_combo",
    "get_sequence",
]
