"""covereq: exact covering-equivalence tests for weighted residue-class systems.

Decides whether two finite systems of weighted residue classes have the same
covering function by testing the exact vanishing of one sum of root-of-unity
fractions in a cyclotomic field whose degree tracks the fraction set of the
moduli, not their lcm.  A brute-force periodic oracle, the exact m-cover test,
composite-order boundary cases and a desk-scale conjecture search round out
the toolkit.
"""

from .arith import Rational, gcd, is_prime, lcm_all, least_prime_greater_than
from .covsys import (
    DEFAULT_MAX_PERIOD,
    CoveringTable,
    PeriodTooLargeError,
    SSet,
    System,
    SystemFormatError,
    WeightedClass,
    covering_table,
    covering_value,
    equivalent_bruteforce,
    exact_m_cover_bruteforce,
    parse_system,
    period,
    s_set,
    serialize_system,
)
from .cyclotomic import (
    CyclotomicNumber,
    IntPolynomial,
    cyclotomic_polynomial,
    euler_phi,
    one_minus_root_inverse,
    root_power,
    shifted_sum,
)
from .equivalence import (
    DEFAULT_SPECTRAL_BOUND,
    CoefficientProfile,
    EquivalenceWitness,
    SpectralCoefficients,
    are_equivalent,
    are_identical_distinct_moduli,
    choose_prime,
    coefficient_profile,
    criterion_sum,
    is_exact_m_cover,
    spectral_coefficients,
    spectral_reconstruct,
)
from .explorer import (
    CompositeCounterexample,
    GoSearchResult,
    GoWitness,
    RawClass,
    composite_counterexample,
    go_search,
    raw_sum,
    verify_bound,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientProfile",
    "CompositeCounterexample",
    "CoveringTable",
    "CyclotomicNumber",
    "DEFAULT_MAX_PERIOD",
    "DEFAULT_SPECTRAL_BOUND",
    "EquivalenceWitness",
    "GoSearchResult",
    "GoWitness",
    "IntPolynomial",
    "PeriodTooLargeError",
    "Rational",
    "RawClass",
    "SSet",
    "SpectralCoefficients",
    "System",
    "SystemFormatError",
    "WeightedClass",
    "are_equivalent",
    "are_identical_distinct_moduli",
    "choose_prime",
    "coefficient_profile",
    "composite_counterexample",
    "covering_table",
    "covering_value",
    "criterion_sum",
    "cyclotomic_polynomial",
    "equivalent_bruteforce",
    "euler_phi",
    "exact_m_cover_bruteforce",
    "gcd",
    "go_search",
    "is_exact_m_cover",
    "is_prime",
    "lcm_all",
    "least_prime_greater_than",
    "one_minus_root_inverse",
    "parse_system",
    "period",
    "raw_sum",
    "root_power",
    "s_set",
    "serialize_system",
    "shifted_sum",
    "spectral_coefficients",
    "spectral_reconstruct",
    "verify_bound",
]
