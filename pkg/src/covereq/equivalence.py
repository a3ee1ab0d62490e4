"""The cyclotomic criterion for covering equivalence, plus its cross-checks.

Two systems have the same covering function iff a single weighted sum of
root-of-unity fractions vanishes exactly in Q(zeta_p), for any prime p larger
than the cardinality of the fraction set of the moduli.  The cost of the test
tracks that cardinality, never the lcm of the moduli; that is the point.

The second half of the module holds two independent consequences used as
cross-checks: the residue-block coefficient profile (constant exactly when
the sum vanishes) and the finite-Fourier expansion of the covering function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arith import Rational, gcd, is_prime, least_prime_greater_than
from .covsys import (
    DEFAULT_MAX_PERIOD,
    System,
    WeightedClass,
    covering_table,
    period,
    s_set,
)
from .cyclotomic import CyclotomicNumber, one_minus_root_inverse, shifted_sum

#: Largest field order Q(zeta_L) the spectral expansion will work in.
DEFAULT_SPECTRAL_BOUND = 2000


@dataclass(frozen=True)
class EquivalenceWitness:
    """Record of one equivalence decision: the prime used, |S|, and the sum."""

    prime: int
    s_cardinality: int
    combined_sum: CyclotomicNumber
    verdict: bool


def choose_prime(moduli) -> tuple[int, int]:
    """(least qualifying prime, |S|) for the given nonempty modulus list."""
    cardinality = s_set(moduli).cardinality
    return least_prime_greater_than(cardinality), cardinality


def criterion_sum(system: System, prime: int) -> CyclotomicNumber:
    """Sum of weight * zeta_p^residue / (1 - zeta_p^modulus) over the system.

    This is the quantity whose exact vanishing decides whether the weighted
    covering function is identically zero, provided p exceeds |S| of the
    moduli.  The prime must not divide any modulus (automatic for qualifying
    primes, which exceed every modulus).
    """
    if not is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    for c in system.classes:
        if c.modulus % prime == 0:
            raise ValueError(f"prime {prime} divides a modulus ({c.modulus})")
    terms = [
        (one_minus_root_inverse(prime, c.modulus), c.residue, c.weight)
        for c in system.classes
    ]
    return shifted_sum(prime, terms)


def _validated_prime(prime: int, cardinality: int, moduli) -> int:
    if not is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    if prime <= cardinality:
        raise ValueError(f"prime {prime} must exceed |S| = {cardinality}")
    for n in moduli:
        if n % prime == 0:
            raise ValueError(f"prime {prime} divides a modulus ({n})")
    return prime


def are_equivalent(
    a: System, b: System, *, prime: Optional[int] = None
) -> tuple[bool, EquivalenceWitness]:
    """Decide whether a and b have identical covering functions.

    Forms the difference system (b's weights negated) and tests whether its
    criterion sum vanishes in Q(zeta_p), p being the least prime exceeding
    |S| of the combined moduli unless overridden.
    """
    difference = a.combined(b.negated())
    moduli = difference.moduli
    if not moduli:
        # Two empty systems; both covering functions are identically zero.
        p = _validated_prime(prime, 0, ()) if prime is not None else 2
        zero = CyclotomicNumber.zero(p)
        return True, EquivalenceWitness(p, 0, zero, True)
    p, cardinality = choose_prime(moduli)
    if prime is not None:
        p = _validated_prime(prime, cardinality, moduli)
    total = criterion_sum(difference, p)
    verdict = total.is_zero()
    return verdict, EquivalenceWitness(p, cardinality, total, verdict)


def is_exact_m_cover(
    a: System, m: int, *, prime: Optional[int] = None
) -> tuple[bool, EquivalenceWitness]:
    """True iff the unweighted system covers every integer exactly m times.

    Equivalent to covering equivalence with m copies of 0 (mod 1); modulus 1
    only contributes the fraction 0, so |S| and the prime are unchanged.
    """
    if m < 1:
        raise ValueError("cover multiplicity must be positive")
    if not a.is_unweighted:
        raise ValueError("exact cover defined for unweighted systems")
    ones = System(tuple(WeightedClass(1, 0, 1) for _ in range(m)))
    return are_equivalent(a, ones, prime=prime)


def are_identical_distinct_moduli(a: System, b: System) -> bool:
    """For unweighted systems with pairwise distinct moduli, equivalence is identity.

    Returns the criterion verdict, and checks it against direct multiset
    equality of the two systems; a disagreement would mean an arithmetic bug,
    so it is raised rather than returned.
    """
    for label, system in (("first", a), ("second", b)):
        if not system.is_unweighted:
            raise ValueError(f"{label} system must be unweighted")
        mods = system.moduli
        if len(set(mods)) != len(mods):
            raise ValueError(f"moduli must be distinct within the {label} system")
    verdict, _ = are_equivalent(a, b)
    identical = sorted((c.residue, c.modulus) for c in a.classes) == sorted(
        (c.residue, c.modulus) for c in b.classes
    )
    if verdict != identical:
        raise AssertionError(
            "criterion verdict and multiset identity disagree; arithmetic bug"
        )
    return verdict


# ---------------------------------------------------------------------------
# cross-check machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientProfile:
    """Sums of w over the residue blocks l (mod p) of [0, N).

    N is the least common multiple of the moduli congruent to 1 mod p.  The
    profile is constant across l exactly when the criterion sum vanishes.
    """

    prime: int
    common_multiple: int
    coefficients: tuple[int, ...]

    @property
    def is_constant(self) -> bool:
        return len(set(self.coefficients)) <= 1


def coefficient_profile(
    system: System, prime: int, max_period: int = DEFAULT_MAX_PERIOD
) -> CoefficientProfile:
    """Block sums c_l = sum of w(x) over x in [0, N) with x = l (mod p).

    Computed from one period of w by counting, for each table entry r, how
    many of the N/L copies of the period land in the block l; no point of
    [0, N) beyond the first period is ever visited.
    """
    if not is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    length = period(system)
    if gcd(prime, length) != 1:
        raise ValueError(f"prime {prime} shares a factor with the period {length}")
    copies = pow(length, -1, prime)  # least t >= 1 with t*length = 1 (mod p)
    values = covering_table(system, max_period).values
    coeffs = [0] * prime
    for r in range(length):
        w = values[r]
        if w == 0:
            continue
        for l in range(prime):
            # copies q in [0, t) of the period with q*L + r = l (mod p)
            q0 = ((l - r) * copies) % prime
            if q0 < copies:
                coeffs[l] += w * ((copies - 1 - q0) // prime + 1)
    return CoefficientProfile(prime, copies * length, tuple(coeffs))


@dataclass(frozen=True)
class SpectralCoefficients:
    """Finite-Fourier coefficients of w, indexed by the fractions of the moduli.

    Each coefficient g(alpha) lives in Q(zeta_L) with L the system period;
    every exponential that appears is a power of zeta_L, so one field hosts
    the whole expansion.
    """

    order: int
    coefficients: dict


def spectral_coefficients(
    system: System, max_order: int = DEFAULT_SPECTRAL_BOUND
) -> SpectralCoefficients:
    """g(alpha) = sum over classes with alpha * modulus integral of
    (weight / modulus) * zeta_L^(alpha * L * residue), for each alpha in S."""
    length = period(system)
    if length > max_order:
        raise ValueError(f"period {length} exceeds the spectral field bound {max_order}")
    if not system.classes:
        return SpectralCoefficients(1, {})
    one = CyclotomicNumber.one(length)
    out = {}
    for alpha in s_set(system.moduli).sorted_fractions():
        den = int(alpha.denominator)
        step = int(alpha.numerator) * (length // den)
        terms = [
            (one, step * c.residue, Rational(c.weight, c.modulus))
            for c in system.classes
            if c.modulus % den == 0
        ]
        out[alpha] = shifted_sum(length, terms)
    return SpectralCoefficients(length, out)


def spectral_reconstruct(coefficients: SpectralCoefficients, x: int) -> int:
    """Evaluate the Fourier expansion at x; the result must be an integer.

    Returns sum over alpha of zeta_L^(-alpha*L*x) * g(alpha).  A non-integer
    outcome cannot happen for coefficients produced by
    ``spectral_coefficients``; it would signal an arithmetic bug, hence
    ArithmeticError rather than a quiet rounding.
    """
    length = coefficients.order
    terms = []
    for alpha, g in coefficients.coefficients.items():
        shift = -int(alpha.numerator) * (length // int(alpha.denominator)) * x
        terms.append((g, shift, 1))
    total = shifted_sum(length, terms)
    try:
        value = total.as_rational()
    except ValueError as exc:
        raise ArithmeticError(
            f"spectral reconstruction at x={x} is not a rational scalar"
        ) from exc
    if value.denominator != 1:
        raise ArithmeticError(
            f"spectral reconstruction at x={x} is not an integer: {value}"
        )
    return int(value)
