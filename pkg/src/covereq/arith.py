"""Exact integer and rational foundations.

Everything downstream (cyclotomic arithmetic, the equivalence criterion)
is exact: rationals are arbitrary-precision ``gmpy2.mpq`` values, integers
are plain Python ints, and primality is settled by deterministic trial
division.  No floating point enters any decision path.
"""

from __future__ import annotations

import math
from typing import Iterable

from gmpy2 import mpq

# Canonical exact rational type.  mpq stores values reduced, with a positive
# denominator and 0/1 as the canonical zero, which is exactly what the
# canonical-form invariants elsewhere in the package rely on.
Rational = mpq

gcd = math.gcd


def lcm_all(values: Iterable[int]) -> int:
    """Least common multiple of a nonempty collection of positive integers."""
    vals = list(values)
    if not vals:
        raise ValueError("empty modulus list")
    for v in vals:
        if v < 1:
            raise ValueError(f"moduli must be positive, got {v}")
    return math.lcm(*vals)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def least_prime_greater_than(bound: int) -> int:
    """Smallest prime strictly greater than ``bound``."""
    n = max(bound + 1, 2)
    while not is_prime(n):
        n += 1
    return n
