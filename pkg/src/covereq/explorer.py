"""Boundary cases of the criterion: composite orders and the conjecture search.

The equivalence criterion needs a prime order and normalized residues.  This
module probes what happens without them: raw (unnormalized) sums evaluated at
arbitrary orders, the family of vanishing sums at composite orders that sit
below the prime bound, the bound itself, and a desk-scale exhaustive check of
the Graham-O'Bryant conjecture (a vanishing sum with distinct moduli coprime
to q forces the moduli to sum to at least q).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Optional

from .arith import gcd, is_prime
from .covsys import System, s_set
from .cyclotomic import CyclotomicNumber, one_minus_root_inverse, shifted_sum
from .equivalence import criterion_sum


@dataclass(frozen=True)
class RawClass:
    """A weighted class whose residue is deliberately NOT normalized.

    Normalizing a residue into [0, modulus) changes zeta_q^residue whenever
    q does not divide the adjustment, so raw evaluation keeps residues as
    given; that freedom is exactly what the composite-order counterexamples
    exploit.
    """

    weight: int
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")


def raw_sum(classes: Iterable[RawClass], q: int) -> CyclotomicNumber:
    """Sum of weight * zeta_q^residue / (1 - zeta_q^modulus), residues as given.

    q may be composite; it must not divide any modulus, or a denominator
    would vanish.
    """
    if q < 1:
        raise ValueError("order must be a positive integer")
    class_list = list(classes)
    for c in class_list:
        if c.modulus % q == 0:
            raise ValueError(f"order {q} divides a modulus ({c.modulus})")
    terms = [
        (one_minus_root_inverse(q, c.modulus), c.residue, c.weight)
        for c in class_list
    ]
    return shifted_sum(q, terms)


@dataclass(frozen=True)
class CompositeCounterexample:
    """A vanishing raw sum at composite order q with |S| = modulus < q."""

    classes: tuple[RawClass, ...]
    total: CyclotomicNumber
    s_cardinality: int


def composite_counterexample(q: int, p_div: int, n: int) -> CompositeCounterexample:
    """The classes s*(q/p_div) (mod n) for s = 0..p_div-1, all with modulus n.

    Their numerators sum over all p_div-th roots of unity, so the raw sum
    vanishes at order q even though |S(n,...,n)| = n < q: at composite q,
    unnormalized residues break the prime bound.  The construction is
    verified by evaluating the sum exactly.
    """
    if q < 2:
        raise ValueError("order must be at least 2")
    if not is_prime(p_div) or q % p_div != 0:
        raise ValueError(f"{p_div} is not a prime divisor of {q}")
    if not 1 <= n <= q - 1:
        raise ValueError(f"modulus must lie in [1, {q - 1}], got {n}")
    step = q // p_div
    classes = tuple(RawClass(1, s * step, n) for s in range(p_div))
    total = raw_sum(classes, q)
    if not total.is_zero():
        raise ArithmeticError("counterexample sum failed to vanish; arithmetic bug")
    return CompositeCounterexample(classes, total, n)


def verify_bound(system: System, prime: int) -> bool:
    """For an unweighted system whose criterion sum vanishes at ``prime``,
    check the chain  sum(moduli) - k + 1 >= |S| >= prime.

    A False return would refute the implementation (or the theory); the
    exhaustive scans in the test suite expect it never to happen.
    """
    if not system.classes:
        raise ValueError("empty system")
    if not system.is_unweighted:
        raise ValueError("bound applies to unweighted systems")
    total = criterion_sum(system, prime)
    if not total.is_zero():
        raise ValueError("bound only applies to vanishing sums")
    cardinality = s_set(system.moduli).cardinality
    upper = sum(system.moduli) - len(system.classes) + 1
    return upper >= cardinality >= prime


# ---------------------------------------------------------------------------
# Graham-O'Bryant conjecture search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GoWitness:
    """One vanishing instance found by the conjecture search."""

    order: int
    classes: tuple[tuple[int, int], ...]  # (residue, modulus), moduli ascending

    @property
    def modulus_sum(self) -> int:
        return sum(n for _, n in self.classes)

    def wire_format(self) -> str:
        body = ",".join(f"{a}({n})" for a, n in self.classes)
        return (
            f"q={self.order} k={len(self.classes)} "
            f"sum_n={self.modulus_sum} classes={body}"
        )


@dataclass(frozen=True)
class GoSearchResult:
    """Outcome of one search: witnesses in canonical order, verdict, coverage."""

    order: int
    k_max: int
    witnesses: tuple[GoWitness, ...]
    holds: bool
    partial: bool
    units_done: int
    units_total: int


ProgressCallback = Callable[[int, int, int, tuple[int, ...]], None]


def go_search(
    q: int,
    k_max: int,
    *,
    budget_seconds: Optional[float] = None,
    progress: Optional[ProgressCallback] = None,
) -> GoSearchResult:
    """Exhaustively search for vanishing raw sums with distinct moduli coprime to q.

    Enumerates every k <= k_max, every k-subset of the moduli in [1, q)
    coprime to q, and every residue tuple in [0, q)^k; each vanishing sum
    becomes a witness.  Enumeration is lexicographic on (k, moduli,
    residues), so the witness list of a completed search is canonical and
    runs are byte-for-byte reproducible.

    ``budget_seconds`` aborts between modulus subsets; the result is then
    marked partial and covers exactly the completed subsets.  ``progress``
    is called once per (k, modulus subset) unit.
    """
    if q < 2:
        raise ValueError("order must be at least 2")
    if k_max < 1:
        raise ValueError("k_max must be positive")
    moduli = [n for n in range(1, q) if gcd(n, q) == 1]
    units = [(k, combo) for k in range(1, k_max + 1) for combo in combinations(moduli, k)]
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    witnesses: list[GoWitness] = []
    done = 0
    partial = False
    for index, (k, combo) in enumerate(units):
        if deadline is not None and time.monotonic() > deadline:
            partial = True
            break
        if progress is not None:
            progress(index, len(units), k, combo)
        inverses = [one_minus_root_inverse(q, n) for n in combo]
        for residues in product(range(q), repeat=k):
            total = shifted_sum(
                q, [(inverses[i], residues[i], 1) for i in range(k)]
            )
            if total.is_zero():
                witnesses.append(GoWitness(q, tuple(zip(residues, combo))))
        done += 1
    holds = all(w.modulus_sum >= q for w in witnesses)
    return GoSearchResult(q, k_max, tuple(witnesses), holds, partial, done, len(units))
