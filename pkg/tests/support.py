"""Shared generators for randomized and exhaustive system tests."""

from __future__ import annotations

import random

from covereq import System, WeightedClass

NONZERO_WEIGHTS = (-3, -2, -1, 1, 2, 3)


def random_system(
    rng: random.Random,
    max_classes: int = 6,
    max_modulus: int = 10,
    weights=NONZERO_WEIGHTS,
    min_classes: int = 1,
) -> System:
    triples = []
    for _ in range(rng.randint(min_classes, max_classes)):
        n = rng.randint(1, max_modulus)
        triples.append((rng.choice(weights), rng.randrange(n), n))
    return System.from_triples(triples)


def split_class(c: WeightedClass) -> list[WeightedClass]:
    # a (mod n) is the disjoint union of a (mod 2n) and a+n (mod 2n)
    return [
        WeightedClass(c.weight, c.residue, 2 * c.modulus),
        WeightedClass(c.weight, c.residue + c.modulus, 2 * c.modulus),
    ]


def split_equivalent(rng: random.Random, system: System, probability: float = 0.5) -> System:
    """A different system with the same covering function, by class splitting."""
    out: list[WeightedClass] = []
    changed = False
    for c in system.classes:
        if rng.random() < probability:
            out.extend(split_class(c))
            changed = True
        else:
            out.append(c)
    if not changed and system.classes:
        out = split_class(system.classes[0]) + list(system.classes[1:])
    return System(tuple(out))


def enumerate_unweighted_systems(budget: int) -> list[System]:
    """Every unweighted system (as a multiset of classes) with modulus sum <= budget.

    Multisets are enumerated as non-decreasing sequences of (modulus, residue)
    pairs, so each system appears exactly once; the empty system is included.
    """
    all_classes = [(n, a) for n in range(1, budget + 1) for a in range(n)]
    systems: list[System] = []
    stack: list[tuple[int, int]] = []

    def rec(idx_min: int, remaining: int) -> None:
        systems.append(System.from_triples([(a, n) for n, a in stack]))
        for idx in range(idx_min, len(all_classes)):
            n, a = all_classes[idx]
            if n <= remaining:
                stack.append((n, a))
                rec(idx, remaining - n)
                stack.pop()

    rec(0, budget)
    return systems
