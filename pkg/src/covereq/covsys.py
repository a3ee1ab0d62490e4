"""Weighted residue-class systems: file format, covering function, brute force.

A system is a finite multiset of classes "residue (mod modulus)" with integer
weights; its covering function w(x) sums the weights of the classes containing
x.  Everything here is the slow-but-obvious side of the package: direct table
evaluation over one period, used as the oracle against which the cyclotomic
criterion is checked.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .arith import Rational, lcm_all

#: Default cap on brute-force table size.  The whole point of the cyclotomic
#: criterion is that it does not care about this limit.
DEFAULT_MAX_PERIOD = 10_000_000


class SystemFormatError(ValueError):
    """Malformed system file; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class PeriodTooLargeError(ValueError):
    """Brute-force refusal: the period exceeds the table bound."""

    def __init__(self, period: int, bound: int):
        super().__init__(
            f"period too large for brute force (period={period}, bound={bound})"
        )
        self.period = period
        self.bound = bound


@dataclass(frozen=True, order=True)
class WeightedClass:
    """One weighted residue class; the residue is normalized into [0, modulus)."""

    weight: int
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def contains(self, x: int) -> bool:
        return (x - self.residue) % self.modulus == 0


@dataclass(frozen=True)
class System:
    """An ordered multiset of weighted classes; order never affects semantics."""

    classes: tuple[WeightedClass, ...] = ()

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int]]) -> "System":
        """Build from (residue, modulus) pairs or (weight, residue, modulus) triples."""
        out = []
        for t in triples:
            if len(t) == 2:
                out.append(WeightedClass(1, t[0], t[1]))
            elif len(t) == 3:
                out.append(WeightedClass(t[0], t[1], t[2]))
            else:
                raise ValueError(f"expected (a, n) or (weight, a, n), got {t!r}")
        return cls(tuple(out))

    def __iter__(self) -> Iterator[WeightedClass]:
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(c.modulus for c in self.classes)

    @property
    def is_unweighted(self) -> bool:
        return all(c.weight == 1 for c in self.classes)

    def negated(self) -> "System":
        return System(tuple(WeightedClass(-c.weight, c.residue, c.modulus) for c in self.classes))

    def combined(self, other: "System") -> "System":
        """Concatenation; with ``other.negated()`` this is the difference system."""
        return System(self.classes + other.classes)

    def scaled(self, factor: int) -> "System":
        return System(tuple(WeightedClass(c.weight * factor, c.residue, c.modulus) for c in self.classes))


def period(system: System) -> int:
    """lcm of all moduli; 1 for the empty system."""
    if not system.classes:
        return 1
    return lcm_all(system.moduli)


def covering_value(system: System, x: int) -> int:
    """w(x): total weight of the classes containing x."""
    return sum(c.weight for c in system.classes if (x - c.residue) % c.modulus == 0)


@dataclass(frozen=True)
class CoveringTable:
    """The covering function tabulated over one full period."""

    period: int
    values: tuple[int, ...]

    def value_at(self, x: int) -> int:
        return self.values[x % self.period]

    def minimized(self) -> "CoveringTable":
        """The same function over its smallest period dividing ``period``."""
        for d in range(1, self.period + 1):
            if self.period % d == 0 and all(
                self.values[i] == self.values[i % d] for i in range(self.period)
            ):
                return CoveringTable(d, self.values[:d])
        return self


def _fill_table(system: System, length: int) -> list[int]:
    # length must be a multiple of every modulus
    values = [0] * length
    for c in system.classes:
        w = c.weight
        for x in range(c.residue, length, c.modulus):
            values[x] += w
    return values


def covering_table(system: System, max_period: int = DEFAULT_MAX_PERIOD) -> CoveringTable:
    """Tabulate w over [0, period); refuses when the period exceeds ``max_period``."""
    length = period(system)
    if length > max_period:
        raise PeriodTooLargeError(length, max_period)
    return CoveringTable(length, tuple(_fill_table(system, length)))


@dataclass(frozen=True)
class SSet:
    """The set of reduced fractions r/n over all source moduli n, in [0, 1)."""

    fractions: frozenset

    @property
    def cardinality(self) -> int:
        return len(self.fractions)

    def sorted_fractions(self) -> list[Rational]:
        return sorted(self.fractions)


def s_set(moduli: Iterable[int]) -> SSet:
    """All fractions r/n (0 <= r < n) over the given moduli, deduplicated.

    The cardinality of this set is what the qualifying prime of the
    equivalence criterion must exceed; it is at most sum(n) - k + 1.
    """
    mods = list(moduli)
    if not mods:
        raise ValueError("empty modulus list")
    fractions = set()
    for n in mods:
        if n < 1:
            raise ValueError(f"moduli must be positive, got {n}")
        for r in range(n):
            fractions.add(Rational(r, n))
    return SSet(frozenset(fractions))


def equivalent_bruteforce(a: System, b: System, max_period: int = DEFAULT_MAX_PERIOD) -> bool:
    """Compare covering functions pointwise over one combined period."""
    length = math.lcm(period(a), period(b))
    if length > max_period:
        raise PeriodTooLargeError(length, max_period)
    return _fill_table(a, length) == _fill_table(b, length)


def exact_m_cover_bruteforce(a: System, m: int, max_period: int = DEFAULT_MAX_PERIOD) -> bool:
    """True iff the (unweighted) system covers every integer exactly m times."""
    if m < 1:
        raise ValueError("cover multiplicity must be positive")
    if not a.is_unweighted:
        raise ValueError("exact cover defined for unweighted systems")
    table = covering_table(a, max_period)
    return all(v == m for v in table.values)


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------
#
# One class per line: an optional "<weight> *" prefix, then "<residue> (<modulus>)".
# Blank lines and lines starting with '#' are ignored; whitespace is free.

_CLASS_RE = re.compile(
    r"^\s*(?:(?P<weight>[+-]?\d+)\s*\*\s*)?(?P<residue>[+-]?\d+)\s*\(\s*(?P<modulus>[+-]?\d+)\s*\)\s*$"
)


def parse_system(text: str) -> System:
    """Parse the line-oriented system format; residues are normalized on load."""
    classes = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _CLASS_RE.match(line)
        if match is None:
            raise SystemFormatError(line_number, f"malformed line: {line!r}")
        modulus = int(match.group("modulus"))
        if modulus < 1:
            raise SystemFormatError(line_number, "modulus must be positive")
        weight = int(match.group("weight")) if match.group("weight") is not None else 1
        classes.append(WeightedClass(weight, int(match.group("residue")), modulus))
    return System(tuple(classes))


def serialize_system(system: System) -> str:
    """One class per line, `weight * residue (modulus)` with `1 * ` omitted."""
    lines = []
    for c in system.classes:
        if c.weight == 1:
            lines.append(f"{c.residue} ({c.modulus})")
        else:
            lines.append(f"{c.weight} * {c.residue} ({c.modulus})")
    return "".join(line + "\n" for line in lines)
