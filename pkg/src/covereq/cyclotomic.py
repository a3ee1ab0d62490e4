"""Exact arithmetic in the cyclotomic fields Q(zeta_m).

An element is stored by its coordinates on the power basis
1, zeta, ..., zeta^(phi(m)-1) of Q[x]/Phi_m(x).  Phi_m is irreducible over
the rationals, so the coordinate vector of an element is unique; equality,
and in particular the exact zero test that decides covering equivalence,
is a plain tuple comparison.

Mixed-order arithmetic is rejected rather than embedded into a common
field: nothing in this package needs cross-order sums, and implicit
embeddings invite silent degree blowups.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Sequence, Union

from gmpy2 import mpq

from .arith import Rational

Scalar = Union[int, Rational]

_ZERO = mpq(0)
_ONE = mpq(1)


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _int_poly_exact_div(num: Sequence[int], den: Sequence[int]) -> list[int]:
    # Exact division of integer polynomials by a monic divisor.
    rem = list(num)
    dd = len(den) - 1
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                rem[i - dd + j] -= c * den[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _trim(quot)


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    # Division with remainder over the rationals.
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    dd = len(den) - 1
    lead_inv = _ONE / den[-1]
    rem = list(num)
    if len(rem) <= dd:
        return [], _trim(rem)
    quot = [_ZERO] * (len(rem) - dd)
    den_lower = [(j, c) for j, c in enumerate(den[:-1]) if c]
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            f = c * lead_inv
            quot[i - dd] = f
            rem[i] = _ZERO
            base = i - dd
            for j, dc in den_lower:
                rem[base + j] -= f * dc
    return _trim(quot), _trim(rem[:dd])


# ---------------------------------------------------------------------------
# cyclotomic polynomials
# ---------------------------------------------------------------------------

class IntPolynomial:
    """Integer polynomial; coefficients lowest degree first, trailing zeros trimmed."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int]):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __call__(self, x):
        """Evaluate by Horner's rule; works for ints, rationals and field elements."""
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)!r})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


@cache
def cyclotomic_polynomial(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial Phi_m.

    Computed by exact division: (x^m - 1) divided by the product of Phi_d
    over all proper divisors d of m.  Results are memoized, so evaluating
    one order fills in everything below it.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    if m == 1:
        return IntPolynomial((-1, 1))
    coeffs = [0] * (m + 1)
    coeffs[0] = -1
    coeffs[m] = 1
    for d in range(1, m // 2 + 1):
        if m % d == 0:
            coeffs = _int_poly_exact_div(coeffs, cyclotomic_polynomial(d).coefficients)
    return IntPolynomial(coeffs)


def euler_phi(m: int) -> int:
    """Euler's totient, read off as the degree of Phi_m."""
    return cyclotomic_polynomial(m).degree


@cache
def _reduction_terms(m: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    # degree of Phi_m plus its nonzero sub-leading (index, coefficient) pairs
    coeffs = cyclotomic_polynomial(m).coefficients
    return len(coeffs) - 1, tuple((j, c) for j, c in enumerate(coeffs[:-1]) if c)


def _reduce(m: int, coeffs: list) -> list:
    """Remainder modulo Phi_m, padded to exactly phi(m) entries.

    Phi_m is monic, so no divisions occur; zero coefficients of Phi_m are
    skipped, which matters for highly composite m where Phi_m is sparse.
    """
    deg, terms = _reduction_terms(m)
    buf = list(coeffs)
    for i in range(len(buf) - 1, deg - 1, -1):
        c = buf[i]
        if c:
            buf[i] = _ZERO
            base = i - deg
            for j, pc in terms:
                buf[base + j] -= c * pc
    del buf[deg:]
    if len(buf) < deg:
        buf.extend([_ZERO] * (deg - len(buf)))
    return buf


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

class CyclotomicNumber:
    """An element of Q(zeta_m) in canonical power-basis form.

    ``coefficients`` always has exactly phi(m) entries (zero-padded), so two
    elements of equal order are equal iff their coefficient tuples are.
    Instances are immutable and safe to share across threads.
    """

    __slots__ = ("order", "coefficients")

    def __init__(self, order: int, coefficients: Sequence[Scalar]):
        degree = euler_phi(order)
        coeffs = tuple(mpq(c) for c in coefficients)
        if len(coeffs) != degree:
            raise ValueError(
                f"order {order} needs exactly {degree} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_polynomial(cls, order: int, coefficients: Iterable[Scalar]) -> "CyclotomicNumber":
        """Build from a representative polynomial of any degree."""
        return cls(order, _reduce(order, [mpq(c) for c in coefficients]))

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls(order, (_ZERO,) * euler_phi(order))

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cls.from_rational(order, 1)

    @classmethod
    def from_rational(cls, order: int, value: Scalar) -> "CyclotomicNumber":
        coeffs = [_ZERO] * euler_phi(order)
        coeffs[0] = mpq(value)
        return cls(order, coeffs)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        """Exact zero test; no tolerance anywhere."""
        return not any(self.coefficients)

    def is_rational(self) -> bool:
        return not any(self.coefficients[1:])

    def as_rational(self) -> Rational:
        """The element as a rational scalar; raises if it is not one."""
        if not self.is_rational():
            raise ValueError(f"not a rational scalar: {self}")
        return self.coefficients[0]

    # -- ring/field operations ----------------------------------------------

    def _check_order(self, other: "CyclotomicNumber") -> None:
        if self.order != other.order:
            raise ValueError(
                f"cyclotomic order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, CyclotomicNumber):
            self._check_order(other)
            return CyclotomicNumber(
                self.order,
                tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
            )
        if isinstance(other, (int, mpq)):
            return self + CyclotomicNumber.from_rational(self.order, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        if isinstance(other, CyclotomicNumber):
            self._check_order(other)
            return CyclotomicNumber(
                self.order,
                tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
            )
        if isinstance(other, (int, mpq)):
            return self - CyclotomicNumber.from_rational(self.order, other)
        return NotImplemented

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, CyclotomicNumber):
            self._check_order(other)
            a, b = self.coefficients, other.coefficients
            prod = [_ZERO] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        if cb:
                            prod[i + j] += ca * cb
            return CyclotomicNumber(self.order, _reduce(self.order, prod))
        if isinstance(other, (int, mpq)):
            f = mpq(other)
            return CyclotomicNumber(self.order, tuple(c * f for c in self.coefficients))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self * other.inverse()
        if isinstance(other, (int, mpq)):
            if other == 0:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            f = _ONE / mpq(other)
            return CyclotomicNumber(self.order, tuple(c * f for c in self.coefficients))
        return NotImplemented

    def mul_root_power(self, exponent: int) -> "CyclotomicNumber":
        """Multiply by zeta^exponent via a cyclic rotation.

        Lifts the element to Q[x]/(x^m - 1), where multiplying by x^j is a
        rotation of the coefficient vector, then reduces once modulo Phi_m.
        Linear in m per call instead of a full field multiplication.
        """
        m = self.order
        j = exponent % m
        lifted = [_ZERO] * m
        for i, c in enumerate(self.coefficients):
            if c:
                lifted[(i + j) % m] = c
        return CyclotomicNumber(m, _reduce(m, lifted))

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm.

        Runs on (representative, Phi_m) over Q[x]; Phi_m is irreducible, so
        any nonzero representative is coprime to it and the gcd is a unit.
        """
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        r0 = _trim(list(self.coefficients))
        r1 = [mpq(c) for c in cyclotomic_polynomial(self.order).coefficients]
        u0: list = [_ONE]
        u1: list = []
        while r1:
            quot, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            u0, u1 = u1, _poly_mul_sub(u0, quot, u1)
        # r0 is now a nonzero constant c with u0 * self == c (mod Phi_m)
        scale = _ONE / r0[0]
        return CyclotomicNumber.from_polynomial(self.order, [c * scale for c in u0])

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.coefficients == other.coefficients
        if isinstance(other, (int, mpq)):
            return self.is_rational() and self.coefficients[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coefficients))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CyclotomicNumber(order={self.order}, coefficients={[str(c) for c in self.coefficients]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                power = "zeta" if i == 1 else f"zeta^{i}"
                term = power if abs(c) == 1 else f"{abs(c)}*{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _poly_mul_sub(a: list, q: list, b: list) -> list:
    # a - q*b over the rationals
    if not q or not b:
        return list(a)
    prod = [_ZERO] * (len(q) + len(b) - 1)
    for i, cq in enumerate(q):
        if cq:
            for j, cb in enumerate(b):
                if cb:
                    prod[i + j] += cq * cb
    out = list(a)
    if len(out) < len(prod):
        out.extend([_ZERO] * (len(prod) - len(out)))
    for i, c in enumerate(prod):
        if c:
            out[i] -= c
    return _trim(out)


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

@cache
def _root_power_cached(m: int, j: int) -> CyclotomicNumber:
    coeffs = [_ZERO] * (j + 1)
    coeffs[j] = _ONE
    return CyclotomicNumber.from_polynomial(m, coeffs)


def root_power(m: int, j: int) -> CyclotomicNumber:
    """The element zeta_m^j (exponent taken modulo m)."""
    if m < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    return _root_power_cached(m, j % m)


@cache
def _one_minus_root_inverse_cached(m: int, j: int) -> CyclotomicNumber:
    return (CyclotomicNumber.one(m) - root_power(m, j)).inverse()


def one_minus_root_inverse(m: int, n: int) -> CyclotomicNumber:
    """1 / (1 - zeta_m^n); requires m not dividing n so the denominator is nonzero.

    Cached per (m, n mod m): these inverses dominate the cost of the
    equivalence criterion, and systems repeat moduli.
    """
    if m < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    j = n % m
    if j == 0:
        raise ZeroDivisionError(f"1 - zeta_{m}^{n} is zero: {m} divides {n}")
    return _one_minus_root_inverse_cached(m, j)


def shifted_sum(
    order: int,
    terms: Iterable[tuple[CyclotomicNumber, int, Scalar]],
) -> CyclotomicNumber:
    """Sum of scale * element * zeta^shift, with a single final reduction.

    Each term is accumulated in the length-``order`` lift of the field
    (valid because zeta^order = 1), where the shift is a rotation; the
    accumulated vector is reduced modulo Phi_order once at the end.
    """
    buf = [_ZERO] * order
    for element, shift, scale in terms:
        if element.order != order:
            raise ValueError(
                f"cyclotomic order mismatch: {element.order} vs {order}"
            )
        if not scale:
            continue
        j = shift % order
        if scale == 1:
            for i, c in enumerate(element.coefficients):
                if c:
                    buf[(i + j) % order] += c
        else:
            f = mpq(scale)
            for i, c in enumerate(element.coefficients):
                if c:
                    buf[(i + j) % order] += c * f
    return CyclotomicNumber(order, _reduce(order, buf))
