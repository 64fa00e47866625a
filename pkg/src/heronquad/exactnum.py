"""Exact arithmetic substrate for the quadrilateral constructions.

Three layers live here:

* arbitrary-precision rationals (the stdlib ``Fraction``, re-exported as
  ``Rational``) plus exact square-root helpers,
* quadratic surds ``coefficient * sqrt(radicand)`` kept in a normal form
  with a squarefree radicand, so equality is structural,
* the Euclid parametrization of Pythagorean triples and its inverse.

Everything downstream (coordinates, lengths, areas, oracles) is built on
these so that derived quantities compare exactly, never by tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

# math.gcd already follows the convention the generators rely on: gcd(0, 0) == 0.
from math import gcd

__all__ = [
    "DomainError",
    "LegForm",
    "PythTriple",
    "Rational",
    "Surd",
    "classify_triple",
    "divides_via_power",
    "exact_sqrt",
    "fraction_sqrt",
    "gcd",
    "primitive_triple",
    "scaled_triple",
    "squarefree_decompose",
    "surd_add_same_radicand",
    "surd_eq",
    "surd_mul",
    "surd_normalize",
    "surd_scale",
    "surd_sqrt",
]

Rational = Fraction


class DomainError(ValueError):
    """An argument violates a documented precondition."""


def exact_sqrt(c: int) -> int | None:
    """Integer square root of ``c`` when ``c`` is a perfect square, else None.

    ``None`` is an ordinary outcome, not an error; only ``c < 1`` raises.
    """
    if c < 1:
        raise DomainError(f"exact_sqrt needs a positive integer, got {c}")
    r = math.isqrt(c)
    return r if r * r == c else None


def fraction_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None when irrational.

    A reduced p/q is a rational square exactly when p and q are both
    perfect squares.
    """
    value = Fraction(value)
    if value < 0:
        raise DomainError(f"fraction_sqrt needs a nonnegative value, got {value}")
    if value == 0:
        return Fraction(0)
    num = exact_sqrt(value.numerator)
    if num is None:
        return None
    den = exact_sqrt(value.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def divides_via_power(a: int, b: int, n: int) -> bool:
    """Whether ``a**n`` divides ``b**n``, computed literally on the powers.

    Classical number theory says this holds exactly when ``a`` divides
    ``b``; the power form is evaluated as written so that equivalence
    stays independently testable.
    """
    if a < 1 or b < 1:
        raise DomainError(f"divides_via_power needs positive a and b, got a={a}, b={b}")
    if n < 1:
        raise DomainError(f"divides_via_power needs a positive exponent, got n={n}")
    return b**n % a**n == 0


def squarefree_decompose(c: int) -> tuple[int, int]:
    """Write ``c = s*s*d`` with ``d`` squarefree; returns ``(s, d)``.

    Fast path: perfect squares fall out of one ``isqrt``. Otherwise trial
    division up to the cube root peels off small square factors; the
    cofactor then has at most two prime factors, so a single ``exact_sqrt``
    settles whether a large square remains.
    """
    if c < 1:
        raise DomainError(f"squarefree_decompose needs a positive integer, got {c}")
    whole = exact_sqrt(c)
    if whole is not None:
        return whole, 1
    outside = 1
    radicand = 1
    rest = c
    p = 2
    while p * p * p <= rest:
        if rest % p == 0:
            exponent = 0
            while rest % p == 0:
                rest //= p
                exponent += 1
            outside *= p ** (exponent // 2)
            if exponent % 2:
                radicand *= p
        p += 1 if p == 2 else 2
    tail_root = exact_sqrt(rest)
    if tail_root is not None:
        outside *= tail_root
    else:
        radicand *= rest
    return outside, radicand


@dataclass(frozen=True)
class Surd:
    """Exact value ``coefficient * sqrt(radicand)`` in normal form.

    Invariants: ``radicand`` is squarefree and >= 1, and a zero value is
    stored as ``Surd(0, 1)``; ``radicand == 1`` marks a rational value.
    Build instances through :func:`surd_normalize` or :func:`surd_sqrt` so
    the normal form (and hence structural equality) holds.
    """

    coefficient: Fraction
    radicand: int

    def __post_init__(self) -> None:
        if self.radicand < 1:
            raise DomainError(f"surd radicand must be >= 1, got {self.radicand}")
        if self.coefficient == 0 and self.radicand != 1:
            raise DomainError("the zero surd must carry radicand 1")

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is irrational")
        return self.coefficient

    def __float__(self) -> float:
        return float(self.coefficient) * math.sqrt(self.radicand)

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coefficient)
        coef = str(self.coefficient)
        if "/" in coef or coef.startswith("-"):
            return f"({coef})√{self.radicand}"
        return f"{coef}√{self.radicand}"


def surd_normalize(coefficient: Fraction | int, radicand: int) -> Surd:
    """Normalize ``coefficient * sqrt(radicand)`` to a squarefree radicand."""
    coefficient = Fraction(coefficient)
    if radicand < 1:
        raise DomainError(f"radicand must be >= 1, got {radicand}")
    if coefficient == 0:
        return Surd(Fraction(0), 1)
    outside, squarefree = squarefree_decompose(radicand)
    return Surd(coefficient * outside, squarefree)


def surd_sqrt(value: Fraction | int) -> Surd:
    """Exact square root of a nonnegative rational as a Surd.

    ``sqrt(p/q) = sqrt(p*q) / q``, then square parts move outside.
    """
    value = Fraction(value)
    if value < 0:
        raise DomainError(f"surd_sqrt needs a nonnegative value, got {value}")
    if value == 0:
        return Surd(Fraction(0), 1)
    return surd_normalize(Fraction(1, value.denominator), value.numerator * value.denominator)


def surd_scale(u: Surd, factor: Fraction | int) -> Surd:
    """Multiply a surd by a rational factor."""
    factor = Fraction(factor)
    if factor == 0 or u.coefficient == 0:
        return Surd(Fraction(0), 1)
    return Surd(u.coefficient * factor, u.radicand)


def surd_mul(u: Surd, v: Surd) -> Surd:
    """Exact product; the radicand product renormalizes (sqrt(d)^2 = d)."""
    return surd_normalize(u.coefficient * v.coefficient, u.radicand * v.radicand)


def surd_add_same_radicand(u: Surd, v: Surd) -> Surd:
    """Exact sum of two surds over one radical; mixed radicands are refused.

    Zero operands are compatible with anything. A sum collapsing to zero
    renormalizes to ``Surd(0, 1)``.
    """
    if u.coefficient == 0:
        return v
    if v.coefficient == 0:
        return u
    if u.radicand != v.radicand:
        raise DomainError(f"cannot add surds over sqrt({u.radicand}) and sqrt({v.radicand})")
    total = u.coefficient + v.coefficient
    if total == 0:
        return Surd(Fraction(0), 1)
    return Surd(total, u.radicand)


def surd_eq(u: Surd, v: Surd) -> bool:
    """Equality of values; structural equality of normal forms decides it."""
    return u == v


class LegForm(Enum):
    """Which slot of (a, b) holds the even leg 2*delta*m*n."""

    EVEN_LEG_FIRST = "even-leg-first"
    ODD_LEG_FIRST = "odd-leg-first"


@dataclass(frozen=True)
class PythTriple:
    """A Pythagorean triple a^2 + b^2 = c^2 with its Euclid parameters.

    ``(m, n)`` satisfy m > n >= 1, gcd(m, n) = 1, m + n odd; ``delta`` is the
    common scale; ``leg_form`` records whether ``a`` or ``b`` is the even leg.
    """

    a: int
    b: int
    c: int
    delta: int
    m: int
    n: int
    leg_form: LegForm


def check_generator_pair(m: int, n: int) -> None:
    """Validate an Euclid generator pair; each violation gets its own message."""
    if n < 1:
        raise DomainError(f"generator pair needs n >= 1, got n={n}")
    if m <= n:
        raise DomainError(f"generator pair needs m > n, got m={m}, n={n}")
    if gcd(m, n) != 1:
        raise DomainError(f"generator pair needs gcd(m, n) = 1, got gcd({m}, {n}) = {gcd(m, n)}")
    if (m + n) % 2 == 0:
        raise DomainError(f"generator pair needs m + n odd, got {m} + {n} = {m + n}")


def primitive_triple(m: int, n: int) -> PythTriple:
    """The primitive triple (2mn, m^2 - n^2, m^2 + n^2), even leg first."""
    check_generator_pair(m, n)
    return PythTriple(
        2 * m * n, m * m - n * n, m * m + n * n, 1, m, n, LegForm.EVEN_LEG_FIRST
    )


def scaled_triple(
    delta: int, m: int, n: int, leg_form: LegForm = LegForm.EVEN_LEG_FIRST
) -> PythTriple:
    """The primitive triple for (m, n) scaled by delta, legs ordered by leg_form."""
    if delta < 1:
        raise DomainError(f"delta must be >= 1, got {delta}")
    base = primitive_triple(m, n)
    even, odd = delta * base.a, delta * base.b
    if leg_form is LegForm.EVEN_LEG_FIRST:
        a, b = even, odd
    else:
        a, b = odd, even
    return PythTriple(a, b, delta * base.c, delta, m, n, leg_form)


def classify_triple(a: int, b: int, c: int) -> PythTriple:
    """Invert the parametrization: recover (delta, m, n, leg_form) from a triple.

    delta = gcd(a, b) (which divides c because delta^2 divides c^2); the
    reduced triple is primitive, so exactly one reduced leg is even and

        m^2 = (c0 + odd) / 2,   n^2 = (c0 - odd) / 2.
    """
    if a < 1 or b < 1 or c < 1:
        raise DomainError(f"triple entries must be positive, got ({a}, {b}, {c})")
    if a * a + b * b != c * c:
        raise DomainError(f"not a Pythagorean triple: {a}^2 + {b}^2 != {c}^2")
    delta = gcd(a, b)
    a0, b0, c0 = a // delta, b // delta, c // delta
    if a0 % 2 == 0:
        even, odd, form = a0, b0, LegForm.EVEN_LEG_FIRST
    else:
        even, odd, form = b0, a0, LegForm.ODD_LEG_FIRST
    m = exact_sqrt((c0 + odd) // 2)
    n = exact_sqrt((c0 - odd) // 2)
    if m is None or n is None or 2 * m * n != even or m * m - n * n != odd:
        # unreachable for genuine triples; guards the primitive-structure assumption
        raise DomainError(f"({a}, {b}, {c}) does not reduce to a primitive triple")
    return PythTriple(a, b, c, delta, m, n, form)
