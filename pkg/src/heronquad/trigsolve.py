"""Complete solver for a*sin(x) + b*cos(x) = c over the reals.

The substitution t = tan(x/2) (which excludes x = pi + 2*k*pi, handled as
its own family) turns the equation into

    (b + c) t^2 - 2 a t + (c - b) = 0,

so the solution set is classified by the sign of the discriminant
D = 4 (a^2 + b^2 - c^2) once the degenerate b + c = 0 branch is split off:

* b + c = 0, a = b = c = 0      -> every real x
* b + c = 0, a = 0, b != 0      -> the odd-pi family x = pi + 2*k*pi
* b + c = 0, a != 0             -> odd-pi plus tan(x/2) = -b/a
* b + c != 0, D < 0             -> no solutions
* b + c != 0, D = 0             -> one family, tan(x/2) = a/(b+c)
* b + c != 0, D > 0             -> two families, tan(x/2) = (a ± sqrt(D)/2)/(b+c)

Rational coefficients classify exactly; float coefficients use a scaled,
configurable tolerance for the zero tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exactnum import DomainError, fraction_sqrt

__all__ = [
    "BaseAngle",
    "EquationCoeffs",
    "FamilyTag",
    "HalfAngleQuadratic",
    "SolutionKind",
    "SolutionSet",
    "classify",
    "enumerate_solutions",
    "half_angle_quadratic",
    "residual",
]

Number = Fraction | float

# adjacent enumerated solutions closer than this merge into one
_MERGE_TOL = 1e-12


def _coerce(value: Number | int, name: str) -> Number:
    if isinstance(value, bool):
        raise DomainError(f"{name} must be a number, got a bool")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    raise DomainError(f"{name} must be a Fraction, int, or float, got {type(value).__name__}")


@dataclass(frozen=True)
class EquationCoeffs:
    """Coefficients of a*sin(x) + b*cos(x) = c; ints promote to Fractions."""

    alpha: Number
    beta: Number
    gamma: Number

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _coerce(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _coerce(self.beta, "beta"))
        object.__setattr__(self, "gamma", _coerce(self.gamma, "gamma"))

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in (self.alpha, self.beta, self.gamma))


@dataclass(frozen=True)
class HalfAngleQuadratic:
    """The quadratic in t = tan(x/2): c2*t^2 + c1*t + c0 = 0."""

    c2: Number
    c1: Number
    c0: Number
    discriminant: Number


def half_angle_quadratic(coeffs: EquationCoeffs) -> HalfAngleQuadratic:
    """Coefficients (b+c, -2a, c-b) and discriminant 4(a^2 + b^2 - c^2)."""
    a, b, c = coeffs.alpha, coeffs.beta, coeffs.gamma
    return HalfAngleQuadratic(b + c, -2 * a, c - b, 4 * (a * a + b * b - c * c))


class SolutionKind(Enum):
    ALL_REALS = "all-reals"
    EMPTY = "empty"
    FAMILIES = "families"


class FamilyTag(Enum):
    ODD_PI = "odd-pi"          # x = pi + 2*k*pi, where tan(x/2) is undefined
    DOUBLE_ANGLE = "double-angle"  # x = 2*atan(t) + 2*k*pi for a root t


@dataclass(frozen=True)
class BaseAngle:
    """One family of solutions {base + 2*k*pi : k integer}.

    ``base`` lies in (-pi, pi]. ``tan_half`` is tan(base/2): an exact
    Fraction when the classification stayed rational, a float otherwise,
    and None for the odd-pi family (undefined there). ``exact`` records
    whether the family was derived without floating arithmetic.
    """

    base: float
    tan_half: Fraction | float | None
    tag: FamilyTag
    exact: bool


@dataclass(frozen=True)
class SolutionSet:
    kind: SolutionKind
    families: tuple[BaseAngle, ...] = ()


_ODD_PI = BaseAngle(math.pi, None, FamilyTag.ODD_PI, True)


def _double_angle(tan_half: Fraction | float) -> BaseAngle:
    base = 2.0 * math.atan(float(tan_half))
    return BaseAngle(base, tan_half, FamilyTag.DOUBLE_ANGLE, isinstance(tan_half, Fraction))


def classify(coeffs: EquationCoeffs, *, float_zero_tol: float = 1e-12) -> SolutionSet:
    """Classify the full solution set of a*sin(x) + b*cos(x) = c.

    Rational coefficients take the exact branch. Float coefficients use
    ``float_zero_tol`` scaled by the coefficient magnitudes for the b+c,
    a, b, and discriminant zero tests.
    """
    if coeffs.is_exact:
        return _classify_exact(coeffs)
    return _classify_float(coeffs, float_zero_tol)


def _classify_exact(coeffs: EquationCoeffs) -> SolutionSet:
    a, b, c = coeffs.alpha, coeffs.beta, coeffs.gamma
    if b + c == 0:
        if a == 0 and b == 0:
            return SolutionSet(SolutionKind.ALL_REALS)
        if a == 0:
            return SolutionSet(SolutionKind.FAMILIES, (_ODD_PI,))
        return SolutionSet(SolutionKind.FAMILIES, (_ODD_PI, _double_angle(-b / a)))
    quarter_disc = a * a + b * b - c * c
    if quarter_disc < 0:
        return SolutionSet(SolutionKind.EMPTY)
    if quarter_disc == 0:
        return SolutionSet(SolutionKind.FAMILIES, (_double_angle(a / (b + c)),))
    root = fraction_sqrt(quarter_disc)
    if root is not None:
        first = (a + root) / (b + c)
        second = (a - root) / (b + c)
    else:
        float_root = math.sqrt(float(quarter_disc))
        first = (float(a) + float_root) / float(b + c)
        second = (float(a) - float_root) / float(b + c)
    return SolutionSet(SolutionKind.FAMILIES, (_double_angle(first), _double_angle(second)))


def _classify_float(coeffs: EquationCoeffs, tol: float) -> SolutionSet:
    a, b, c = (float(v) for v in (coeffs.alpha, coeffs.beta, coeffs.gamma))
    scale = max(abs(a), abs(b), abs(c), 1.0)
    if abs(b + c) <= tol * max(abs(b), abs(c), 1.0):
        if abs(a) <= tol * scale and abs(b) <= tol * scale:
            return SolutionSet(SolutionKind.ALL_REALS)
        if abs(a) <= tol * scale:
            return SolutionSet(SolutionKind.FAMILIES, (_ODD_PI,))
        return SolutionSet(SolutionKind.FAMILIES, (_ODD_PI, _double_angle(-b / a)))
    quarter_disc = a * a + b * b - c * c
    if abs(quarter_disc) <= tol * max(a * a, b * b, c * c, 1.0):
        return SolutionSet(SolutionKind.FAMILIES, (_double_angle(a / (b + c)),))
    if quarter_disc < 0:
        return SolutionSet(SolutionKind.EMPTY)
    root = math.sqrt(quarter_disc)
    return SolutionSet(
        SolutionKind.FAMILIES,
        (_double_angle((a + root) / (b + c)), _double_angle((a - root) / (b + c))),
    )


def enumerate_solutions(solutions: SolutionSet, k_min: int, k_max: int) -> list[float]:
    """Concrete solutions base + 2*k*pi for k in [k_min, k_max], sorted.

    Near-duplicates (within 1e-12) merge. An empty set enumerates to an
    empty list; the all-reals set is uncountable and refused.
    """
    if k_min > k_max:
        raise DomainError(f"empty k range: k_min={k_min} > k_max={k_max}")
    if solutions.kind is SolutionKind.ALL_REALS:
        raise DomainError("every real x is a solution; enumeration is uncountable")
    if solutions.kind is SolutionKind.EMPTY:
        return []
    xs = sorted(
        2.0 * math.pi * k + family.base
        for family in solutions.families
        for k in range(k_min, k_max + 1)
    )
    merged: list[float] = []
    for x in xs:
        if merged and abs(x - merged[-1]) <= _MERGE_TOL:
            continue
        merged.append(x)
    return merged


def residual(coeffs: EquationCoeffs, x: float) -> float:
    """Float defect a*sin(x) + b*cos(x) - c at a candidate solution x."""
    a, b, c = (float(v) for v in (coeffs.alpha, coeffs.beta, coeffs.gamma))
    return a * math.sin(x) + b * math.cos(x) - c
