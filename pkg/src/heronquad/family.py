"""The parametric family of these quadrilaterals, and its Heron members.

A generator pair (m, n) with m > n >= 1, gcd(m, n) = 1, m + n odd, and
m^2 + n^2 = L^2 a perfect square feeds the even-leg-first right triple
(2*d*m*n, d*(m^2 - n^2), d*(m^2 + n^2)) for a scale d >= 1. Closed forms
for the member (cross-checked against a fresh coordinate construction on
every call):

    sides      2*d*m*n, 2*d*m*n, 2*d*m*L, 2*d*m*(m^2 - n^2)/L
    diagonals  2*d*m^2, 4*d*m^2*n/L
    tangents   2mn/(n^2 - m^2), -m/n, 2mn/(m^2 - n^2), m/n
    area       4*d^2*m^5*n/L^2

All six lengths and the area are integers exactly when L divides d (the
Heron members). Pairs (m, n) themselves come from a second Euclid layer:
(t1, t2) with t1 > t2 >= 1, gcd = 1, t1 + t2 odd gives m = t1^2 - t2^2,
n = 2*t1*t2 (odd-m form) or m = 2*t1*t2, n = t1^2 - t2^2 (even-m form);
whichever form lands m > n is the usable one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .exactnum import (
    DomainError,
    LegForm,
    Surd,
    check_generator_pair,
    exact_sqrt,
    gcd,
    surd_eq,
)
from .geometry import construct_quad, quad_area

__all__ = [
    "FamilyMember",
    "GeneratorParams",
    "TForm",
    "ThetaValue",
    "coprimality_certificate",
    "enumerate_family",
    "family_member",
    "generating_pairs",
    "heron_member",
    "mnl_from_t",
    "theta_of_member",
]


class TForm(Enum):
    """Which of (m, n) receives the even value 2*t1*t2."""

    ODD_M = "odd-m"    # m = t1^2 - t2^2, n = 2*t1*t2
    EVEN_M = "even-m"  # m = 2*t1*t2,     n = t1^2 - t2^2


@dataclass(frozen=True)
class GeneratorParams:
    """Generator data of a member; t-layer data is kept when known."""

    delta: int
    m: int
    n: int
    L: int
    t1: int | None = None
    t2: int | None = None
    t_form: TForm | None = None

    @property
    def k(self) -> int:
        """The integral hypotenuse-like length sqrt(a^2 + (b+g)^2) = 2*d*m*L."""
        return 2 * self.delta * self.m * self.L


@dataclass(frozen=True)
class FamilyMember:
    """One quadrilateral of the family, in exact closed form."""

    params: GeneratorParams
    side_gamma_b: int
    side_b_gamma2: int
    side_gamma2_gamma1: int
    side_gamma_gamma1: Fraction
    diag_b_gamma1: int
    diag_gamma_gamma2: Fraction
    tan_b: Fraction
    tan_gamma: Fraction
    tan_gamma1: Fraction
    tan_gamma2: Fraction
    area: Fraction
    is_heron: bool

    def triple(self) -> tuple[int, int, int]:
        p = self.params
        return (
            2 * p.delta * p.m * p.n,
            p.delta * (p.m * p.m - p.n * p.n),
            p.delta * (p.m * p.m + p.n * p.n),
        )


def _check_t_pair(t1: int, t2: int) -> None:
    if t2 < 1:
        raise DomainError(f"t pair needs t2 >= 1, got t2={t2}")
    if t1 <= t2:
        raise DomainError(f"t pair needs t1 > t2, got t1={t1}, t2={t2}")
    if gcd(t1, t2) != 1:
        raise DomainError(f"t pair needs gcd(t1, t2) = 1, got gcd({t1}, {t2}) = {gcd(t1, t2)}")
    if (t1 + t2) % 2 == 0:
        raise DomainError(f"t pair needs t1 + t2 odd, got {t1} + {t2} = {t1 + t2}")


def mnl_from_t(t1: int, t2: int, form: TForm) -> tuple[int, int, int]:
    """Map a t-pair to (m, n, L) under the chosen form; refuse m <= n."""
    _check_t_pair(t1, t2)
    square_diff = t1 * t1 - t2 * t2
    double_prod = 2 * t1 * t2
    if form is TForm.ODD_M:
        m, n, other = square_diff, double_prod, TForm.EVEN_M
    else:
        m, n, other = double_prod, square_diff, TForm.ODD_M
    if m <= n:
        raise DomainError(
            f"form {form.value} gives m={m} <= n={n} for (t1={t1}, t2={t2}); "
            f"use form {other.value}"
        )
    return m, n, t1 * t1 + t2 * t2


def family_member(
    delta: int,
    m: int,
    n: int,
    *,
    t1: int | None = None,
    t2: int | None = None,
    t_form: TForm | None = None,
) -> FamilyMember:
    """Build the member for (delta, m, n); (m, n) must have integral L."""
    if delta < 1:
        raise DomainError(f"delta must be >= 1, got {delta}")
    check_generator_pair(m, n)
    L = exact_sqrt(m * m + n * n)
    if L is None:
        raise DomainError(
            f"m^2 + n^2 = {m * m + n * n} is not a perfect square; "
            f"(m={m}, n={n}) does not generate a family member"
        )
    params = GeneratorParams(delta, m, n, L, t1, t2, t_form)
    mm_nn = m * m - n * n
    member = FamilyMember(
        params=params,
        side_gamma_b=2 * delta * m * n,
        side_b_gamma2=2 * delta * m * n,
        side_gamma2_gamma1=2 * delta * m * L,
        side_gamma_gamma1=Fraction(2 * delta * m * mm_nn, L),
        diag_b_gamma1=2 * delta * m * m,
        diag_gamma_gamma2=Fraction(4 * delta * m * m * n, L),
        tan_b=Fraction(2 * m * n, n * n - m * m),
        tan_gamma=Fraction(-m, n),
        tan_gamma1=Fraction(2 * m * n, mm_nn),
        tan_gamma2=Fraction(m, n),
        area=Fraction(4 * delta * delta * m**5 * n, L * L),
        is_heron=delta % L == 0,
    )
    _cross_check(member)
    return member


def _cross_check(member: FamilyMember) -> None:
    # closed forms must agree with a fresh coordinate construction
    a, b, g = (Fraction(v) for v in member.triple())
    q = construct_quad(a, b, g)
    consistent = (
        q.side_gamma_b == member.side_gamma_b
        and q.side_b_gamma2 == member.side_b_gamma2
        and surd_eq(q.side_gamma2_gamma1, Surd(Fraction(member.side_gamma2_gamma1), 1))
        and surd_eq(q.side_gamma_gamma1, Surd(member.side_gamma_gamma1, 1))
        and q.diag_b_gamma1 == member.diag_b_gamma1
        and surd_eq(q.diag_gamma_gamma2, Surd(member.diag_gamma_gamma2, 1))
        and q.tan_b == member.tan_b
        and q.tan_gamma == member.tan_gamma
        and q.tan_gamma1 == member.tan_gamma1
        and q.tan_gamma2 == member.tan_gamma2
        and quad_area(q) == member.area
    )
    if not consistent:
        raise RuntimeError(f"closed forms disagree with coordinates for {member.params}")


def heron_member(m: int, n: int, L: int, j: int = 1) -> FamilyMember:
    """The Heron member at delta = j*L; every length and the area is integral."""
    if j < 1:
        raise DomainError(f"multiplier j must be >= 1, got {j}")
    if exact_sqrt(m * m + n * n) != L:
        raise DomainError(f"(m={m}, n={n}, L={L}) does not satisfy m^2 + n^2 = L^2")
    member = family_member(j * L, m, n)
    if not member.is_heron:  # unreachable: delta = j*L by construction
        raise RuntimeError(f"delta = {j * L} unexpectedly not Heron for (m={m}, n={n})")
    return member


@dataclass(frozen=True)
class ThetaValue:
    """The shared base angle of a member: exact tangent plus float degrees."""

    tan: Fraction
    degrees: float


def theta_of_member(member: FamilyMember) -> ThetaValue:
    p = member.params
    return ThetaValue(Fraction(p.n, p.m), math.degrees(math.atan2(p.n, p.m)))


def generating_pairs(t_max: int) -> Iterator[tuple[int, int, TForm, int, int, int]]:
    """Yield (t1, t2, form, m, n, L) in (t1, t2, form) order.

    Exactly one form per t-pair satisfies m > n; the other is skipped
    silently here (bulk enumeration), unlike single-shot mnl_from_t.
    """
    if t_max < 2:
        raise DomainError(f"t_max must be >= 2, got {t_max}")
    for t1 in range(2, t_max + 1):
        for t2 in range(1, t1):
            if gcd(t1, t2) != 1 or (t1 + t2) % 2 == 0:
                continue
            for form in (TForm.ODD_M, TForm.EVEN_M):
                try:
                    m, n, L = mnl_from_t(t1, t2, form)
                except DomainError:
                    continue
                yield t1, t2, form, m, n, L


def enumerate_family(
    t_max: int,
    delta_max: int,
    *,
    heron_only: bool = False,
    leg_form: LegForm = LegForm.EVEN_LEG_FIRST,
) -> Iterator[FamilyMember]:
    """Enumerate members ordered by (t1, t2, form, delta), each exactly once.

    With ``heron_only`` the delta loop walks the multiples of L up to
    delta_max. Only the even-leg-first family exists here; the odd-leg-first
    parametrization would need m^2 + n^2 = 2*L^2 and is out of scope.
    """
    if leg_form is not LegForm.EVEN_LEG_FIRST:
        raise DomainError(
            "odd-leg-first members would satisfy m^2 + n^2 = 2*L^2; "
            "that family is out of scope for this generator"
        )
    if delta_max < 1:
        raise DomainError(f"delta_max must be >= 1, got {delta_max}")
    for t1, t2, form, m, n, L in generating_pairs(t_max):
        deltas = range(L, delta_max + 1, L) if heron_only else range(1, delta_max + 1)
        for delta in deltas:
            yield family_member(delta, m, n, t1=t1, t2=t2, t_form=form)


def coprimality_certificate(m: int, n: int, L: int) -> tuple[int, int]:
    """Certify gcd(L, 2m(m^2 - n^2)) = gcd(L, 4nm^2) = 1 for a generating triple.

    A non-1 gcd would falsify the coprimality claim behind the Heron
    criterion, so it raises instead of returning quietly.
    """
    check_generator_pair(m, n)
    if exact_sqrt(m * m + n * n) != L:
        raise DomainError(f"(m={m}, n={n}, L={L}) does not satisfy m^2 + n^2 = L^2")
    g1 = gcd(L, 2 * m * (m * m - n * n))
    g2 = gcd(L, 4 * n * m * m)
    if (g1, g2) != (1, 1):
        raise AssertionError(
            f"coprimality claim falsified at (m={m}, n={n}, L={L}): gcds {(g1, g2)}"
        )
    return g1, g2
