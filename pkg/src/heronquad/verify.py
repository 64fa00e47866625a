"""Independent oracles and verification reports for the constructions.

The oracles work from vertex coordinates and exact arithmetic only - a
4x4 concyclicity determinant, the Ptolemy identity evaluated in surd
arithmetic on coordinate distances, and a general shoelace with an exact
self-intersection test. None of them consult the closed forms they are
used to check, so a bug in the closed forms cannot hide.

Known misprints in the published reference values are kept in a small
registry. When a verification touches one of those quantities the report
carries an ``erratum`` entry (printed value vs oracle value) instead of a
failure, so implementation bugs stay distinguishable from source typos.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactnum import DomainError, Surd, surd_add_same_radicand, surd_mul, surd_sqrt
from .family import FamilyMember
from .geometry import (
    Point2,
    QuadConstruction,
    Vertex,
    angle_identity_check,
    construct_quad,
    dist_squared,
    interior_tangent_from_coords,
    quad_area,
)

__all__ = [
    "Check",
    "CheckStatus",
    "Erratum",
    "VerificationReport",
    "concyclic",
    "concyclicity_determinant",
    "errata_for_member",
    "errata_for_triple",
    "ptolemy_check",
    "shoelace",
    "verify_construction",
    "verify_member",
]


# ---------------------------------------------------------------------------
# oracles


def _det3(rows: Sequence[tuple[Fraction, Fraction, Fraction]]) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def concyclicity_determinant(p1: Point2, p2: Point2, p3: Point2, p4: Point2) -> Fraction:
    """det of rows (x^2 + y^2, x, y, 1); zero iff the points share a circle
    (or a line, which the caller must exclude)."""
    rows = [(p.x * p.x + p.y * p.y, p.x, p.y) for p in (p1, p2, p3, p4)]
    det = Fraction(0)
    for i in range(4):
        minor = [rows[j] for j in range(4) if j != i]
        det += (-1) ** (i + 1) * _det3(minor)
    return det


def _orient(a: Point2, b: Point2, c: Point2) -> int:
    v = (b - a).cross(c - a)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def concyclic(p1: Point2, p2: Point2, p3: Point2, p4: Point2) -> bool:
    """Whether four points lie on one circle, decided exactly.

    Degenerate inputs: fewer than three distinct points is an error; a
    collinear triple (which can also zero the determinant) returns False
    because no circle passes through it.
    """
    pts = (p1, p2, p3, p4)
    distinct = list(dict.fromkeys(pts))
    if len(distinct) < 3:
        raise DomainError("concyclicity needs at least three distinct points")
    for trio in combinations(distinct, 3):
        if _orient(*trio) == 0:
            return False
    return concyclicity_determinant(*pts) == 0


def _surd_square(u: Surd) -> Fraction:
    return u.coefficient * u.coefficient * u.radicand


def _surd_equals_sum(total: Surd, u: Surd, v: Surd) -> bool:
    """Decide total == u + v exactly for nonnegative surds.

    Same radicand: direct normal-form comparison. Mixed radicands: square
    twice - total^2 - u^2 - v^2 must equal 2uv, and a rational can only
    equal a surd whose radicand is 1.
    """
    if u.radicand == v.radicand:
        return total == surd_add_same_radicand(u, v)
    cross = surd_mul(u, v)
    gap = _surd_square(total) - _surd_square(u) - _surd_square(v)
    if cross.radicand == 1:
        return gap == 2 * cross.coefficient
    return False


def ptolemy_check(q: QuadConstruction) -> bool:
    """Ptolemy identity from coordinates alone: for a cyclic quadrilateral
    the diagonal product equals the sum of the opposite-side products."""
    g, b, g2, g1 = q.vertices()
    diag_product = surd_mul(surd_sqrt(dist_squared(g, g2)), surd_sqrt(dist_squared(b, g1)))
    first = surd_mul(surd_sqrt(dist_squared(g, b)), surd_sqrt(dist_squared(g2, g1)))
    second = surd_mul(surd_sqrt(dist_squared(b, g2)), surd_sqrt(dist_squared(g, g1)))
    return _surd_equals_sum(diag_product, first, second)


def _on_segment(a: Point2, b: Point2, p: Point2) -> bool:
    # p is known collinear with a-b
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def _segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


def shoelace(points: Sequence[Point2]) -> Fraction:
    """Exact area of a simple polygon given in traversal order.

    Zero-length edges and self-intersections (tested exactly on every
    non-adjacent edge pair) are errors, not silently wrong areas.
    """
    n = len(points)
    if n < 3:
        raise DomainError(f"a polygon needs at least 3 vertices, got {n}")
    for i in range(n):
        if points[i] == points[(i + 1) % n]:
            raise DomainError(f"zero-length edge at vertex {i}")
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if _segments_intersect(
                points[i], points[(i + 1) % n], points[j], points[(j + 1) % n]
            ):
                raise DomainError(
                    f"traversal order self-intersects (edges {i} and {j}); not a simple polygon"
                )
    twice = Fraction(0)
    for i in range(n):
        p, r = points[i], points[(i + 1) % n]
        twice += p.x * r.y - r.x * p.y
    return abs(twice) / 2


# ---------------------------------------------------------------------------
# erratum registry


@dataclass(frozen=True)
class Erratum:
    """A documented misprint: published value vs oracle-verified value."""

    ident: str
    quantity: str
    printed: str
    computed: str
    note: str

    def to_payload(self) -> dict:
        return {
            "id": self.ident,
            "quantity": self.quantity,
            "printed": self.printed,
            "computed": self.computed,
            "note": self.note,
        }


_ERR_DIAG_92 = Erratum(
    ident="worked-example-diagonal-92",
    quantity="diagonal |Gamma Gamma2| of the (120, 35, 125) construction",
    printed="92",
    computed="192",
    note=(
        "The published worked example prints 92; the exact coordinate distance and "
        "the closed form 4*delta*m^2*n/L both give 192, and the published summary "
        "table itself lists 192."
    ),
)

_ERR_AREA_12888 = Erratum(
    ident="published-table-area-12888",
    quantity="area of the delta=5, m=4, n=3 member",
    printed="12888",
    computed="12288",
    note=(
        "The published table prints 12888; the shoelace oracle and the reduced "
        "area form 4*n*m^5 both give 12288."
    ),
)

_ERR_TAN_GAMMA = Erratum(
    ident="worked-example-tangent-gamma",
    quantity="interior angle tangent at Gamma of the (120, 35, 125) construction",
    printed="-8/3",
    computed="-4/3",
    note=(
        "Follows the -2m/n closed-form misprint; the coordinate oracle and "
        "alpha/(beta-gamma) give -4/3."
    ),
)

_ERR_TAN_GAMMA2 = Erratum(
    ident="worked-example-tangent-gamma2",
    quantity="interior angle tangent at Gamma2 of the (120, 35, 125) construction",
    printed="8/3",
    computed="4/3",
    note=(
        "Follows the 2m/n closed-form misprint; the coordinate oracle and "
        "(beta+gamma)/alpha give 4/3."
    ),
)

_WORKED_TRIPLE = (Fraction(120), Fraction(35), Fraction(125))


def _tangent_form_erratum(member: FamilyMember) -> Erratum:
    m, n = member.params.m, member.params.n
    return Erratum(
        ident="family-tangent-closed-form",
        quantity=f"tangent closed forms at Gamma and Gamma2 for (m={m}, n={n})",
        printed=f"-2m/n = {Fraction(-2 * m, n)} and 2m/n = {Fraction(2 * m, n)}",
        computed=f"-m/n = {Fraction(-m, n)} and m/n = {Fraction(m, n)}",
        note=(
            "The published family table lists -2m/n and 2m/n; the coordinate oracle "
            "and the per-triple forms alpha/(beta-gamma) and (beta+gamma)/alpha "
            "reduce to -m/n and m/n."
        ),
    )


def errata_for_triple(alpha: Fraction, beta: Fraction, gamma: Fraction) -> tuple[Erratum, ...]:
    """Registry hits for a construction given by its right triple."""
    if (Fraction(alpha), Fraction(beta), Fraction(gamma)) == _WORKED_TRIPLE:
        return (_ERR_DIAG_92, _ERR_TAN_GAMMA, _ERR_TAN_GAMMA2)
    return ()


def errata_for_member(member: FamilyMember) -> tuple[Erratum, ...]:
    """Registry hits for a family member (the tangent closed-form misprint
    touches every member; the worked example adds its value-level entries)."""
    p = member.params
    out: list[Erratum] = []
    if (p.m, p.n, p.delta) == (4, 3, 5):
        out += [_ERR_DIAG_92, _ERR_AREA_12888, _ERR_TAN_GAMMA, _ERR_TAN_GAMMA2]
    out.append(_tangent_form_erratum(member))
    return tuple(out)


# ---------------------------------------------------------------------------
# reports


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    ERRATUM = "erratum"


@dataclass(frozen=True)
class Check:
    name: str
    status: CheckStatus
    expected: str
    actual: str

    def to_payload(self) -> dict:
        return {
            "name": self.name,
            "status": self.status.value,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    checks: tuple[Check, ...]
    errata: tuple[Erratum, ...]

    @property
    def has_failures(self) -> bool:
        return any(c.status is CheckStatus.FAIL for c in self.checks)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "erratum": 0}
        for c in self.checks:
            out[c.status.value] += 1
        return out

    def to_payload(self) -> dict:
        return {
            "subject": self.subject,
            "counts": self.counts(),
            "checks": [c.to_payload() for c in self.checks],
        }


def _check(name: str, ok: bool, expected: object, actual: object) -> Check:
    return Check(
        name, CheckStatus.PASS if ok else CheckStatus.FAIL, str(expected), str(actual)
    )


_TANGENT_NAMES = (
    (Vertex.B, "B"),
    (Vertex.GAMMA, "Gamma"),
    (Vertex.GAMMA1, "Gamma1"),
    (Vertex.GAMMA2, "Gamma2"),
)


def _construction_checks(q: QuadConstruction) -> list[Check]:
    checks: list[Check] = []
    g, b, g2, g1 = q.vertices()

    det = concyclicity_determinant(g, b, g2, g1)
    checks.append(_check("concyclicity-determinant", det == 0, 0, det))
    checks.append(_check("concyclic", concyclic(g, b, g2, g1), True, concyclic(g, b, g2, g1)))
    checks.append(_check("ptolemy-identity", ptolemy_check(q), "holds", "holds" if ptolemy_check(q) else "violated"))

    right = (g2 - b).dot(g1 - b)
    checks.append(_check("right-angle-at-B", right == 0, 0, right))

    for point, label in ((g, "Gamma"), (b, "B"), (g2, "Gamma2"), (g1, "Gamma1")):
        r2 = dist_squared(point, q.circumcenter)
        checks.append(
            _check(f"circumradius-{label}", r2 == q.radius_squared, q.radius_squared, r2)
        )

    # stored lengths vs coordinate distances (compared on squares: exact)
    length_specs = (
        ("side-Gamma-B", dist_squared(g, b), q.side_gamma_b * q.side_gamma_b),
        ("side-B-Gamma2", dist_squared(b, g2), q.side_b_gamma2 * q.side_b_gamma2),
        ("side-Gamma2-Gamma1", dist_squared(g2, g1), _surd_square(q.side_gamma2_gamma1)),
        ("side-Gamma-Gamma1", dist_squared(g, g1), _surd_square(q.side_gamma_gamma1)),
        ("diagonal-B-Gamma1", dist_squared(b, g1), q.diag_b_gamma1 * q.diag_b_gamma1),
        ("diagonal-Gamma-Gamma2", dist_squared(g, g2), _surd_square(q.diag_gamma_gamma2)),
    )
    for name, coord_sq, stored_sq in length_specs:
        checks.append(_check(name, coord_sq == stored_sq, coord_sq, stored_sq))

    for vertex, label in _TANGENT_NAMES:
        measured = interior_tangent_from_coords(q, vertex)
        stored = q.tangent(vertex)
        checks.append(_check(f"tangent-{label}", measured == stored, measured, stored))

    checks.append(
        _check("tangent-sum-B-Gamma1", q.tan_b + q.tan_gamma1 == 0, 0, q.tan_b + q.tan_gamma1)
    )
    checks.append(
        _check(
            "tangent-sum-Gamma-Gamma2",
            q.tan_gamma + q.tan_gamma2 == 0,
            0,
            q.tan_gamma + q.tan_gamma2,
        )
    )

    area_coords = shoelace(list(q.vertices()))
    a, beta, gamma = q.alpha, q.beta, q.gamma
    area_closed = a * beta / 2 + (beta * beta / 2) * (a / gamma) + a * (beta + gamma) / 2
    checks.append(_check("area-shoelace-vs-closed", area_coords == area_closed, area_closed, area_coords))
    checks.append(_check("area-helper-agrees", quad_area(q) == area_coords, area_coords, quad_area(q)))

    checks.append(
        _check("theta-tangent", q.tan_theta == a / (beta + gamma), a / (beta + gamma), q.tan_theta)
    )
    checks.append(
        _check(
            "shared-base-angle-identity",
            (gamma - beta) / a == a / (gamma + beta),
            a / (gamma + beta),
            (gamma - beta) / a,
        )
    )
    spread = angle_identity_check(q).max_spread_degrees
    checks.append(_check("angle-spread-below-1e-10-deg", spread < 1e-10, "< 1e-10", spread))

    # the apex coordinates encode the double angle: cos = beta/gamma, sin = alpha/gamma
    u = q.v_b - q.v_a
    v = q.v_gamma - q.v_a
    prod = gamma * beta  # |u| * |v| for this embedding
    checks.append(_check("double-angle-cos", u.dot(v) / prod == beta / gamma, beta / gamma, u.dot(v) / prod))
    checks.append(
        _check("double-angle-sin", abs(u.cross(v)) / prod == a / gamma, a / gamma, abs(u.cross(v)) / prod)
    )
    return checks


def _erratum_checks(errata: tuple[Erratum, ...]) -> list[Check]:
    return [
        Check(f"published-value:{er.ident}", CheckStatus.ERRATUM, er.printed, er.computed)
        for er in errata
    ]


def verify_construction(q: QuadConstruction) -> VerificationReport:
    """Full oracle pass over one construction."""
    errata = errata_for_triple(q.alpha, q.beta, q.gamma)
    checks = _construction_checks(q) + _erratum_checks(errata)
    subject = f"construction({q.alpha}, {q.beta}, {q.gamma})"
    return VerificationReport(subject, tuple(checks), errata)


def verify_member(member: FamilyMember) -> VerificationReport:
    """Full oracle pass over a family member: the generic construction
    checks plus the member closed forms, the Heron criterion, and the
    registered errata."""
    p = member.params
    a, b, g = (Fraction(v) for v in member.triple())
    q = construct_quad(a, b, g)
    checks = _construction_checks(q)

    gv, bv, g2v, g1v = q.vertices()
    member_lengths = (
        ("member-side-Gamma-B", dist_squared(gv, bv), Fraction(member.side_gamma_b) ** 2),
        ("member-side-B-Gamma2", dist_squared(bv, g2v), Fraction(member.side_b_gamma2) ** 2),
        (
            "member-side-Gamma2-Gamma1",
            dist_squared(g2v, g1v),
            Fraction(member.side_gamma2_gamma1) ** 2,
        ),
        ("member-side-Gamma-Gamma1", dist_squared(gv, g1v), member.side_gamma_gamma1**2),
        ("member-diagonal-B-Gamma1", dist_squared(bv, g1v), Fraction(member.diag_b_gamma1) ** 2),
        ("member-diagonal-Gamma-Gamma2", dist_squared(gv, g2v), member.diag_gamma_gamma2**2),
    )
    for name, coord_sq, closed_sq in member_lengths:
        checks.append(_check(name, coord_sq == closed_sq, coord_sq, closed_sq))

    member_tangents = (
        ("member-tangent-B", Vertex.B, member.tan_b),
        ("member-tangent-Gamma", Vertex.GAMMA, member.tan_gamma),
        ("member-tangent-Gamma1", Vertex.GAMMA1, member.tan_gamma1),
        ("member-tangent-Gamma2", Vertex.GAMMA2, member.tan_gamma2),
    )
    for name, vertex, closed in member_tangents:
        measured = interior_tangent_from_coords(q, vertex)
        checks.append(_check(name, measured == closed, measured, closed))

    area_coords = shoelace(list(q.vertices()))
    m, n, L, delta = p.m, p.n, p.L, p.delta
    mm_nn = m * m - n * n
    bracket = (
        Fraction(delta * delta * m * n)
        * (mm_nn + Fraction(mm_nn * mm_nn, m * m + n * n) + 2 * m * m)
    )
    reduced = Fraction(4 * delta * delta * m**5 * n, L * L)
    checks.append(_check("member-area-vs-shoelace", member.area == area_coords, area_coords, member.area))
    checks.append(_check("member-area-bracket-form", member.area == bracket, bracket, member.area))
    checks.append(_check("member-area-reduced-form", member.area == reduced, reduced, member.area))

    integral = (
        member.side_gamma_gamma1.denominator == 1
        and member.diag_gamma_gamma2.denominator == 1
        and member.area.denominator == 1
    )
    criterion = delta % L == 0
    checks.append(
        _check(
            "heron-criterion-matches-integrality",
            member.is_heron == criterion == integral,
            f"is_heron={member.is_heron}",
            f"delta%L==0: {criterion}, all integral: {integral}",
        )
    )

    theta = Fraction(n, m)
    checks.append(_check("member-theta-n-over-m", theta == a / (b + g), a / (b + g), theta))

    errata = errata_for_member(member)
    checks += _erratum_checks(errata)
    subject = f"member(delta={delta}, m={m}, n={n})"
    return VerificationReport(subject, tuple(checks), errata)
