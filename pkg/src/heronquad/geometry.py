"""Exact construction of the cyclic quadrilateral over a right triple.

Given positive rationals with alpha^2 + beta^2 = gamma^2, the plane
embedding puts

    B      = (0, 0)
    A      = (gamma, 0)            (helper point on the base)
    Gamma  = (alpha^2/gamma, alpha*beta/gamma)   (apex, above the base)
    Gamma2 = (0, -alpha)           (reflected leg endpoint, below)
    Gamma1 = (beta + gamma, 0)     (base extension beyond A)

The quadrilateral is traversed Gamma -> B -> Gamma2 -> Gamma1. Every
vertex is rational, Gamma1-Gamma2 is a diameter of the circumcircle, and
all lengths are rationals or quadratic surds, so downstream oracles can
compare exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exactnum import DomainError, Surd, surd_scale, surd_sqrt

__all__ = [
    "AngleIdentity",
    "Point2",
    "QuadConstruction",
    "QuadConstructionFloat",
    "Vertex",
    "angle_identity_check",
    "construct_quad",
    "construct_quad_float",
    "dist_squared",
    "interior_tangent_from_coords",
    "quad_area",
]


@dataclass(frozen=True)
class Point2:
    """Exact point in the plane."""

    x: Fraction
    y: Fraction

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def dot(self, other: "Point2") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point2") -> Fraction:
        return self.x * other.y - self.y * other.x


def dist_squared(p: Point2, q: Point2) -> Fraction:
    d = p - q
    return d.dot(d)


class Vertex(Enum):
    GAMMA = "Gamma"
    B = "B"
    GAMMA2 = "Gamma2"
    GAMMA1 = "Gamma1"


@dataclass(frozen=True)
class QuadConstruction:
    """The embedded quadrilateral with its exact lengths and angle tangents.

    Sides follow the traversal (Gamma-B, B-Gamma2, Gamma2-Gamma1,
    Gamma1-Gamma); the diagonals are B-Gamma1 and Gamma-Gamma2. Interior
    angle tangents are the exact closed forms -a/b, a/(b-g), a/b, (b+g)/a
    at B's opposite pairs; coordinates reproduce them (see the verifier).
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    v_gamma: Point2
    v_b: Point2
    v_gamma2: Point2
    v_gamma1: Point2
    v_a: Point2
    side_gamma_b: Fraction
    side_b_gamma2: Fraction
    side_gamma2_gamma1: Surd
    side_gamma_gamma1: Surd
    diag_b_gamma1: Fraction
    diag_gamma_gamma2: Surd
    tan_b: Fraction
    tan_gamma: Fraction
    tan_gamma1: Fraction
    tan_gamma2: Fraction
    tan_theta: Fraction
    theta_degrees: float
    circumcenter: Point2
    radius_squared: Fraction

    def vertices(self) -> tuple[Point2, Point2, Point2, Point2]:
        """Traversal order Gamma, B, Gamma2, Gamma1."""
        return (self.v_gamma, self.v_b, self.v_gamma2, self.v_gamma1)

    def vertex(self, which: Vertex) -> Point2:
        return {
            Vertex.GAMMA: self.v_gamma,
            Vertex.B: self.v_b,
            Vertex.GAMMA2: self.v_gamma2,
            Vertex.GAMMA1: self.v_gamma1,
        }[which]

    def tangent(self, which: Vertex) -> Fraction:
        return {
            Vertex.GAMMA: self.tan_gamma,
            Vertex.B: self.tan_b,
            Vertex.GAMMA2: self.tan_gamma2,
            Vertex.GAMMA1: self.tan_gamma1,
        }[which]


def _as_rational(value: Fraction | int | str, name: str) -> Fraction:
    if isinstance(value, float):
        raise DomainError(
            f"{name} must be rational on the exact path; use construct_quad_float for floats"
        )
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise DomainError(f"{name} is not a rational value: {value!r}") from exc


def construct_quad(
    alpha: Fraction | int | str, beta: Fraction | int | str, gamma: Fraction | int | str
) -> QuadConstruction:
    """Build the quadrilateral for a positive rational right triple."""
    a = _as_rational(alpha, "alpha")
    b = _as_rational(beta, "beta")
    g = _as_rational(gamma, "gamma")
    for name, value in (("alpha", a), ("beta", b), ("gamma", g)):
        if value <= 0:
            raise DomainError(f"{name} must be positive, got {value}")
    if a * a + b * b != g * g:
        raise DomainError(
            f"alpha^2 + beta^2 != gamma^2: {a}^2 + {b}^2 = {a * a + b * b}, gamma^2 = {g * g}"
        )
    zero = Fraction(0)
    v_b = Point2(zero, zero)
    v_a = Point2(g, zero)
    v_gamma = Point2(a * a / g, a * b / g)
    v_gamma2 = Point2(zero, -a)
    v_gamma1 = Point2(b + g, zero)
    hyp_squared = a * a + (b + g) ** 2
    hyp = surd_sqrt(hyp_squared)
    return QuadConstruction(
        alpha=a,
        beta=b,
        gamma=g,
        v_gamma=v_gamma,
        v_b=v_b,
        v_gamma2=v_gamma2,
        v_gamma1=v_gamma1,
        v_a=v_a,
        side_gamma_b=a,
        side_b_gamma2=a,
        side_gamma2_gamma1=hyp,
        side_gamma_gamma1=surd_scale(hyp, b / g),
        diag_b_gamma1=b + g,
        diag_gamma_gamma2=surd_scale(hyp, a / g),
        tan_b=-a / b,
        tan_gamma=a / (b - g),
        tan_gamma1=a / b,
        tan_gamma2=(b + g) / a,
        tan_theta=a / (b + g),
        theta_degrees=math.degrees(math.atan2(float(a), float(b + g))),
        circumcenter=Point2((b + g) / 2, -a / 2),
        radius_squared=hyp_squared / 4,
    )


_ORDER = (Vertex.GAMMA, Vertex.B, Vertex.GAMMA2, Vertex.GAMMA1)


def interior_tangent_from_coords(q: QuadConstruction, which: Vertex) -> Fraction | None:
    """Tangent of the interior angle at a vertex, from coordinates alone.

    For edge vectors u, v at the vertex the interior angle lies in (0, pi),
    so tan = |u x v| / (u . v) is exact in rational arithmetic. ``None``
    signals a right angle (zero dot product, infinite tangent).
    """
    idx = _ORDER.index(which)
    here = q.vertex(_ORDER[idx])
    prev = q.vertex(_ORDER[idx - 1])
    nxt = q.vertex(_ORDER[(idx + 1) % 4])
    u = prev - here
    v = nxt - here
    dot = u.dot(v)
    if dot == 0:
        return None
    return abs(u.cross(v)) / dot


def quad_area(q: QuadConstruction) -> Fraction:
    """Exact area by the shoelace sum over the traversal order."""
    pts = q.vertices()
    twice = Fraction(0)
    for i in range(4):
        p, r = pts[i], pts[(i + 1) % 4]
        twice += p.x * r.y - r.x * p.y
    return abs(twice) / 2


@dataclass(frozen=True)
class AngleIdentity:
    """Three independent computations of the one base angle, in degrees."""

    phi_degrees: float
    omega_degrees: float
    theta_degrees: float
    max_spread_degrees: float


def angle_identity_check(q: QuadConstruction) -> AngleIdentity:
    """Measure phi (isosceles base angle at Gamma2, from float coordinates),
    omega (half the apex double angle, atan2(a, b)/2), and theta
    (atan2(a, b+g)); they agree up to float noise."""
    g2x, g2y = float(q.v_gamma2.x), float(q.v_gamma2.y)
    ux, uy = float(q.v_b.x) - g2x, float(q.v_b.y) - g2y
    vx, vy = float(q.v_gamma.x) - g2x, float(q.v_gamma.y) - g2y
    phi = math.degrees(math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy))
    omega = math.degrees(math.atan2(float(q.alpha), float(q.beta))) / 2.0
    theta = math.degrees(math.atan2(float(q.alpha), float(q.beta + q.gamma)))
    values = (phi, omega, theta)
    return AngleIdentity(phi, omega, theta, max(values) - min(values))


@dataclass(frozen=True)
class QuadConstructionFloat:
    """Float-only variant for approximate inputs; makes no exactness claims."""

    alpha: float
    beta: float
    gamma: float
    vertices: tuple[tuple[float, float], ...]
    sides: tuple[float, float, float, float]
    diagonals: tuple[float, float]
    tangents: tuple[float, float, float, float]
    theta_degrees: float


def construct_quad_float(
    alpha: float, beta: float, gamma: float, *, rel_tol: float = 1e-9
) -> QuadConstructionFloat:
    """Float path for arbitrary positive reals near a right triple.

    Accepts inputs with |alpha^2 + beta^2 - gamma^2| within ``rel_tol``
    (relative); everything is computed in floats.
    """
    a, b, g = float(alpha), float(beta), float(gamma)
    for name, value in (("alpha", a), ("beta", b), ("gamma", g)):
        if not value > 0:
            raise DomainError(f"{name} must be positive, got {value}")
    defect = abs(a * a + b * b - g * g)
    if defect > rel_tol * max(a * a + b * b, g * g):
        raise DomainError(
            f"alpha^2 + beta^2 = {a * a + b * b} is not within {rel_tol} (relative) of gamma^2 = {g * g}"
        )
    v_gamma = (a * a / g, a * b / g)
    v_b = (0.0, 0.0)
    v_gamma2 = (0.0, -a)
    v_gamma1 = (b + g, 0.0)
    hyp = math.hypot(a, b + g)
    return QuadConstructionFloat(
        alpha=a,
        beta=b,
        gamma=g,
        vertices=(v_gamma, v_b, v_gamma2, v_gamma1),
        sides=(a, a, hyp, b * hyp / g),
        diagonals=(b + g, a * hyp / g),
        tangents=(-a / b, a / (b - g), a / b, (b + g) / a),
        theta_degrees=math.degrees(math.atan2(a, b + g)),
    )
