"""Command line interface.

Subcommands
-----------
solve        classify and enumerate solutions of a sin x + b cos x = c
construct    build the cyclic quadrilateral for a right triple (a, b, c)
family       enumerate the parametric family of constructions
heron-table  the integer-sided (Heron) members, as JSON or CSV
verify       run the independent oracle checks on a triple/params/file
svg          draw a construction as a standalone SVG document

Output is a deterministic JSON envelope {command, inputs, result, errata,
version} (CSV and SVG modes emit their format directly). Exact values are
rendered as "p/q" strings, irrational lengths as {coef, radicand} surds,
and approximations are rounded to 10 significant digits.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from fractions import Fraction

from .exactnum import DomainError, LegForm, Surd, classify_triple, exact_sqrt
from .family import (
    FamilyMember,
    enumerate_family,
    family_member,
    generating_pairs,
    heron_member,
    theta_of_member,
)
from .geometry import Point2, QuadConstruction, Vertex, construct_quad
from .svgfig import render_svg
from .trigsolve import (
    EquationCoeffs,
    SolutionKind,
    classify,
    enumerate_solutions,
    half_angle_quadratic,
    residual,
)
from .verify import (
    Check,
    CheckStatus,
    VerificationReport,
    errata_for_member,
    errata_for_triple,
    verify_construction,
    verify_member,
)

__all__ = ["ParseError", "main"]

_VERSION = "0.1.0"


class ParseError(ValueError):
    """Malformed command-line or input-file values (exit code 2)."""


# ---------------------------------------------------------------------------
# parsing helpers

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _parse_number(text: str) -> Fraction | float:
    """Integers and p/q stay exact; decimal literals become floats."""
    if _RATIONAL_RE.match(text):
        return Fraction(text)
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"not a number: {text!r}") from None


def _parse_rational(text: str) -> Fraction:
    """Exact rational from an integer, p/q, or decimal literal."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"not an integer: {text!r}") from None


_parse_number.__name__ = "number"
_parse_rational.__name__ = "rational"
_parse_int.__name__ = "integer"


def _parse_k_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ParseError(f"k range must look like MIN..MAX, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise ParseError(f"k range bounds must be integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# formatting helpers


def _round10(x: float) -> float:
    """Round to 10 significant digits so emitted floats are stable."""
    return float(f"{x:.10g}")


def _num_payload(value: Fraction | float) -> str | float:
    return str(value) if isinstance(value, Fraction) else _round10(float(value))


def _vertex_payload(p: Point2) -> dict:
    return {
        "x": str(p.x),
        "y": str(p.y),
        "approx": [_round10(float(p.x)), _round10(float(p.y))],
    }


def _rational_length_payload(value: Fraction) -> dict:
    return {"exact": str(value), "approx": _round10(float(value))}


def _surd_length_payload(value: Surd) -> dict:
    return {
        "exact": {"coef": str(value.coefficient), "radicand": value.radicand},
        "approx": _round10(float(value)),
    }


def _theta_payload(tan: Fraction, degrees: float) -> dict:
    return {
        "tan": str(tan),
        "degrees": _round10(degrees),
        "degrees_display": f"{degrees:.5f}",
    }


_TRAVERSAL = (Vertex.GAMMA, Vertex.B, Vertex.GAMMA2, Vertex.GAMMA1)


def _interior_angle_degrees(q: QuadConstruction, which: Vertex) -> float:
    i = _TRAVERSAL.index(which)
    here = q.vertex(which)
    u = q.vertex(_TRAVERSAL[i - 1]) - here
    v = q.vertex(_TRAVERSAL[(i + 1) % 4]) - here
    return math.degrees(math.atan2(abs(float(u.cross(v))), float(u.dot(v))))


def _envelope(command: str, inputs: dict, result: object, errata) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "errata": [er.to_payload() for er in errata],
        "version": _VERSION,
    }


def _emit_text(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(envelope: dict, out_path: str | None) -> None:
    _emit_text(json.dumps(envelope, indent=2, ensure_ascii=False) + "\n", out_path)


# ---------------------------------------------------------------------------
# subcommand: solve


def _cmd_solve(args: argparse.Namespace) -> int:
    coeffs = EquationCoeffs(args.alpha, args.beta, args.gamma)
    k_min, k_max = _parse_k_range(args.k)
    solutions = classify(coeffs, float_zero_tol=args.zero_tol)
    quad = half_angle_quadratic(coeffs)

    families = []
    for fam in solutions.families:
        tan_half: object
        if fam.tan_half is None:
            tan_half = None
        elif isinstance(fam.tan_half, Fraction):
            tan_half = str(fam.tan_half)
        else:
            tan_half = _round10(fam.tan_half)
        families.append(
            {
                "tag": fam.tag.value,
                "exact": fam.exact,
                "tan_half": tan_half,
                "base_radians": _round10(fam.base),
                "base_degrees": _round10(math.degrees(fam.base)),
            }
        )

    if solutions.kind is SolutionKind.ALL_REALS:
        enumerated = None
    else:
        values = enumerate_solutions(solutions, k_min, k_max)
        enumerated = {
            "k_range": [k_min, k_max],
            "values": [_round10(x) for x in values],
            "max_abs_residual": (
                _round10(max(abs(residual(coeffs, x)) for x in values)) if values else None
            ),
        }

    result = {
        "arithmetic": "exact" if coeffs.is_exact else "float",
        "half_angle_quadratic": {
            "c2": _num_payload(quad.c2),
            "c1": _num_payload(quad.c1),
            "c0": _num_payload(quad.c0),
            "discriminant": _num_payload(quad.discriminant),
        },
        "kind": solutions.kind.value,
        "families": families,
        "solutions": enumerated,
    }
    inputs = {
        "alpha": _num_payload(coeffs.alpha),
        "beta": _num_payload(coeffs.beta),
        "gamma": _num_payload(coeffs.gamma),
        "k": args.k,
        "zero_tol": args.zero_tol,
    }
    _emit_json(_envelope("solve", inputs, result, ()), args.out)
    return 0


# ---------------------------------------------------------------------------
# subcommand: construct (and svg)


def _triple_payload(alpha: Fraction, beta: Fraction, gamma: Fraction) -> dict | None:
    if not all(v.denominator == 1 for v in (alpha, beta, gamma)):
        return None
    try:
        trip = classify_triple(int(alpha), int(beta), int(gamma))
    except DomainError:
        return None
    return {
        "delta": trip.delta,
        "m": trip.m,
        "n": trip.n,
        "leg_form": trip.leg_form.value,
    }


def _construct_result_payload(q: QuadConstruction) -> dict:
    area = (
        q.alpha * q.beta / 2
        + (q.beta * q.beta / 2) * (q.alpha / q.gamma)
        + q.alpha * (q.beta + q.gamma) / 2
    )
    radius = math.sqrt(float(q.radius_squared))
    return {
        "triple": _triple_payload(q.alpha, q.beta, q.gamma),
        "vertices": {
            "Gamma": _vertex_payload(q.v_gamma),
            "B": _vertex_payload(q.v_b),
            "Gamma2": _vertex_payload(q.v_gamma2),
            "Gamma1": _vertex_payload(q.v_gamma1),
            "A": _vertex_payload(q.v_a),
        },
        "sides": {
            "Gamma-B": _rational_length_payload(q.side_gamma_b),
            "B-Gamma2": _rational_length_payload(q.side_b_gamma2),
            "Gamma2-Gamma1": _surd_length_payload(q.side_gamma2_gamma1),
            "Gamma-Gamma1": _surd_length_payload(q.side_gamma_gamma1),
        },
        "diagonals": {
            "B-Gamma1": _rational_length_payload(q.diag_b_gamma1),
            "Gamma-Gamma2": _surd_length_payload(q.diag_gamma_gamma2),
        },
        "tangents": {
            "B": str(q.tan_b),
            "Gamma": str(q.tan_gamma),
            "Gamma1": str(q.tan_gamma1),
            "Gamma2": str(q.tan_gamma2),
        },
        "angles_degrees": {
            "B": _round10(_interior_angle_degrees(q, Vertex.B)),
            "Gamma": _round10(_interior_angle_degrees(q, Vertex.GAMMA)),
            "Gamma1": _round10(_interior_angle_degrees(q, Vertex.GAMMA1)),
            "Gamma2": _round10(_interior_angle_degrees(q, Vertex.GAMMA2)),
        },
        "theta": _theta_payload(q.tan_theta, q.theta_degrees),
        "circumcircle": {
            "center": {"x": str(q.circumcenter.x), "y": str(q.circumcenter.y)},
            "radius_squared": str(q.radius_squared),
            "radius_approx": _round10(radius),
        },
        "area": _rational_length_payload(area),
    }


def _cmd_construct(args: argparse.Namespace) -> int:
    q = construct_quad(args.alpha, args.beta, args.gamma)
    result = _construct_result_payload(q)
    if args.svg is not None:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(q))
        result["svg_path"] = args.svg
    inputs = {
        "alpha": str(args.alpha),
        "beta": str(args.beta),
        "gamma": str(args.gamma),
    }
    errata = errata_for_triple(q.alpha, q.beta, q.gamma)
    _emit_json(_envelope("construct", inputs, result, errata), args.out)
    return 0


def _cmd_svg(args: argparse.Namespace) -> int:
    q = construct_quad(args.alpha, args.beta, args.gamma)
    _emit_text(render_svg(q), args.out)
    return 0


# ---------------------------------------------------------------------------
# subcommand: family


def _member_payload(member: FamilyMember) -> dict:
    p = member.params
    theta = theta_of_member(member)
    errata = [er.ident for er in errata_for_member(member)]
    return {
        "params": {
            "t1": p.t1,
            "t2": p.t2,
            "t_form": p.t_form.value if p.t_form is not None else None,
            "delta": p.delta,
            "m": p.m,
            "n": p.n,
            "L": p.L,
            "k": p.k,
        },
        "triple": list(member.triple()),
        "sides": {
            "Gamma-B": str(member.side_gamma_b),
            "B-Gamma2": str(member.side_b_gamma2),
            "Gamma2-Gamma1": str(member.side_gamma2_gamma1),
            "Gamma-Gamma1": str(member.side_gamma_gamma1),
        },
        "diagonals": {
            "B-Gamma1": str(member.diag_b_gamma1),
            "Gamma-Gamma2": str(member.diag_gamma_gamma2),
        },
        "tangents": {
            "B": str(member.tan_b),
            "Gamma": str(member.tan_gamma),
            "Gamma1": str(member.tan_gamma1),
            "Gamma2": str(member.tan_gamma2),
        },
        "area": str(member.area),
        "is_heron": member.is_heron,
        "theta": _theta_payload(theta.tan, theta.degrees),
        "errata": errata,
    }


def _dedupe_errata(errata_lists) -> list:
    seen = {}
    for errata in errata_lists:
        for er in errata:
            seen.setdefault((er.ident, er.printed, er.computed), er)
    return list(seen.values())


_LEG_FORM_BY_FLAG = {
    "even-first": LegForm.EVEN_LEG_FIRST,
    "odd-first": LegForm.ODD_LEG_FIRST,
}


def _cmd_family(args: argparse.Namespace) -> int:
    members = list(
        enumerate_family(
            args.t_max,
            args.delta_max,
            heron_only=args.heron_only,
            leg_form=_LEG_FORM_BY_FLAG[args.leg_form],
        )
    )
    result = {
        "count": len(members),
        "members": [_member_payload(m) for m in members],
    }
    inputs = {
        "t_max": args.t_max,
        "delta_max": args.delta_max,
        "heron_only": args.heron_only,
        "leg_form": args.leg_form,
    }
    errata = _dedupe_errata(errata_for_member(m) for m in members)
    _emit_json(_envelope("family", inputs, result, errata), args.out)
    return 0


# ---------------------------------------------------------------------------
# subcommand: heron-table

_CSV_COLUMNS = (
    "t1",
    "t2",
    "m",
    "n",
    "delta",
    "B_Gamma",
    "Gamma_Gamma1",
    "Gamma1_Gamma2",
    "Gamma2_B",
    "B_Gamma1",
    "Gamma_Gamma2",
    "Area",
)


def _heron_row(t1: int, t2: int, member: FamilyMember) -> dict:
    p = member.params
    return {
        "t1": t1,
        "t2": t2,
        "m": p.m,
        "n": p.n,
        "delta": p.delta,
        "B_Gamma": str(member.side_gamma_b),
        "Gamma_Gamma1": str(member.side_gamma_gamma1),
        "Gamma1_Gamma2": str(member.side_gamma2_gamma1),
        "Gamma2_B": str(member.side_b_gamma2),
        "B_Gamma1": str(member.diag_b_gamma1),
        "Gamma_Gamma2": str(member.diag_gamma_gamma2),
        "Area": str(member.area),
    }


def _cmd_heron_table(args: argparse.Namespace) -> int:
    rows = []
    members = []
    failures = 0
    for t1, t2, _form, m, n, L in generating_pairs(args.t_max):
        for j in range(1, args.delta_multiples + 1):
            member = heron_member(m, n, L, j)
            report = verify_member(member)
            if report.has_failures:
                failures += 1
                print(
                    f"heron-quad: verification failed for (m={m}, n={n}, delta={j * L})",
                    file=sys.stderr,
                )
            row = _heron_row(t1, t2, member)
            row["verified"] = not report.has_failures
            row["errata"] = [er.ident for er in report.errata]
            rows.append(row)
            members.append(member)

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for row in rows:
            writer.writerow([row[col] for col in _CSV_COLUMNS])
        _emit_text(buf.getvalue(), args.out)
    else:
        result = {"count": len(rows), "rows": rows}
        inputs = {
            "t_max": args.t_max,
            "delta_multiples": args.delta_multiples,
            "format": args.format,
        }
        errata = _dedupe_errata(errata_for_member(m) for m in members)
        _emit_json(_envelope("heron-table", inputs, result, errata), args.out)
    if failures:
        print(f"heron-quad: {failures} row(s) failed verification", file=sys.stderr)
        return 4
    return 0


# ---------------------------------------------------------------------------
# subcommand: verify


def _verify_triple(a: int, b: int, c: int) -> VerificationReport:
    trip = classify_triple(a, b, c)
    if trip.leg_form is LegForm.EVEN_LEG_FIRST and exact_sqrt(
        trip.m * trip.m + trip.n * trip.n
    ):
        return verify_member(family_member(trip.delta, trip.m, trip.n))
    return verify_construction(construct_quad(a, b, c))


def _verify_envelope_file(path: str, doc: dict) -> VerificationReport:
    inputs = doc.get("inputs", {})
    try:
        alpha = _parse_rational(str(inputs["alpha"]))
        beta = _parse_rational(str(inputs["beta"]))
        gamma = _parse_rational(str(inputs["gamma"]))
    except KeyError as missing:
        raise ParseError(f"construct envelope lacks input {missing}") from None
    q = construct_quad(alpha, beta, gamma)
    regenerated = _construct_result_payload(q)
    stored = {k: v for k, v in doc.get("result", {}).items() if k != "svg_path"}
    consistent = stored == regenerated
    consistency = Check(
        "payload-consistency",
        CheckStatus.PASS if consistent else CheckStatus.FAIL,
        "stored result matches a fresh construction",
        "match" if consistent else "mismatch",
    )
    base = verify_construction(q)
    return VerificationReport(
        f"envelope({path})", (consistency,) + base.checks, base.errata
    )


def _verify_input_file(path: str) -> VerificationReport:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected a JSON object")

    if doc.get("command") == "construct":
        return _verify_envelope_file(path, doc)
    if {"alpha", "beta", "gamma"} <= doc.keys():
        q = construct_quad(
            _parse_rational(str(doc["alpha"])),
            _parse_rational(str(doc["beta"])),
            _parse_rational(str(doc["gamma"])),
        )
        return verify_construction(q)
    if {"delta", "m", "n"} <= doc.keys():
        member = family_member(
            _parse_int(str(doc["delta"])),
            _parse_int(str(doc["m"])),
            _parse_int(str(doc["n"])),
        )
        return verify_member(member)
    raise ParseError(
        f"{path}: unrecognized document (need a construct envelope, "
        "alpha/beta/gamma, or delta/m/n)"
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.triple is not None:
        a, b, c = args.triple
        report = _verify_triple(a, b, c)
        inputs = {"triple": [a, b, c]}
    elif args.params is not None:
        delta, m, n = args.params
        report = verify_member(family_member(delta, m, n))
        inputs = {"params": {"delta": delta, "m": m, "n": n}}
    else:
        report = _verify_input_file(args.input)
        inputs = {"input": args.input}

    payload = report.to_payload()
    result = {
        "subject": payload["subject"],
        "verdict": "fail" if report.has_failures else "pass",
        "counts": payload["counts"],
        "checks": payload["checks"],
    }
    _emit_json(_envelope("verify", inputs, result, report.errata), args.out)
    if report.has_failures:
        failed = sum(1 for c in report.checks if c.status is CheckStatus.FAIL)
        print(f"heron-quad: verification failed: {failed} check(s)", file=sys.stderr)
        return 4
    return 0


# ---------------------------------------------------------------------------
# parser wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heron-quad",
        description=(
            "Exact solver for a sin x + b cos x = c and the cyclic-quadrilateral "
            "constructions it generates from Pythagorean triples."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {_VERSION}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="classify and enumerate equation solutions")
    sp.add_argument("alpha", type=_parse_number)
    sp.add_argument("beta", type=_parse_number)
    sp.add_argument("gamma", type=_parse_number)
    sp.add_argument("--k", default="0..0", help="period range MIN..MAX (default 0..0)")
    sp.add_argument(
        "--zero-tol",
        type=float,
        default=1e-12,
        help="relative zero tolerance for float coefficients (default 1e-12)",
    )
    sp.add_argument("--out", default=None, help="write output to this file")
    sp.set_defaults(func=_cmd_solve)

    cp = sub.add_parser("construct", help="build the quadrilateral for a right triple")
    cp.add_argument("alpha", type=_parse_rational)
    cp.add_argument("beta", type=_parse_rational)
    cp.add_argument("gamma", type=_parse_rational)
    cp.add_argument("--svg", default=None, help="also render an SVG to this file")
    cp.add_argument("--out", default=None, help="write output to this file")
    cp.set_defaults(func=_cmd_construct)

    fp = sub.add_parser("family", help="enumerate parametric family members")
    fp.add_argument("--t-max", type=_parse_int, required=True)
    fp.add_argument("--delta-max", type=_parse_int, required=True)
    fp.add_argument("--heron-only", action="store_true")
    fp.add_argument(
        "--leg-form",
        choices=sorted(_LEG_FORM_BY_FLAG),
        default="even-first",
        help="which leg of the triple is the even one (only even-first exists)",
    )
    fp.add_argument("--out", default=None, help="write output to this file")
    fp.set_defaults(func=_cmd_family)

    hp = sub.add_parser("heron-table", help="integer-sided members, JSON or CSV")
    hp.add_argument("--t-max", type=_parse_int, default=3)
    hp.add_argument(
        "--delta-multiples",
        type=_parse_int,
        default=1,
        help="emit rows for delta = j*L, j = 1..J (default 1)",
    )
    hp.add_argument("--format", choices=("json", "csv"), default="json")
    hp.add_argument("--out", default=None, help="write output to this file")
    hp.set_defaults(func=_cmd_heron_table)

    vp = sub.add_parser("verify", help="run the independent oracle checks")
    group = vp.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--triple", nargs=3, type=_parse_int, metavar=("A", "B", "C"), default=None
    )
    group.add_argument(
        "--params", nargs=3, type=_parse_int, metavar=("DELTA", "M", "N"), default=None
    )
    group.add_argument("--input", default=None, help="JSON document to verify")
    vp.add_argument("--out", default=None, help="write output to this file")
    vp.set_defaults(func=_cmd_verify)

    gp = sub.add_parser("svg", help="render a construction as SVG")
    gp.add_argument("alpha", type=_parse_rational)
    gp.add_argument("beta", type=_parse_rational)
    gp.add_argument("gamma", type=_parse_rational)
    gp.add_argument("--out", default=None, help="write the SVG to this file")
    gp.set_defaults(func=_cmd_svg)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"heron-quad: parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"heron-quad: domain error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
