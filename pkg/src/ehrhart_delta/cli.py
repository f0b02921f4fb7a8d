"""Command-line front end.

Exit codes: 0 success, 1 an applicable inequality fails, 2 unreadable input,
3 degenerate input or enumeration cap reached, 4 internal cross-check failure.
"""

import argparse
import sys

from . import constructions, io
from .errors import (
    ConsistencyError,
    DegeneratePolytope,
    DimensionMismatch,
    EnumerationLimitExceeded,
    PolytopeFormatError,
)
from .report import ROUTES, analyze_delta, analyze_polytope

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_DEGENERATE, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _vec(xs):
    return "(" + ", ".join(str(x) for x in xs) + ")"


def _poly(xs):
    from .polynomial import IntPolynomial

    return str(IntPolynomial(xs))


def render_text(doc):
    """Human-readable rendering of a report dict, in the notation f, δ, s, l, δ̄, a, b."""
    lines = []
    inp = doc["input"]
    if inp.get("source") == "literal":
        lines.append(f"input: literal δ-vector, d = {inp['dimension']}")
    else:
        lines.append(
            f"input: {inp.get('source') or 'polytope'}  rank {inp['rank']}, dimension {inp['dimension']}"
            + ("  (normalised to its affine lattice)" if inp.get("normalized") else "")
        )
    prof = doc.get("profile")
    if prof:
        lines.append(f"f(0..d) = {prof['f']}")
        lines.append(f"δ = {_vec(prof['delta'])}    δ(t) = {_poly(prof['delta'])}")
        lines.append(f"s = {prof['s']}, l = {prof['l']}")
        lines.append(f"δ̄ = {_vec(prof['delta_bar'])}    δ̄(t) = {_poly(prof['delta_bar'])}")
    dec = doc.get("decomposition")
    if dec:
        for name in ("closed", "triangulation"):
            part = dec.get(name)
            if part:
                label = "closed form" if name == "closed" else "triangulation"
                lines.append(f"[{label}] a = {_vec(part['a'])}, b = {_vec(part['b'])}")
        if "routes_agree" in dec:
            lines.append("routes agree" if dec["routes_agree"] else "ROUTES DISAGREE")
        if "pyramid_delta" in dec:
            lines.append(f"δ_K (pyramid over ∂P) = {_vec(dec['pyramid_delta'])}")
        for problem in dec.get("problems", []):
            lines.append(f"  not a polytope δ-vector: {problem}")
    tri = doc.get("triangulation")
    if tri:
        lines.append(
            f"boundary triangulation: {tri['maximal_faces']} maximal faces on {tri['vertices']} points, "
            f"{'unimodular' if tri['unimodular'] else 'not unimodular'}, regularity {tri['regular']}"
        )
    refl = doc.get("reflexivity")
    if refl:
        lines.append(
            f"reflexive: {refl['is_reflexive']}; δ palindromic: {refl['delta_symmetric']}; "
            f"b = 0: {refl['b_is_zero']}; {refl['dilate']}P translate of reflexive: "
            f"{refl['codegree_dilate_is_translate_of_reflexive']}"
        )
    ineqs = doc.get("inequalities")
    if ineqs:
        lines.append("")
        lines.append(f"{'family':<22}{'holds':<8}{'gates':<7}detail")
        for r in ineqs:
            if r.get("vacuous"):
                detail = "vacuous (δ_d = 0)"
            elif not r["holds"]:
                detail = f"i = {r['first_violation']}: lhs {r['lhs']} vs rhs {r['rhs']}"
            else:
                detail = "equality throughout" if r["equality"] else ""
            gates = "yes" if r["applicable"] else "no"
            lines.append(f"{r['family']:<22}{str(r['holds']).lower():<8}{gates:<7}{detail}")
    return "\n".join(lines) + "\n"


def _emit(report, args, exit_code):
    doc = report.to_dict(timing=args.timing)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(io.dumps(doc))
    if args.json:
        sys.stdout.write(io.dumps(doc))
    else:
        sys.stdout.write(render_text(doc))
        if args.timing:
            sys.stdout.write(f"timing (ms): {report.timing_ms}\n")
    return exit_code


def cmd_ehrhart(args):
    P = io.load_polytope(args.file)
    report = analyze_polytope(P, stages=("profile",), source=args.file)
    return _emit(report, args, EXIT_OK)


def cmd_decompose(args):
    P = io.load_polytope(args.file)
    tri_doc = io.load_json(args.triangulation, "triangulation") if args.triangulation else None
    report = analyze_polytope(
        P, route=args.route, triangulation_doc=tri_doc, stages=("profile", "decomposition"), source=args.file
    )
    return _emit(report, args, EXIT_OK)


def _parse_delta(text):
    try:
        return [int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x != ""]
    except ValueError as exc:
        raise PolytopeFormatError(f"cannot parse δ-vector {text!r}: {exc}") from exc


def cmd_check(args):
    if args.delta is not None:
        if args.file or args.dim is None:
            raise PolytopeFormatError("--delta needs --dim and no polytope file")
        coeffs = _parse_delta(args.delta)
        try:
            report = analyze_delta(coeffs, args.dim)
        except ValueError as exc:
            raise PolytopeFormatError(str(exc)) from exc
    else:
        if not args.file:
            raise PolytopeFormatError("check needs a polytope file or --delta/--dim")
        P = io.load_polytope(args.file)
        tri_doc = io.load_json(args.triangulation, "triangulation") if args.triangulation else None
        report = analyze_polytope(P, route=args.route, triangulation_doc=tri_doc, source=args.file)
    return _emit(report, args, EXIT_VIOLATION if report.failures() else EXIT_OK)


def _construct(name, params):
    def polytope_arg(i):
        if len(params) <= i:
            raise PolytopeFormatError(f"{name} needs a polytope file argument")
        return io.load_polytope(params[i])

    def int_arg(i):
        try:
            return int(params[i])
        except (IndexError, ValueError) as exc:
            raise PolytopeFormatError(f"{name} needs an integer argument") from exc

    if name in constructions.NAMED:
        func, arg_names = constructions.NAMED[name]
        return func(*[int_arg(i) for i in range(len(arg_names))])
    if name == "dilate":
        return constructions.dilate(polytope_arg(0), int_arg(1))
    if name == "pyramid":
        return constructions.pyramid(polytope_arg(0))
    if name == "tensor":
        return constructions.henk_tagami_tensor(polytope_arg(0), polytope_arg(1))
    raise PolytopeFormatError(f"unknown construction {name!r}")


CONSTRUCTION_HELP = (
    "standard-simplex D | reflexive-simplex D | unit-cube D | example-cual | "
    "dilate FILE K | pyramid FILE | tensor FILE_P FILE_Q"
)


def cmd_construct(args):
    P = _construct(args.name, args.params)
    text = io.dumps(P.to_dict())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ehrhart-delta",
        description="Exact Ehrhart δ-vectors, the a/b decomposition of δ̄ and inequality audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, triangulation=True):
        p.add_argument("--json", action="store_true", help="print the JSON report instead of text")
        p.add_argument("-o", "--output", help="also write the JSON report to this file")
        p.add_argument("--timing", action="store_true", help="include stage timings (breaks byte-stability)")
        if triangulation:
            p.add_argument("--triangulation", metavar="FILE", help="use this boundary triangulation")
            p.add_argument("--route", choices=ROUTES, default="both")

    p = sub.add_parser("ehrhart", help="f, δ, s, l and δ̄ of a polytope")
    p.add_argument("file")
    common(p, triangulation=False)
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("decompose", help="a(t) and b(t) by closed form and/or triangulation")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", help="inequality audit and reflexivity report")
    p.add_argument("file", nargs="?")
    p.add_argument("--delta", help='literal δ-vector, e.g. "1,2,1,2,0,0"')
    p.add_argument("--dim", type=int, help="dimension d for --delta")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="write a named polytope as JSON", description=CONSTRUCTION_HELP)
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PolytopeFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DegeneratePolytope, DimensionMismatch, EnumerationLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ConsistencyError as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
