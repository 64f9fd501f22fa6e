"""Command-line front end.

Subcommands: reduce (diagonal matrix reduction), classify (element structure),
comax (comaximal refinement), split (witness construction), analyze-ring
(finite quotient survey), verify (equivalence sweeps with optional report
directory).

Exit codes: 0 success, 1 user/input error, 2 internal verification failure,
3 theorem violation found by a sweep.  All JSON output is serialized with
sorted keys and carries a top-level "schema": 1, so identical invocations
produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, analysis, report, structure, sweeps
from .errors import (
    BezoutError,
    InternalCheckFailed,
    NoNontrivialIdempotent,
    NotRegular,
    TooLarge,
    TraceInvariantViolation,
)
from .instances import (
    QuotientRing,
    make_quotient,
    parse_element,
    parse_ring,
)
from .matrices import (
    matrix_from_json,
    diagonal_reduce,
    reduce_2x2_theorem21,
    verify_reduction,
)

SCHEMA = 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bezout",
        description="Exact diagonal reduction and element-structure analysis "
        "over Bezout rings.",
    )
    parser.add_argument("--version", action="version", version=f"bezout {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    style = common.add_mutually_exclusive_group()
    style.add_argument("--json", action="store_true", help="JSON output (default)")
    style.add_argument("--pretty", action="store_true", help="human-readable text output")
    common.add_argument("--out", help="write output to this file instead of stdout")

    ringed = argparse.ArgumentParser(add_help=False)
    ringed.add_argument(
        "--ring", default="Z",
        help="ring description: Z, Q[x], Z/<n>, F<p>[x], F<p>[x]/<coeffs> (default Z)",
    )
    ringed.add_argument(
        "--cap", type=int, default=None,
        help="enumeration cap for finite-quotient analysis",
    )

    p = sub.add_parser(
        "reduce", parents=[common],
        help="diagonally reduce a matrix read from a JSON file or stdin",
    )
    p.add_argument("matrix", help='path to {"ring": ..., "matrix": ...} JSON, or - for stdin')
    p.add_argument(
        "--method", choices=("general", "thm21"), default="general",
        help="general elimination engine, or the 2x2 lower-triangular procedure",
    )
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser(
        "classify", parents=[common, ringed],
        help="classify an element and survey its quotient ring",
    )
    p.add_argument("element", help="element literal, e.g. 6 or [1,0,1]")
    p.add_argument("--b", help="direction element for adequate/semipotent witnesses")
    p.add_argument("--c", help="second direction element for avoidable/Gelfand witnesses")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "comax", parents=[common, ringed],
        help="comaximal refinement into pairwise comaximal factors",
    )
    p.add_argument("element", help="element literal")
    p.set_defaults(func=cmd_comax)

    p = sub.add_parser(
        "split", parents=[common, ringed],
        help="construct a verified split witness",
    )
    p.add_argument(
        "--kind", required=True,
        choices=("adequate", "avoidable", "gelfand", "semipotent"),
    )
    p.add_argument("element", help="element a to split")
    p.add_argument("--b", required=True, help="direction element b")
    p.add_argument("--c", help="direction element c (avoidable/gelfand)")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser(
        "analyze-ring", parents=[common, ringed],
        help="brute-force survey of a finite quotient ring",
    )
    p.set_defaults(func=cmd_analyze_ring)

    p = sub.add_parser(
        "verify", parents=[common],
        help="run equivalence sweeps over a modulus range",
    )
    p.add_argument(
        "--theorems", default="all",
        help="comma-separated selectors from "
        + ",".join(sweeps.SELECTOR_NAMES)
        + ", or all",
    )
    p.add_argument("--range", dest="span", default="2..100", help="modulus range N..M")
    p.add_argument("--seed", type=int, default=0, help="64-bit seed for sampled inputs")
    p.add_argument(
        "--cap", type=int, default=None,
        help="cap for the quadratic quotient predicates",
    )
    p.add_argument(
        "--report-dir",
        help="directory for report.json, sweep.csv and PNG figures",
    )
    p.set_defaults(func=cmd_verify)

    return parser


def _emit(args, payload, pretty_renderer=None):
    if args.pretty:
        renderer = pretty_renderer or report.render_text
        text = renderer(payload)
    else:
        text = report.dump_json(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_matrix(source):
    if source == "-":
        raw = sys.stdin.read()
    else:
        with open(source) as fh:
            raw = fh.read()
    return matrix_from_json(json.loads(raw))


def cmd_reduce(args):
    A = _read_matrix(args.matrix)
    trace = None
    if args.method == "thm21":
        if A.rows != 2 or A.cols != 2 or not A.ring.is_zero(A.entry(0, 1)):
            from .errors import PreconditionFailed

            raise PreconditionFailed(
                "the 2x2 procedure needs a lower-triangular input [[a, 0], [b, c]]"
            )
        red, trace = reduce_2x2_theorem21(A.entry(0, 0), A.entry(1, 0), A.entry(1, 1))
    else:
        red = diagonal_reduce(A)
    ok, problems = verify_reduction(A, red)
    if not ok:
        raise InternalCheckFailed("; ".join(problems))
    payload = {
        "schema": SCHEMA,
        "ring": A.ring.describe(),
        "method": args.method,
        "input": A.to_json()["matrix"],
        "diagonal": [A.ring.element_to_json(d) for d in red.D.diagonal()],
        "trace": None if trace is None else trace.to_json(),
        "verified": True,
    }
    payload.update(red.to_json())
    _emit(args, payload)
    return 0


def _quotient_for(ring, a):
    """Quotient by the ideal of a: direct for domains, ideal collapse for
    quotient instances (gcd of the lift with the modulus)."""
    if isinstance(ring, QuotientRing):
        return make_quotient(ring.base, ring.modulus_key(a))
    return make_quotient(ring, a.payload)


def cmd_classify(args):
    ring = parse_ring(args.ring)
    a = parse_element(ring, args.element)
    payload = {
        "schema": SCHEMA,
        "ring": ring.describe(),
        "element": ring.element_to_json(a),
        "atom": structure.is_atom(a),
        "pseudo_irreducible": structure.is_pseudo_irreducible(a),
    }
    try:
        payload["inpseudo_irreducible"] = structure.is_inpseudo_irreducible(a)
    except NotRegular as exc:
        payload["inpseudo_irreducible"] = None
        payload["inpseudo_reason"] = str(exc)
    factors = structure.comaximal_refinement(a)
    payload["comaximal_factors"] = factors.to_json()
    witnesses = {}
    if len(factors.factors) >= 2:
        rest = factors.unit
        for f in factors.factors[1:]:
            rest = rest * f
        witnesses["comaximal_pair"] = [
            ring.element_to_json(factors.factors[0]),
            ring.element_to_json(rest),
        ]
    try:
        q = _quotient_for(ring, a)
        n = q.cardinality()
        cap = analysis.DEFAULT_ENUM_CAP if args.cap is None else args.cap
        if n is None or n > cap:
            payload["quotient_flags"] = "skipped: cap"
        else:
            flags_report = analysis.analyze_ring(q, cap=cap)
            payload["quotient_flags"] = flags_report.to_json()
            payload["quotient_indecomposable"] = flags_report.flags.get("is_indecomposable")
    except TooLarge:
        payload["quotient_flags"] = "skipped: cap"
    if args.b is not None:
        b = parse_element(ring, args.b)
        witnesses["adequate"] = _witness_json(
            ring, lambda: structure.adequate_split(a, b)
        )
        if ring.is_domain:
            witnesses["semipotent"] = _witness_json(
                ring, lambda: structure.semipotent_witness(a, b)
            )
        if args.c is not None:
            c = parse_element(ring, args.c)
            witnesses["avoidable"] = _witness_json(
                ring, lambda: structure.avoidable_decompose(a, b, c)
            )
            witnesses["gelfand"] = _witness_json(
                ring, lambda: structure.gelfand_decompose(a, b, c)
            )
    payload["witnesses"] = witnesses
    _emit(args, payload)
    return 0


def _witness_json(ring, build):
    """Witness construction for classify: analysis outcomes (including the
    documented no-witness cases) become data, never a nonzero exit."""
    try:
        out = build()
    except InternalCheckFailed:
        raise
    except NoNontrivialIdempotent as exc:
        return {"kind": "no_nontrivial_idempotent", "reason": str(exc)}
    except BezoutError as exc:
        return {"unavailable": f"{type(exc).__name__}: {exc}"}
    return out.to_json()


def cmd_comax(args):
    ring = parse_ring(args.ring)
    a = parse_element(ring, args.element)
    factors = structure.comaximal_refinement(a)
    payload = {"schema": SCHEMA, "ring": ring.describe(), "verified": True}
    payload.update(factors.to_json())
    _emit(args, payload)
    return 0


def cmd_split(args):
    ring = parse_ring(args.ring)
    a = parse_element(ring, args.element)
    b = parse_element(ring, args.b)
    kind = args.kind
    if kind in ("avoidable", "gelfand") and args.c is None:
        raise BezoutError(f"--kind {kind} needs --c")
    payload = {"schema": SCHEMA, "ring": ring.describe()}
    if kind == "adequate":
        out = structure.adequate_split(a, b)
    elif kind == "avoidable":
        out = structure.avoidable_decompose(a, b, parse_element(ring, args.c))
    elif kind == "gelfand":
        out = structure.gelfand_decompose(a, b, parse_element(ring, args.c))
    else:
        try:
            out = structure.semipotent_witness(a, b, cap=args.cap)
        except NoNontrivialIdempotent as exc:
            payload["witness"] = {
                "kind": "no_nontrivial_idempotent",
                "reason": str(exc),
            }
            _emit(args, payload)
            return 0
    payload["witness"] = out.to_json()
    if not isinstance(out, structure.InRadical):
        payload["verified"] = True
    _emit(args, payload)
    return 0


def cmd_analyze_ring(args):
    ring = parse_ring(args.ring)
    if not isinstance(ring, QuotientRing):
        raise BezoutError(
            f"analyze-ring needs a finite quotient, got {ring.describe()}"
        )
    survey = analysis.analyze_ring(ring, cap=args.cap)
    payload = {"schema": SCHEMA}
    payload.update(survey.to_json())
    _emit(args, payload)
    return 0


def _parse_span(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise BezoutError(f"range must look like N..M, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise BezoutError(f"range must be integral, got {text!r}")


def cmd_verify(args):
    lo, hi = _parse_span(args.span)
    if args.theorems.strip() == "all":
        selectors = list(sweeps.SELECTOR_NAMES)
    else:
        selectors = [s.strip() for s in args.theorems.split(",") if s.strip()]
        if not selectors:
            raise BezoutError("no selectors given")
    sweep_report, results = sweeps.run_verification(
        selectors, lo, hi, args.seed, quad_cap=args.cap
    )
    if args.report_dir:
        paths = report.write_report_dir(sweep_report, results, args.report_dir)
        print(f"wrote {len(paths)} files to {args.report_dir}", file=sys.stderr)
    _emit(args, sweep_report, pretty_renderer=report.render_verify_text)
    return 3 if sweep_report["total_violations"] else 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InternalCheckFailed, TraceInvariantViolation) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    except BezoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
