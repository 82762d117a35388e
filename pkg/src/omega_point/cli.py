"""Command-line interface.

Exit codes: 0 found/true, 1 false/inconclusive, 2 usage error, 3 resource limit.
With ``--json`` every command prints exactly one JSON object per line with the
keys command, inputs, status, result, timings, resource.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from . import bench as bench_mod
from .certificate import CertificateInput, certify
from .cubic import DEGENERATE_FAMILY, Region, classify, discriminant_sign
from .diophantine import BOUNDED_BRANCHES, theorem2_evaluate
from .errors import OmegaPointError, ResourceLimit
from .limits import max_width as resolve_guard
from .search import RationalPoint, SearchLimits, search, verify_point, x_axis_points

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

_FRACTION = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")
_VALUE_FLAGS = {"-a", "-b", "-n", "--I", "--J", "--A", "--B", "--M", "--N", "--x", "--y"}


def _int_list(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None


def _fraction(text):
    if not _FRACTION.match(text):
        raise argparse.ArgumentTypeError(f"not an integer or p/q fraction: {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _point_payload(p: RationalPoint) -> dict:
    return {"x": _fmt(p.x), "y": _fmt(p.y), "witness": list(p.witness)}


def _conditions(region: Region):
    if region is Region.R0_degenerate:
        return []
    if region is Region.R2_touch_below:
        return [2, 3]
    return [region.condition]


# --- commands ---------------------------------------------------------------
# each returns (status, result, resource, exit code)


def cmd_classify(args, guard):
    region = classify(args.a, args.b)
    result = {
        "region": region.value,
        "conditions": _conditions(region),
        "sign_4a3_27b2": discriminant_sign(args.a, args.b),
        "sign_b": (args.b > 0) - (args.b < 0),
    }
    if region is Region.R0_degenerate:
        result["note"] = f"a = b = 0: every rational point is in {DEGENERATE_FAMILY}"
    return "true", result, {}, EXIT_OK


def cmd_certify(args, guard):
    inp = CertificateInput.of(args.A, args.B, args.M, args.N)
    report = certify(inp, guard)
    result = {
        "M": inp.M,
        "N": inp.N,
        "chi": report.chi,
        "omega": report.omega,
        "nonempty": report.nonempty,
        "direct_count": report.direct_count,
        "per_term_chi": report.per_term_chi,
        "per_term_omega": report.per_term_omega,
    }
    resource = {"max_window_width": report.width, "peak_bits": report.peak_bits}
    return ("true" if report.nonempty else "false"), result, resource, (EXIT_OK if report.nonempty else EXIT_NO)


def cmd_eval(args, guard):
    report = theorem2_evaluate(args.a, args.b, args.n, args.I, args.J, limit=guard)
    branches = []
    for r in report.per_branch:
        branches.append({
            "branch": r.branch,
            "omega_positive": None if r.omega is None else r.omega > 0,
            "omega": r.omega,
            "M": r.M,
            "N": r.N,
            "start": r.start,
            "count": r.count,
            "skipped": r.skipped,
        })
    result = {
        "region": report.region.value,
        "condition": report.condition_index,
        "satisfied": report.satisfied,
        "complete": report.complete,
        "lattice_solution": list(report.lattice_solution) if report.lattice_solution else None,
        "branches": branches,
    }
    if any(r.branch in BOUNDED_BRANCHES for r in report.per_branch):
        result["note"] = "bounded branches 4, 5, 6 take their length from the root floors; J does not apply to them"
    resource = {
        "max_window_width": max((r.width for r in report.per_branch), default=0),
        "peak_bits": max((r.peak_bits for r in report.per_branch), default=0),
    }
    if report.satisfied:
        return "true", result, resource, EXIT_OK
    if report.all_guarded:
        return "error", result, resource, EXIT_RESOURCE
    if not report.complete:
        return "inconclusive", result, resource, EXIT_NO
    return "false", result, resource, EXIT_NO


def cmd_search(args, guard):
    limits = SearchLimits(
        max_n=args.max_n,
        max_I=args.max_I,
        max_J=args.max_J,
        deadline=args.timeout_secs,
        window_guard=guard,
        threads=args.threads,
    )
    outcome = search(args.a, args.b, limits)
    result = {
        "point": _point_payload(outcome.point) if outcome.point else None,
        "condition": outcome.condition_index,
        "trace": {
            "evaluated": outcome.evaluated,
            "guarded": outcome.guarded,
            "entries": [
                [e.n, e.I, e.J, e.branch, e.outcome] for e in outcome.trace
            ],
        },
    }
    if outcome.family:
        result["family"] = outcome.family
        result["supplement"] = {"x_axis_points": []}
    else:
        result["supplement"] = {"x_axis_points": [_point_payload(p) for p in x_axis_points(args.a, args.b)]}
    if outcome.reason and outcome.status == "inconclusive":
        result["note"] = outcome.reason
    resource = {"max_window_width": outcome.max_width, "peak_bits": outcome.peak_bits}
    if outcome.point is not None:
        return "found", result, resource, EXIT_OK
    if outcome.trace and outcome.evaluated == 0:
        return "error", result, resource, EXIT_RESOURCE
    return "inconclusive", result, resource, EXIT_NO


def cmd_verify(args, guard):
    point = RationalPoint.from_fractions(args.x, args.y)
    ok = verify_point(args.a, args.b, point)
    return ("true" if ok else "false"), {"on_curve": ok, "x": _fmt(args.x), "y": _fmt(args.y)}, {}, (
        EXIT_OK if ok else EXIT_NO
    )


def cmd_bench(args, guard):
    rows = bench_mod.run(args.max_width, guard)
    resource = {
        "max_window_width": rows[-1]["width"] if rows else 0,
        "peak_bits": max((r["peak_bits"] for r in rows), default=0),
    }
    return "true", {"rows": rows}, resource, EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "certify": cmd_certify,
    "eval": cmd_eval,
    "search": cmd_search,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


# --- parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per line")

    guarded = argparse.ArgumentParser(add_help=False)
    guarded.add_argument("--max-width", dest="window_guard", type=int, default=None,
                         help="window guard N-M (overrides OMEGA_POINT_MAX_WIDTH; default 512)")

    curve = argparse.ArgumentParser(add_help=False)
    curve.add_argument("-a", type=int, required=True)
    curve.add_argument("-b", type=int, required=True)

    parser = argparse.ArgumentParser(prog="omega-point", description="Rational points on y^2 = x^3 + a x + b.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common, curve], help="region of (a, b)")

    p = sub.add_parser("certify", parents=[common, guarded], help="chi and omega of two integer lists")
    p.add_argument("--A", type=_int_list, required=True)
    p.add_argument("--B", type=_int_list, required=True)
    p.add_argument("--M", type=int)
    p.add_argument("--N", type=int)

    p = sub.add_parser("eval", parents=[common, guarded, curve], help="evaluate the criterion for one (n, I, J)")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--I", type=_positive, required=True)
    p.add_argument("--J", type=_positive, required=True)

    p = sub.add_parser("search", parents=[common, guarded, curve], help="search for a rational point")
    p.add_argument("--max-n", type=_positive, default=3)
    p.add_argument("--max-I", type=_positive, default=12)
    p.add_argument("--max-J", type=_positive, default=12)
    p.add_argument("--timeout-secs", type=float, default=None)
    p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("verify", parents=[common, curve], help="check a point on the curve")
    p.add_argument("--x", type=_fraction, required=True)
    p.add_argument("--y", type=_fraction, required=True)

    p = sub.add_parser("bench", parents=[common], help="timing and bit growth by window width")
    p.add_argument("--max-width", type=_positive, default=64)
    return parser


def _join_negative_values(argv):
    # argparse reads "--A -1,2" or "--x -1/2" as a flag; glue such values on with "="
    out = []
    it = iter(range(len(argv)))
    for i in it:
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1] not in _VALUE_FLAGS:
            nxt = argv[i + 1]
            if len(nxt) > 1 and (nxt[1].isdigit() or nxt[1] == ","):
                out.append(f"{tok}={nxt}")
                next(it)
                continue
        out.append(tok)
    return out


def _emit(record, as_json, out):
    if as_json:
        out.write(json.dumps(record, separators=(",", ":")) + "\n")
        return
    out.write(f"{record['command']}: {record['status']}\n")
    result = record["result"]
    for key, value in (result or {}).items():
        if key == "trace":
            value = {k: v for k, v in value.items() if k != "entries"}
        if key == "rows":
            cols = list(value[0]) if value else []
            out.write("  " + "  ".join(f"{c:>18}" for c in cols) + "\n")
            for row in value:
                out.write("  " + "  ".join(f"{row[c]!s:>18}" for c in cols) + "\n")
            continue
        out.write(f"  {key}: {value}\n")
    if record.get("resource"):
        out.write(f"  resource: {record['resource']}\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    inputs = {k: (_fmt(v) if isinstance(v, Fraction) else v)
              for k, v in vars(args).items() if k not in ("command", "json")}
    record = {"command": args.command, "inputs": inputs, "status": "error", "result": None,
              "timings": {}, "resource": {}}
    t0 = time.perf_counter()
    try:
        guard = resolve_guard(getattr(args, "window_guard", None))
        status, result, resource, code = COMMANDS[args.command](args, guard)
        record.update(status=status, result=result, resource=resource)
    except ResourceLimit as exc:
        record["result"] = {"error": str(exc), "kind": "ResourceLimit"}
        code = EXIT_RESOURCE
    except (OmegaPointError, ValueError) as exc:
        record["result"] = {"error": str(exc), "kind": type(exc).__name__}
        code = EXIT_USAGE
    record["timings"] = {"total_ms": round((time.perf_counter() - t0) * 1000.0, 3)}
    _emit(record, args.json, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
