"""Command-line front end.

Subcommands: color, verify, bounds, exact, prime, clique, report.
Exit codes: 0 success/pass, 1 genuine coloring violation, 2 usage error,
3 prime-interval theorem falsification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import coloring as col
from .bounds import bounds_report
from .desk import bounds_summary, run_desk_matrix
from .errors import KneserChromaError, NoPrimeInInterval
from .export import export_coloring, load_coloring_csv
from .kneser import JOHNSON_POWER, KNESER, KNESER_SQUARE, GraphSpec
from .primes import find_prime_in_interval
from .verifier import (
    INJECTIVE,
    JOHNSON_M_PROPER,
    SQUARE_PROPER,
    exact_chromatic,
    recheck_violation,
    verify_coloring,
    verify_table,
)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_THEOREM_FALSIFIED = 3

_CONSTRUCTIONS = {
    "full-field": col.FULL_FIELD,
    "field-minus-zero": col.FIELD_MINUS_ZERO,
    "field-minus-subfield": col.FIELD_MINUS_SUBFIELD,
    "field-minus-subfield-plus-zero": col.FIELD_MINUS_SUBFIELD_PLUS_ZERO,
    "prime-prefix": col.PRIME_PREFIX,
}

_PROPERTIES = {
    "square": SQUARE_PROPER,
    "injective": INJECTIVE,
    "johnson": JOHNSON_M_PROPER,
}


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("KNESER_CHROMA_WORKERS", "1")))
    except ValueError:
        return 1


def _emit(doc, path: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ground_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--construction", choices=sorted(_CONSTRUCTIONS), required=True)
    p.add_argument("--subfield-degree", type=int, default=0, help="t' for subfield constructions")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kneser-chroma",
        description="Algebraic colorings of Kneser graph squares with exhaustive verification",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("color", help="build a ground set, color all vertices, export the table")
    _ground_args(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", default=None)

    p = sub.add_parser("verify", help="exhaustively certify a coloring property")
    _ground_args(p)
    p.add_argument("--property", choices=sorted(_PROPERTIES), required=True)
    p.add_argument("--m", type=int, default=0, help="Johnson power (property=johnson)")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--from-csv", default=None, help="re-verify a previously exported CSV table")
    p.add_argument("--output", default=None)

    p = sub.add_parser("bounds", help="evaluate every applicable published bound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--output", default=None)

    p = sub.add_parser("exact", help="exact chromatic number of a tiny instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", choices=["kneser", "square", "johnson"], default="square")
    p.add_argument("--m", type=int, default=0)

    p = sub.add_parser("prime", help="smallest prime in the prime-gap interval starting at n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["bertrand98", "ln2"], default="bertrand98")

    p = sub.add_parser("clique", help="clique witness of size C(k+2r,r) in K^2(2k+r,k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("report", help="run the desk-scale instance matrix and bounds table")
    p.add_argument("--all-desk-instances", action="store_true")
    p.add_argument("--skip-slow", action="store_true")
    return ap


def _build_ground(args) -> col.GroundSet:
    return col.build_ground_set(
        args.k, args.r, _CONSTRUCTIONS[args.construction], args.subfield_degree
    )


def _cmd_color(args) -> int:
    X = _build_ground(args)
    rows, distinct = col.color_all(X, args.k, args.r)
    export_coloring(X, args.k, args.r, rows, distinct, args.format, args.output)
    return EXIT_PASS


def _cmd_verify(args) -> int:
    prop = _PROPERTIES[args.property]
    X = _build_ground(args)
    n = 2 * args.k + args.r
    if prop == SQUARE_PROPER:
        spec = GraphSpec(n=n, k=args.k, variant=KNESER_SQUARE)
    elif prop == INJECTIVE:
        spec = GraphSpec(n=n, k=args.k, variant=KNESER)
    else:
        if args.m < 1:
            raise KneserChromaError("property=johnson requires --m >= 1")
        spec = GraphSpec(n=n, k=args.k, variant=JOHNSON_POWER, m=args.m)

    if args.from_csv:
        masks, colors = load_coloring_csv(args.from_csv)
        passed, hit, distinct, pairs = verify_table(spec, masks, colors, prop, args.workers)
        _emit(
            {
                "spec": spec.to_json(),
                "source": args.from_csv,
                "property": prop,
                "passed": passed,
                "violation": None if hit is None else {"index_a": hit[0], "index_b": hit[1]},
                "distinct_colors": distinct,
                "pairs_checked": pairs,
            },
            args.output,
        )
        return EXIT_PASS if passed else EXIT_VIOLATION

    report = verify_coloring(spec, X, args.r, prop, args.workers)
    _emit(report.to_json(), args.output)
    if report.passed:
        return EXIT_PASS
    if not recheck_violation(report):
        raise KneserChromaError("recorded violation failed independent recheck")
    return EXIT_VIOLATION


def _cmd_exact(args) -> int:
    variant = {"kneser": KNESER, "square": KNESER_SQUARE, "johnson": JOHNSON_POWER}[args.variant]
    spec = GraphSpec(n=args.n, k=args.k, variant=variant, m=args.m)
    print(exact_chromatic(spec))
    return EXIT_PASS


def _cmd_report(args) -> int:
    rows = run_desk_matrix(skip_slow=args.skip_slow)
    width = max(len(r.name) for r in rows)
    all_ok = True
    for r in rows:
        status = "PASS" if r.ok else "FAIL"
        all_ok &= r.ok
        print(f"{r.name:<{width}}  {status}  [{r.elapsed:6.2f}s]  {r.detail}")
    print()
    print(json.dumps({"bounds": bounds_summary()}, sort_keys=True, indent=2))
    return EXIT_PASS if all_ok else EXIT_VIOLATION


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "color":
            return _cmd_color(args)
        if args.cmd == "verify":
            return _cmd_verify(args)
        if args.cmd == "bounds":
            _emit(bounds_report(args.k, args.r).to_json(), args.output)
            return EXIT_PASS
        if args.cmd == "exact":
            return _cmd_exact(args)
        if args.cmd == "prime":
            print(find_prime_in_interval(args.n, args.mode))
            return EXIT_PASS
        if args.cmd == "clique":
            witness = col.clique_witness(args.k, args.r)
            print(json.dumps({"size": len(witness), "members": witness}))
            return EXIT_PASS
        if args.cmd == "report":
            return _cmd_report(args)
        raise AssertionError(args.cmd)
    except NoPrimeInInterval as exc:
        print(f"THEOREM FALSIFIED: {exc}", file=sys.stderr)
        return EXIT_THEOREM_FALSIFIED
    except (KneserChromaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
