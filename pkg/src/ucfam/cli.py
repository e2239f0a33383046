"""Command line surface: fm | colex | analyze | verify | search | gen.

Machine output is JSON (fraction-valued fields rendered as reduced "p/q"
strings); the verify table is cosmetic.  Exit codes: 0 pass, 1 check failure,
2 usage or parse error, 3 capacity.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import colex
from .compression import full_down
from .core import (
    Family,
    decode_set,
    family_from_text,
    family_to_text,
    is_simply_rooted,
    is_union_closed,
    set_text,
    stats,
)
from .enumeration import (
    EXHAUSTIVE_GROUND_LIMIT,
    EnumerationPlan,
    enumerate_simply_rooted,
    enumerate_union_closed,
    extremal_search,
)
from .errors import CapacityError, DomainError, ParseError
from .stability import bad_set_lower_bounds, classify_sets, deficiency, stability_bound
from .verify import (
    catalog,
    document_json,
    render_table,
    run_suite,
    suite_document,
)

EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

# Largest m whose extremal construction / colex segment is listed inline;
# bigger families go through --emit-family so JSON stays readable.
INLINE_FAMILY_LIMIT = 2048


def _frac(x: Fraction | int) -> str:
    """Reduced fraction string, "7" or "7/2"; the exact-arithmetic JSON form."""
    return str(Fraction(x))


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_fm(args: argparse.Namespace) -> int:
    m = args.m
    n = colex.min_ground(m)
    m0 = (1 << n) - m
    doc = {
        "m": m,
        "ground": n,
        "complement_count": m0,
        "min_total_size": colex.f_extremal(m),
        "construction": None,
    }
    fam: Family | None = None
    if m <= INLINE_FAMILY_LIMIT or args.emit_family:
        fam = colex.extremal_construction(m)
    if fam is not None and m <= INLINE_FAMILY_LIMIT:
        doc["construction"] = [set_text(s) for s in fam]
    else:
        doc["note"] = f"construction listed only for m <= {INLINE_FAMILY_LIMIT}; use --emit-family"
    if args.emit_family:
        assert fam is not None
        with open(args.emit_family, "w") as fh:
            fh.write(family_to_text(fam))
        doc["family_file"] = args.emit_family
    _print_json(doc)
    return EXIT_PASS


def cmd_colex(args: argparse.Namespace) -> int:
    m = args.m
    doc = {
        "m": m,
        "ground": colex.min_ground(m),
        "total_size": colex.colex_total_size(m),
        "segment_bound": _frac(colex.segment_bound(m)),
        "segment_bound_tight": colex.segment_bound_is_tight(m),
        "members": None,
    }
    if args.list or m <= INLINE_FAMILY_LIMIT:
        if m > (1 << 16):
            raise CapacityError(f"listing capped at m <= {1 << 16}")
        doc["members"] = [set_text(s) for s in colex.initial_segment(m)]
    _print_json(doc)
    return EXIT_PASS


def _analyze_document(fam: Family) -> dict:
    st = stats(fam)
    doc: dict = {
        "n": fam.n,
        "m": st.m,
        "union_closed": is_union_closed(fam),
        "simply_rooted": is_simply_rooted(fam),
        "total_size": st.total_size,
        "degrees": list(st.degrees),
        "max_rooted_count": st.max_rooted_count,
        "peak_rooted_fraction": _frac(st.p),
        "colex_total_size": colex.colex_total_size(st.m),
    }
    if not doc["simply_rooted"]:
        return doc
    doc["deficiency"] = deficiency(fam)
    down, trace = full_down(fam)
    doc["compression"] = {
        "directions": list(trace.directions),
        "moves_per_direction": [len(trace.moves.get(i, ())) for i in trace.directions],
        "result_members": len(down),
        "result_is_downset": True,
    }
    ana = classify_sets(fam)
    doc["bad_set"] = {
        "partition_s": list(decode_set(ana.partition.s_elements)),
        "partition_t": list(decode_set(ana.partition.t_elements)),
        "bad_count": ana.b,
        "good_count": len(ana.good),
        "b1": ana.b1,
        "b2": ana.b2,
        "b3": ana.b3,
        "y_count": len(ana.y),
    }
    checks = []
    for row in bad_set_lower_bounds(fam):
        checks.append(
            {
                "name": row.name,
                "lhs": _frac(row.lhs),
                "rhs": _frac(row.rhs),
                "slack": _frac(row.slack),
                "passed": row.passed,
            }
        )
    doc["inequalities"] = checks
    doc["stability"] = {}
    for variant in ("twelfth", "eighth"):
        bound, holds = stability_bound(fam, variant)
        doc["stability"][variant] = {"bound": _frac(bound), "holds": holds}
    return doc


def cmd_analyze(args: argparse.Namespace) -> int:
    if args.path == "-":
        text = sys.stdin.read()
    else:
        with open(args.path) as fh:
            text = fh.read()
    fam = family_from_text(text)
    doc = _analyze_document(fam)
    _print_json(doc)
    ok = all(row["passed"] for row in doc.get("inequalities", []))
    ok = ok and all(v["holds"] for v in doc.get("stability", {}).values())
    return EXIT_PASS if ok else EXIT_CHECK_FAILURE


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.mode == "random" and args.samples <= 0:
        parser.error("--mode random needs --samples > 0")
    plan = EnumerationPlan(
        n=args.n, mode=args.mode, sample_count=args.samples, seed=args.seed
    )
    descriptors = catalog(plan)
    selected = None
    if args.checks:
        wanted = [c.strip() for c in args.checks.split(",") if c.strip()]
        known = {d.id for d in descriptors}
        unknown = [c for c in wanted if c not in known]
        if unknown:
            parser.error(f"unknown check ids: {', '.join(unknown)}")
        descriptors = [d for d in descriptors if d.id in set(wanted)]
        selected = [d.id for d in descriptors]
    reports = run_suite(descriptors, parallelism=args.parallel)
    doc = suite_document(plan, reports, selected)
    if args.json:
        sys.stdout.write(document_json(doc))
    else:
        print(render_table(reports))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(document_json(doc))
    failed = [
        r for r in reports if not r.conjecture and r.status == "fail"
    ]
    return EXIT_CHECK_FAILURE if failed else EXIT_PASS


def cmd_search(args: argparse.Namespace) -> int:
    best, classes = extremal_search(args.n, args.m)
    doc = {
        "n": args.n,
        "m": args.m,
        "min_total_size": best,
        "minimizer_classes": len(classes),
        "minimizers": [family_to_text(f) for f in classes],
    }
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write("\n".join(family_to_text(f) for f in classes))
        doc["family_file"] = args.emit
    _print_json(doc)
    return EXIT_PASS


def cmd_gen(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.mode == "random" and args.samples <= 0:
        parser.error("--mode random needs --samples > 0")
    contains_empty = None
    if args.contains_empty is not None:
        contains_empty = args.contains_empty == "yes"
    plan = EnumerationPlan(
        n=args.n,
        mode=args.mode,
        sample_count=args.samples,
        seed=args.seed,
        size=args.size,
        contains_empty=contains_empty,
    )
    if args.mode == "random":
        print(f"effective seed: {plan.seed}", file=sys.stderr)
    stream = enumerate_simply_rooted(plan) if args.rooted else enumerate_union_closed(plan)
    first = True
    for fam in stream:
        if not first:
            print()
        sys.stdout.write(family_to_text(fam))
        first = False
    return EXIT_PASS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucfam",
        description="union-closed / simply rooted family toolbox",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fm = sub.add_parser("fm", help="least total size over union-closed families of m sets")
    p_fm.add_argument("m", type=int)
    p_fm.add_argument("--emit-family", metavar="PATH", help="write the extremal family file")

    p_colex = sub.add_parser("colex", help="initial colex segment I(m) and its size bound")
    p_colex.add_argument("m", type=int)
    p_colex.add_argument("--list", action="store_true", help="force member listing")

    p_an = sub.add_parser("analyze", help="full analysis of one family file ('-' for stdin)")
    p_an.add_argument("path")

    p_ver = sub.add_parser("verify", help="run the inequality check suite")
    p_ver.add_argument("--n", type=int, required=True)
    p_ver.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p_ver.add_argument("--samples", type=int, default=0)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--checks", help="comma-separated check ids (default: all)")
    p_ver.add_argument("--parallel", type=int, default=1)
    p_ver.add_argument("--out", metavar="PATH", help="write the JSON report here")
    p_ver.add_argument("--json", action="store_true", help="JSON to stdout instead of the table")

    p_se = sub.add_parser("search", help="exhaustive minimizers of total size at (n, m)")
    p_se.add_argument("--n", type=int, required=True)
    p_se.add_argument("--m", type=int, required=True)
    p_se.add_argument("--emit", metavar="PATH", help="write minimizers, blank-line separated")

    p_gen = sub.add_parser("gen", help="emit families from an enumeration plan")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p_gen.add_argument("--samples", type=int, default=0)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--size", type=int, help="keep only families with exactly this many members")
    p_gen.add_argument("--contains-empty", choices=("yes", "no"))
    p_gen.add_argument("--rooted", action="store_true", help="simply rooted complements instead")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "fm":
            if args.m < 1:
                parser.error("m must be >= 1")
            return cmd_fm(args)
        if args.command == "colex":
            if args.m < 1:
                parser.error("m must be >= 1")
            return cmd_colex(args)
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "verify":
            return cmd_verify(args, parser)
        if args.command == "search":
            # bad flag values are usage errors, not capacity failures
            if not 0 <= args.n <= EXHAUSTIVE_GROUND_LIMIT:
                parser.error(f"search is exhaustive; needs 0 <= --n <= {EXHAUSTIVE_GROUND_LIMIT}")
            return cmd_search(args)
        if args.command == "gen":
            return cmd_gen(args, parser)
        raise AssertionError(args.command)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
