"""Run the whole check suite across ground sizes and save the JSON reports.

Exhaustive for n <= 4, seeded random sampling beyond.  Writes one report per
ground size to --outdir and prints the human table as it goes.  Exit code 1
if any non-conjecture check fails anywhere.

    python scripts/full_verify.py --outdir reports --samples 100000 --seed 7
"""
from __future__ import annotations

import argparse
import pathlib
import sys

from ucfam.enumeration import EXHAUSTIVE_GROUND_LIMIT, EnumerationPlan
from ucfam.verify import catalog, document_json, render_table, run_suite, suite_document


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--samples", type=int, default=100_000, help="per random ground size")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--parallel", type=int, default=1)
    ap.add_argument("--outdir", type=pathlib.Path, default=pathlib.Path("reports"))
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    failed = False
    for n in range(args.max_n + 1):
        if n <= EXHAUSTIVE_GROUND_LIMIT:
            plan = EnumerationPlan(n=n, mode="exhaustive")
        else:
            plan = EnumerationPlan(
                n=n, mode="random", sample_count=args.samples, seed=args.seed
            )
        reports = run_suite(catalog(plan), parallelism=args.parallel)
        path = args.outdir / f"verify-n{n}-{plan.mode}.json"
        path.write_text(document_json(suite_document(plan, reports, None)))
        print(f"== n = {n} ({plan.mode}) -> {path}")
        print(render_table(reports))
        failed |= any(r.status == "fail" and not r.conjecture for r in reports)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
