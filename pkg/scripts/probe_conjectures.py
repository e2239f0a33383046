"""Map where the conjectured size bounds break.

The degree form ||F|| <= ||I(m)|| + max_i deg(i) survives everything we can
enumerate, but the stronger max-rooted-count form fails: the first witnesses
live at n = 4, and random sampling keeps finding violations at every larger
ground size we can reach.  This script prints the exhaustive n = 4 witness
list grouped by relabeling class, then estimates violation rates by seeded
sampling.

    python scripts/probe_conjectures.py --max-n 8 --samples 20000
"""
from __future__ import annotations

import argparse
import sys
from collections import defaultdict

from ucfam import (
    Family,
    canonicalize,
    colex_total_size,
    complement,
    enumerate_simply_rooted,
    family_to_text,
    indexed_rooted_sample,
    stats,
)
from ucfam.enumeration import EnumerationPlan


def rooted_peak(fam: Family) -> int:
    return stats(fam).max_rooted_count


def degree_peak(fam: Family) -> int:
    return max(stats(fam).degrees, default=0)


def exhaustive_witnesses(n: int) -> dict[int, list[Family]]:
    """Violations of the max-rooted form at ground size n, by canonical class."""
    classes: dict[int, list[Family]] = defaultdict(list)
    for fam in enumerate_simply_rooted(EnumerationPlan(n=n)):
        excess = fam.total_size() - colex_total_size(len(fam)) - rooted_peak(fam)
        if excess > 0:
            classes[canonicalize(fam).mask].append(fam)
    return classes


def sample_rates(n: int, samples: int, seed: int) -> tuple[int, int, int]:
    rooted_bad = degree_bad = 0
    plan = EnumerationPlan(n=n, mode="random", sample_count=samples, seed=seed)
    for index in range(samples):
        fam = indexed_rooted_sample(plan, index)
        base = fam.total_size() - colex_total_size(len(fam))
        if base > rooted_peak(fam):
            rooted_bad += 1
        if base > degree_peak(fam):
            degree_bad += 1
    return rooted_bad, degree_bad, samples


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--samples", type=int, default=20_000, help="per random ground size")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    for n in range(5):
        classes = exhaustive_witnesses(n)
        total = sum(len(v) for v in classes.values())
        print(f"n = {n}: {total} max-rooted violations, {len(classes)} classes")
        for mask, fams in sorted(classes.items()):
            fam = fams[0]
            m = len(fam)
            excess = fam.total_size() - colex_total_size(m) - rooted_peak(fam)
            print(
                f"  class of {len(fams)} labelings, m = {m}, "
                f"||F|| = {fam.total_size()}, ||I(m)|| = {colex_total_size(m)}, "
                f"peak rooted = {rooted_peak(fam)}, excess = {excess}"
            )
            print("    representative (complement is union-closed of size "
                  f"{len(complement(fam))}):")
            for line in family_to_text(fam).splitlines():
                print(f"      {line}")

    print()
    for n in range(5, args.max_n + 1):
        rooted_bad, degree_bad, total = sample_rates(n, args.samples, args.seed)
        print(
            f"n = {n}: {rooted_bad}/{total} max-rooted violations, "
            f"{degree_bad}/{total} degree-form violations (seed {args.seed})"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
