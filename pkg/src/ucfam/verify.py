"""Exact check catalog and suite runner.

Every structural statement the package implements is registered here as an
executable check over a concrete population: the simply rooted families on a
fixed ground set, either enumerated exhaustively (small n) or drawn from the
seeded index-addressable sampler.  There are exactly thirty catalog entries,
asserted at import time, plus three conjecture probes kept in a separate
section and excluded from pass/fail semantics.

All comparisons are exact: integer or Fraction arithmetic throughout, scaled
to clear denominators (products against 2^n, bounds in sixths, chain bounds
in thirds).  A violation record carries the replayable family text plus the
two offending numbers, so any red result can be reproduced from the report
alone.

Execution is sharded over fixed-size index blocks regardless of worker
count, and shard results merge in index order, so one worker and eight
produce byte-identical reports.  Notation used in statements below: m = |F|,
m0 = nonempty members of F, q = largest one-element rooted count, I(m) = the
colex initial segment, d() = the full downward sweep.
"""
from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Literal, Sequence

from . import bitops
from .colex import (
    colex_total_size,
    segment_bound_is_tight,
    segment_bound_sixths,
    total_size_range,
)
from .compression import CompressionTrace, _witness_from_traces, full_down, full_up
from .core import (
    Family,
    complement,
    family_to_text,
    is_downset,
    is_simply_rooted,
    is_union_closed,
)
from .enumeration import (
    EnumerationPlan,
    _union_closed_masks,
    indexed_rooted_sample,
)
from .errors import CapacityError, DomainError
from .stability import (
    BadSetAnalysis,
    classify_sets,
    deficiency,
    deficiency_tight_family,
    largest_downset,
    partition_search,
)

__all__ = [
    "CATALOG_IDS",
    "PROBE_IDS",
    "CheckDescriptor",
    "CheckReport",
    "ConstantChain",
    "Evidence",
    "Violation",
    "build_evidence",
    "catalog",
    "check_few_with_root",
    "derive_constants",
    "document_json",
    "excluded_fraction",
    "fixpoint_constants",
    "margin_from_root",
    "render_table",
    "run_suite",
    "suite_document",
    "threshold_coefficients",
]

SHARD_SIZE = 2048
VIOLATION_CAP = 100
COLEX_SWEEP_LIMIT = 1 << 13
THRESHOLD_R_LIMIT = 11
PAIR_REMARK_GROUND = 4
TIGHT_GRID_M = 16
TIGHT_GRID_K = 3


# ---------------------------------------------------------------------------
# constant chain


@dataclass(frozen=True)
class ConstantChain:
    """Inputs and outputs of the counterexample-constant derivation.

    split_factor scales the peak rooted fraction when the degree dichotomy
    branches; stability_constant is the c of the quadratic stability bound;
    alpha is the power-set fraction above which the union-closed conjecture
    is already settled, so a counterexample complement has m > (1-alpha) 2^n.
    c1 and c2 are filled by derive_constants: c1 bounds the peak rooted
    fraction of a counterexample from below, c2 the excess of m/2^n over 1/3.
    """

    split_factor: int = 3
    stability_constant: int = 12
    alpha: Fraction = Fraction(2, 3)
    c1: Fraction | None = None
    c2: Fraction | None = None

    def __post_init__(self) -> None:
        if self.split_factor <= 0:
            raise DomainError("split factor must be positive")
        if self.stability_constant not in (8, 12):
            raise DomainError("stability constant must be 8 or 12")
        if not Fraction(1, 2) <= self.alpha <= Fraction(2, 3):
            raise DomainError("alpha outside [1/2, 2/3]")


def threshold_coefficients(chain: ConstantChain) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (A, B, C) of the normalized threshold A p^2 + B p > C.

    A counterexample whose scaled peak rooted fraction is p forces the strict
    inequality; the defaults give (9, 36, 1).
    """
    mu = 1 - chain.alpha  # lower bound on m / 2^n
    t = chain.split_factor
    return Fraction(t * t), Fraction(chain.stability_constant, 1) / mu, Fraction(1)


def excluded_fraction(chain: ConstantChain, p: Fraction) -> bool:
    """True when A p^2 + B p <= C: no counterexample can sit at fraction p."""
    a, b, c = threshold_coefficients(chain)
    return a * p * p + b * p <= c


def margin_from_root(c1: Fraction) -> Fraction:
    """Excess c2 with m > (1/3 + c2) 2^n forced by a peak-fraction bound c1.

    Feeding ||I(m)|| > m(n/2 - 1 + c1) into the segment bound
    m(n/2 - 1) + (3/2)(m - 2^n/3) leaves (3/2)(m - 2^n/3) > c1 m, which
    rearranges to c2 = 2 c1 / (9 - 6 c1).
    """
    return 2 * c1 / (9 - 6 * c1)


def _root_lower_bound(mu: Fraction, t: int, c: int) -> Fraction:
    """Certified rational lower bound on the positive root of mu t^2 x^2 + c x - mu."""
    a, b = mu.numerator, mu.denominator
    disc = c * c * b * b + 4 * a * a * t * t
    prec = 10**18
    s = isqrt(disc * prec * prec)  # floor: sqrt(disc) >= s / prec, one-sided
    lb = Fraction(s - c * b * prec, 2 * a * t * t * prec)
    scale = 10**12  # floor-scale to keep fixpoint denominators small
    return Fraction(max((lb.numerator * scale) // lb.denominator, 0), scale)


def derive_constants(chain: ConstantChain) -> ConstantChain:
    """Fill c1 and c2 for the given chain.

    c1 is a certified rational lower bound on the positive root of the
    threshold quadratic (every p <= c1 is excluded, so a counterexample has
    some rooted subfamily larger than split_factor * c1 * m), and
    c2 = margin_from_root(c1).  Exact comparisons against the true algebraic
    root go through excluded_fraction.
    """
    mu = 1 - chain.alpha
    c1 = _root_lower_bound(mu, chain.split_factor, chain.stability_constant)
    return ConstantChain(
        chain.split_factor, chain.stability_constant, chain.alpha, c1, margin_from_root(c1)
    )


def fixpoint_constants(
    split_factor: int = 3, stability_constant: int = 8, rounds: int = 12
) -> ConstantChain:
    """Iterate the alpha feedback: each c2 tightens alpha to 2/3 - c2.

    Every step uses certified lower bounds, so the final c1, c2 are sound
    simultaneously with the final alpha.  Converges in a handful of rounds.
    """
    chain = ConstantChain(split_factor, stability_constant, Fraction(2, 3))
    for _ in range(rounds):
        chain = derive_constants(chain)
        chain = ConstantChain(
            split_factor, stability_constant, Fraction(2, 3) - chain.c2, chain.c1, chain.c2
        )
    return derive_constants(chain)


# ---------------------------------------------------------------------------
# per-family evidence


@dataclass(frozen=True)
class Evidence:
    """Everything the per-family checks consume, computed once per family."""

    fam: Family
    comp: Family
    m: int
    m0: int
    total: int
    colex_m: int
    degrees: tuple[int, ...]
    rooted: tuple[int, ...]
    q: int
    peak: int  # smallest element attaining q, 1-based; 0 when n = 0
    down: CompressionTrace
    up: CompressionTrace  # ascending sweep of the complement
    uppers: dict[int, int]
    analysis: BadSetAnalysis
    trace_s: CompressionTrace
    trace_t: CompressionTrace
    z_mask: int


def build_evidence(fam: Family) -> Evidence:
    n = fam.n
    comp = complement(fam)
    rooted = tuple(bitops.rooted_masks(n, fam.mask))
    counts = [r.bit_count() for r in rooted]
    q = max(counts, default=0)
    peak = counts.index(q) + 1 if counts else 0
    degrees = tuple((fam.mask & bitops.axis(n, i)).bit_count() for i in range(1, n + 1))
    analysis = classify_sets(fam, partition_search(fam))
    down = analysis.trace
    _, trace_s = full_down(analysis.side_s)
    _, trace_t = full_down(analysis.side_t)
    _, up = full_up(comp)
    z_mask = 0
    for s in bitops.iter_bits(analysis.side_s.mask & analysis.side_t.mask):
        i0, i1, i2 = down.image(s), trace_s.image(s), trace_t.image(s)
        if i0 != i1 and i0 != i2 and i1 != i2:
            z_mask |= 1 << s
    return Evidence(
        fam=fam,
        comp=comp,
        m=len(fam),
        m0=(fam.mask & ~1).bit_count(),
        total=fam.total_size(),
        colex_m=colex_total_size(len(fam)),
        degrees=degrees,
        rooted=rooted,
        q=q,
        peak=peak,
        down=down,
        up=up,
        uppers=up.image_map(),
        analysis=analysis,
        trace_s=trace_s,
        trace_t=trace_t,
        z_mask=z_mask,
    )


def _root_elements(ev: Evidence, s: int) -> int:
    """Encoded set of roots of member s, read off the precomputed masks."""
    out = 0
    for j, r in enumerate(ev.rooted):
        if (r >> s) & 1:
            out |= 1 << j
    return out


# ---------------------------------------------------------------------------
# check registry

Outcome = tuple[bool, int, int, "dict[str, int] | None"]
FamilyCheck = Callable[[Evidence], Outcome]

_FAMILY_CHECKS: dict[str, FamilyCheck] = {}
_GLOBAL_CHECKS: dict[str, "Callable[[EnumerationPlan | None], _Tally]"] = {}


def _family_check(cid: str):
    def keep(fn: FamilyCheck) -> FamilyCheck:
        _FAMILY_CHECKS[cid] = fn
        return fn

    return keep


def _global_check(cid: str):
    def keep(fn):
        _GLOBAL_CHECKS[cid] = fn
        return fn

    return keep


@_family_check("eq1_duality")
def _chk_eq1_duality(ev: Evidence) -> Outcome:
    """Complementation swaps the down and up sweeps, prefix by prefix."""
    full = bitops.universe(ev.fam.n)
    for k in range(ev.fam.n + 1):
        want = ev.down.prefix_masks[k] ^ full
        got = ev.up.prefix_masks[k]
        if want != got:
            return False, want, got, None
    return True, 0, 0, None


@_family_check("rooted_complement_duality")
def _chk_rooted_complement_duality(ev: Evidence) -> Outcome:
    """Simply rooted iff the complement is union-closed, also after a one-cell toggle."""
    if is_simply_rooted(ev.fam) != is_union_closed(ev.comp):
        return False, int(is_simply_rooted(ev.fam)), int(is_union_closed(ev.comp)), None
    cell = (ev.fam.mask * 0x9E3779B97F4A7C15 + 0xD1B54A32D192ED03) % (1 << (1 << ev.fam.n))
    cell = cell.bit_length() % (1 << ev.fam.n)
    toggled = Family(ev.fam.n, ev.fam.mask ^ (1 << cell))
    lhs = int(is_simply_rooted(toggled))
    rhs = int(is_union_closed(complement(toggled)))
    return lhs == rhs, lhs, rhs, None


@_family_check("rooted_size_bound")
def _chk_rooted_size_bound(ev: Evidence) -> Outcome:
    """||F|| <= ||I(m)|| + m."""
    rhs = ev.colex_m + ev.m
    return ev.total <= rhs, ev.total, rhs, None


@_family_check("lemma_reimer_basics")
def _chk_reimer_basics(ev: Evidence) -> Outcome:
    """The full down sweep lands on a downset and every prefix stays simply rooted."""
    if not is_downset(ev.down.result):
        return False, ev.down.result.mask, 0, None
    for k in range(1, ev.fam.n + 1):
        pref = ev.down.prefix_family(k)
        if not is_simply_rooted(pref):
            return False, k, pref.mask, None
    return True, 0, 0, None


@_family_check("lemma_rooted_basics")
def _chk_rooted_basics(ev: Evidence) -> Outcome:
    """Falls shed at most one element, and a fallen prefix image carries its power set."""
    n = ev.fam.n
    for s, mv in ev.down.moves.items():
        img = mv[-1][1]
        if img & ~s or (s & ~img).bit_count() > 1:
            return False, s, img, None
    for k in range(1, n + 1):
        core = None  # cells whose whole power set sits inside the k-prefix
        for s, mv in ev.down.moves.items():
            if mv[0][0] > k:
                continue
            if core is None:
                core = bitops.subset_and(n, ev.down.prefix_masks[k])
            img = ev.down.prefix_image(s, k)
            if not (core >> img) & 1:
                return False, img, k, None
    return True, 0, 0, None


@_family_check("lemma_no_falls")
def _chk_no_falls(ev: Evidence) -> Outcome:
    """||F|| <= ||I(m)|| + m - #(members fixed by the down sweep)."""
    rhs = ev.colex_m + ev.m - ev.analysis.b3
    return ev.total <= rhs, ev.total, rhs, None


@_family_check("lemma_full_shadow")
def _chk_full_shadow(ev: Evidence) -> Outcome:
    """||F|| <= ||I(m)|| + m - #(members with their whole shadow inside F)."""
    rhs = ev.colex_m + ev.m - len(ev.analysis.full_shadow)
    return ev.total <= rhs, ev.total, rhs, None


@_family_check("lemma_deficiency")
def _chk_deficiency(ev: Evidence) -> Outcome:
    """||G|| <= ||I(|G|)|| + def(G), on the family and on its complement."""
    rhs = ev.colex_m + deficiency(ev.fam)
    if ev.total > rhs:
        return False, ev.total, rhs, None
    ct = ev.comp.total_size()
    crhs = colex_total_size(len(ev.comp)) + deficiency(ev.comp)
    return ct <= crhs, ct, crhs, None


@_family_check("lemma_forced_fall")
def _chk_forced_fall(ev: Evidence) -> Outcome:
    """At most one shadow set is missing per member; its owner falls there or stays."""
    n, mask = ev.fam.n, ev.fam.mask
    miss: dict[int, int] = {}
    for i in range(1, n + 1):
        for s in bitops.iter_bits(bitops.down_fallers(n, mask, i)):
            if s in miss:
                return False, s, 2, None
            miss[s] = s ^ (1 << (i - 1))
    for s, low in miss.items():
        img = ev.down.image(s)
        if img != s and img != low:
            return False, s, img, None
    return True, 0, 0, None


@_family_check("lemma_smaller_falls")
def _chk_smaller_falls(ev: Evidence) -> Outcome:
    """Members fixed by a rooted subfamily's sweep are fixed by the full sweep."""
    down_fixed = ev.analysis.fixed.mask
    for tr in (ev.trace_s, ev.trace_t):
        stuck = tr.fixed_mask() & ~down_fixed
        if stuck:
            s = (stuck & -stuck).bit_length() - 1
            return False, s, ev.down.image(s), None
    return True, 0, 0, None


@_family_check("lemma_good_fall")
def _chk_good_fall(ev: Evidence) -> Outcome:
    """Good members fall the same way under the full and the side sweeps."""
    good = ev.analysis.good.mask
    for side, tr in ((ev.analysis.side_s, ev.trace_s), (ev.analysis.side_t, ev.trace_t)):
        for s in bitops.iter_bits(good & side.mask):
            if tr.image(s) != ev.down.image(s):
                return False, tr.image(s), ev.down.image(s), None
    return True, 0, 0, None


@_family_check("lemma_split_rooted")
def _chk_split_rooted(ev: Evidence) -> Outcome:
    """|d(F1) ^ d(F2)| <= #bad + |F1 ^ F2| for the two rooted sides."""
    d1 = ev.trace_s.prefix_masks[-1]
    d2 = ev.trace_t.prefix_masks[-1]
    lhs = (d1 & d2).bit_count()
    rhs = ev.analysis.b + (ev.analysis.side_s.mask & ev.analysis.side_t.mask).bit_count()
    return lhs <= rhs, lhs, rhs, None


@_family_check("cor_lower_b")
def _chk_lower_b(ev: Evidence) -> Outcome:
    """Harris on the swept downsets: |F1||F2| <= 2^n (#bad + |F1 ^ F2|)."""
    cells = 1 << ev.fam.n
    d1 = ev.trace_s.prefix_masks[-1]
    d2 = ev.trace_t.prefix_masks[-1]
    lhs = d1.bit_count() * d2.bit_count()
    rhs = cells * (d1 & d2).bit_count()
    if lhs > rhs:
        return False, lhs, rhs, None
    lhs = len(ev.analysis.side_s) * len(ev.analysis.side_t)
    rhs = cells * (
        ev.analysis.b + (ev.analysis.side_s.mask & ev.analysis.side_t.mask).bit_count()
    )
    return lhs <= rhs, lhs, rhs, None


@_family_check("lemma_many_bad")
def _chk_many_bad(ev: Evidence) -> Outcome:
    """|F1||F2| <= 2^n (b1 + 2 b2 + b3)."""
    a = ev.analysis
    lhs = len(a.side_s) * len(a.side_t)
    rhs = (1 << ev.fam.n) * (a.b1 + 2 * a.b2 + a.b3)
    return lhs <= rhs, lhs, rhs, None


@_family_check("lemma_large_product")
def _chk_large_product(ev: Evidence) -> Outcome:
    """The found partition covers F and certifies 4|F_S||F_T| >= m0^2 - q^2."""
    a = ev.analysis
    if (a.side_s.mask | a.side_t.mask) != ev.fam.mask:
        return False, a.side_s.mask | a.side_t.mask, ev.fam.mask, None
    lhs = 4 * (a.side_s.mask & ~1).bit_count() * (a.side_t.mask & ~1).bit_count()
    rhs = ev.m0 * ev.m0 - ev.q * ev.q
    return lhs >= rhs, lhs, rhs, None


@_family_check("lemma_low_degrees")
def _chk_low_degrees(ev: Evidence) -> Outcome:
    """Against a counterexample complement, each degree makes ||I(m)|| large."""
    m = ev.m
    hyp = (ev.comp.mask & ~1) != 0 and all(2 * d > m for d in ev.degrees)
    if not hyp:
        return True, 0, 0, {"hypothesis_unmet": 1}
    for d in ev.degrees:
        rhs = m * (ev.fam.n - 2) + 2 * d - m
        if not 2 * ev.colex_m > rhs:
            return False, 2 * ev.colex_m, rhs, {"hypothesis_met": 1}
    return True, 0, 0, {"hypothesis_met": 1}


@_family_check("thm_downset")
def _chk_downset_bound(ev: Evidence) -> Outcome:
    """||F|| <= ||I(m)|| + m - |largest downset inside F|."""
    rhs = ev.colex_m + ev.m - len(largest_downset(ev.fam))
    return ev.total <= rhs, ev.total, rhs, None


@_family_check("lemma_few_with_root")
def _chk_few_with_root(ev: Evidence) -> Outcome:
    """Top-element split accounting and the q/3 chain, after moving the peak on top."""
    n = ev.fam.n
    if n == 0 or ev.m0 == 0:
        return True, 0, 0, {"degenerate": 1}
    extra: dict[str, int] = {}
    mask2 = bitops.swap_elements(n, ev.fam.mask, ev.peak, n)
    half = 1 << (n - 1)
    hi = bitops.axis(n, n)
    plus = Family(n - 1, (mask2 & hi) >> half)
    minus = Family(n - 1, mask2 & ~hi)
    m_plus, m_minus = len(plus), len(minus)
    acc = plus.total_size() + minus.total_size() + m_plus
    if ev.total != acc:
        return False, ev.total, acc, None
    if not (is_simply_rooted(plus) and is_simply_rooted(minus)):
        return False, plus.mask, minus.mask, None
    dplus = largest_downset(plus)
    mapped = bitops.rooted_mask(n, mask2, n) >> half
    if mapped & ~dplus.mask or mapped.bit_count() != ev.q:
        return False, mapped, dplus.mask, None
    rhs = colex_total_size(m_plus) + m_plus - len(dplus)
    if plus.total_size() > rhs:
        return False, plus.total_size(), rhs, None
    if m_minus <= m_plus and 3 * (m_plus - m_minus) <= 2 * ev.q:
        extra["chain_hypothesis_met"] = 1
        rhs = 3 * (ev.colex_m + ev.m) - ev.q
        if 3 * ev.total > rhs:
            return False, 3 * ev.total, rhs, extra
    hyp = (ev.comp.mask & ~1) != 0 and all(2 * d > ev.m for d in ev.degrees)
    if hyp:
        extra["counterexample_hypothesis_met"] = 1
        rhs = ev.m * (3 * n - 6) + 2 * ev.q
        if not 6 * ev.colex_m > rhs:
            return False, 6 * ev.colex_m, rhs, extra
    return True, 0, 0, extra or None


def check_few_with_root(fam: Family) -> bool:
    """Run the top-element split check on one simply rooted family.

    Standalone entry point for the same predicate the suite runs under the
    id "lemma_few_with_root".  Vacuous clauses pass, so the result is True
    on every simply rooted family unless the accounting itself breaks.
    """
    ok, _, _, _ = _chk_few_with_root(build_evidence(fam))
    return ok


def _stability_check(c: int) -> FamilyCheck:
    def chk(ev: Evidence) -> Outcome:
        lhs = ev.m * ev.m - ev.q * ev.q
        rhs = c * (1 << ev.fam.n) * (ev.colex_m + ev.m - ev.total)
        return lhs <= rhs, lhs, rhs, None

    return chk


_FAMILY_CHECKS["thm_stability_12"] = _stability_check(12)
_FAMILY_CHECKS["thm_stability_8"] = _stability_check(8)


@_family_check("lemma_reimer_cubes")
def _chk_reimer_cubes(ev: Evidence) -> Outcome:
    """The cubes [A, up-image(A)] of the complement's sweep tile without overlap."""
    covered = 0
    cells = 0
    for s, u in ev.uppers.items():
        cube = 1 << s
        for b in bitops.iter_bits(u & ~s):
            cube |= cube << (1 << b)
        if covered & cube:
            return False, s, u, None
        covered |= cube
        cells += 1 << (u & ~s).bit_count()
    if covered.bit_count() != cells:
        return False, covered.bit_count(), cells, None
    if ev.comp.mask & ~covered:
        return False, ev.comp.mask, covered, None
    return True, 0, 0, None


@_family_check("lemma_uc_image")
def _chk_uc_image(ev: Evidence) -> Outcome:
    """Every member that falls is an up-sweep prefix image of itself minus its roots."""
    for s in ev.down.moves:
        if _witness_from_traces(ev.down, ev.up, _root_elements(ev, s), s) is None:
            return False, s, -1, None
    return True, 0, 0, None


@_family_check("lemma_cube_set")
def _chk_cube_set(ev: Evidence) -> Outcome:
    """A member inside the cube [A, up-image(A)] equals A plus exactly its roots."""
    for a, u in ev.uppers.items():
        cube = 1 << a
        for b in bitops.iter_bits(u & ~a):
            cube |= cube << (1 << b)
        for s in bitops.iter_bits(cube & ev.fam.mask):
            if s & ~_root_elements(ev, s) != a:
                return False, s, a, None
    return True, 0, 0, None


@_family_check("lemma_root_fall")
def _chk_root_fall(ev: Evidence) -> Outcome:
    """Members only ever fall by shedding one of their roots."""
    for s, mv in ev.down.moves.items():
        img = mv[-1][1]
        drop = s & ~img
        if drop.bit_count() != 1:
            return False, s, img, None
        if not (ev.rooted[drop.bit_length() - 1] >> s) & 1:
            return False, s, img, None
    return True, 0, 0, None


@_family_check("cor_Z_roots")
def _chk_z_roots(ev: Evidence) -> Outcome:
    """Three-image members have at least two roots, three when they move."""
    for s in bitops.iter_bits(ev.z_mask):
        k = _root_elements(ev, s).bit_count()
        need = 3 if s in ev.down.moves else 2
        if k < need:
            return False, s, k, None
    return True, 0, 0, None


@_family_check("lemma_split_rooted_2")
def _chk_split_rooted_2(ev: Evidence) -> Outcome:
    """With every shared member full-shadowed, |d(F1) ^ d(F2)| <= #bad + |Z|."""
    a = ev.analysis
    inter = a.side_s.mask & a.side_t.mask
    if inter & ~a.full_shadow.mask:
        return False, inter, a.full_shadow.mask, None
    d1 = ev.trace_s.prefix_masks[-1]
    d2 = ev.trace_t.prefix_masks[-1]
    lhs = (d1 & d2).bit_count()
    rhs = a.b + ev.z_mask.bit_count()
    return lhs <= rhs, lhs, rhs, None


@_family_check("lemma_many_bad_2")
def _chk_many_bad_2(ev: Evidence) -> Outcome:
    """|F1||F2| <= 2^n (b1 + b2 + b3 + |Z| - |Y|)."""
    a = ev.analysis
    lhs = len(a.side_s) * len(a.side_t)
    rhs = (1 << ev.fam.n) * (a.b1 + a.b2 + a.b3 + ev.z_mask.bit_count() - len(a.y))
    return lhs <= rhs, lhs, rhs, None


@_family_check("lemma_Y_ge_Z")
def _chk_y_ge_z(ev: Evidence) -> Outcome:
    """|Z| <= |Y|: three-image members never outnumber the doubly-bad ones."""
    lhs = ev.z_mask.bit_count()
    rhs = len(ev.analysis.y)
    return lhs <= rhs, lhs, rhs, None


@_family_check("lemma_refinement")
def _chk_refinement(ev: Evidence) -> Outcome:
    """|F1||F2| <= 2^n (b1 + b2 + b3)."""
    a = ev.analysis
    lhs = len(a.side_s) * len(a.side_t)
    rhs = (1 << ev.fam.n) * (a.b1 + a.b2 + a.b3)
    return lhs <= rhs, lhs, rhs, None


@_family_check("probe_degree_bound")
def _chk_probe_degree(ev: Evidence) -> Outcome:
    """Conjectured: ||F|| <= ||I(m)|| + max element degree."""
    rhs = ev.colex_m + max(ev.degrees, default=0)
    return ev.total <= rhs, ev.total, rhs, None


@_family_check("probe_max_rooted_bound")
def _chk_probe_max_rooted(ev: Evidence) -> Outcome:
    """Conjectured: ||F|| <= ||I(m)|| + q."""
    rhs = ev.colex_m + ev.q
    return ev.total <= rhs, ev.total, rhs, None


@_family_check("probe_eps_delta_bound")
def _chk_probe_eps_delta(ev: Evidence) -> Outcome:
    """Conjectured n-free stability, probed at the sample point eps = delta = 1/10."""
    if 10 * ev.q > ev.m:
        return True, 0, 0, {"hypothesis_unmet": 1}
    lhs = 10 * ev.total
    rhs = 10 * ev.colex_m + 9 * ev.m
    return lhs <= rhs, lhs, rhs, {"hypothesis_met": 1}


# ---------------------------------------------------------------------------
# global (population-free) checks


@dataclass
class _Tally:
    instances: int = 0
    violations: list = field(default_factory=list)  # (order_key, family_text, lhs, rhs)
    details: dict = field(default_factory=dict)


@_global_check("lemma_colex_total")
def _global_colex_total(plan: EnumerationPlan | None) -> _Tally:
    t = _Tally()
    tots = total_size_range(COLEX_SWEEP_LIMIT)
    for m in range(1, COLEX_SWEEP_LIMIT + 1):
        six = 6 * tots[m]
        bound = segment_bound_sixths(m)
        t.instances += 1
        if six > bound or (six == bound) != segment_bound_is_tight(m):
            t.violations.append((m, f"m={m}", six, bound))
    flips = 0
    for r in range(1, THRESHOLD_R_LIMIT + 1):
        for m in range(1, COLEX_SWEEP_LIMIT + 1):
            t.instances += 1
            lhs = 2 * tots[m] > m * r
            rhs = 3 * m > 1 << (r + 2)
            if lhs != rhs:
                t.violations.append((m, f"m={m} r={r}", int(lhs), int(rhs)))
            elif lhs and not (3 * (m - 1) > 1 << (r + 2)):
                flips += 1
    t.details["threshold_flips_seen"] = flips
    return t


@_global_check("lemma_deficiency")
def _global_deficiency(plan: EnumerationPlan | None) -> _Tally:
    t = _Tally()
    for m in range(1, TIGHT_GRID_M + 1):
        for k in range(1, TIGHT_GRID_K + 1):
            fam = deficiency_tight_family(m, k)
            t.instances += 1
            lhs = fam.total_size()
            rhs = colex_total_size(m) + deficiency(fam)
            if len(fam) != m or deficiency(fam) != k * m or lhs != rhs:
                t.violations.append((m * 100 + k, f"glued m={m} k={k}", lhs, rhs))
    # pairs with deficiency 3 stay one unit under the generic bound
    cells = 1 << PAIR_REMARK_GROUND
    seen = 0
    for a in range(cells):
        for b in range(a):
            fam = Family(PAIR_REMARK_GROUND, (1 << a) | (1 << b))
            if deficiency(fam) != 3:
                continue
            t.instances += 1
            seen += 1
            if fam.total_size() > 3:
                t.violations.append((a * cells + b, family_to_text(fam), fam.total_size(), 3))
    t.details["deficiency3_pairs"] = seen
    if plan is not None and plan.mode == "exhaustive":
        n = plan.n
        for mask in range(1 << (1 << n)):
            fam = Family(n, mask)
            t.instances += 1
            lhs = fam.total_size()
            rhs = colex_total_size(len(fam)) + deficiency(fam)
            if lhs > rhs:
                t.violations.append((mask, family_to_text(fam), lhs, rhs))
    return t


# ---------------------------------------------------------------------------
# catalog

_STATEMENTS: dict[str, tuple[str, str]] = {
    # id -> (applicability, one-line statement)
    "eq1_duality": (
        "any-family",
        "complementing the family swaps down- and up-compression, prefix by prefix",
    ),
    "rooted_complement_duality": (
        "any-family",
        "a family is simply rooted iff its complement in P(n) is union-closed",
    ),
    "rooted_size_bound": ("simply-rooted", "||F|| <= ||I(m)|| + m"),
    "lemma_colex_total": (
        "numeric",
        "6||I(m)|| <= 3(m(r+1) - 2^r) for 2^r < 3m < 2^(r+1), equality on the tight set; "
        "and 2||I(m)|| > mr iff 3m > 2^(r+2)",
    ),
    "lemma_reimer_basics": (
        "simply-rooted",
        "the full down sweep is a downset and every sweep prefix is simply rooted",
    ),
    "lemma_rooted_basics": (
        "simply-rooted",
        "a fallen prefix image carries its whole power set inside the prefix; "
        "falls shed at most one element",
    ),
    "lemma_no_falls": (
        "simply-rooted",
        "||F|| <= ||I(m)|| + m - #(members fixed by the down sweep)",
    ),
    "lemma_full_shadow": (
        "simply-rooted",
        "||F|| <= ||I(m)|| + m - #(members whose whole shadow lies in F)",
    ),
    "lemma_deficiency": (
        "any-family",
        "||G|| <= ||I(|G|)|| + def(G) for every family; glued colex segments are tight "
        "and deficiency-3 pairs stay at total 3",
    ),
    "lemma_forced_fall": (
        "simply-rooted",
        "no member misses two shadow sets; a member missing B-b falls to B-b or stays",
    ),
    "lemma_smaller_falls": (
        "simply-rooted",
        "members fixed by a rooted subfamily's sweep are fixed by the full sweep",
    ),
    "lemma_good_fall": (
        "simply-rooted",
        "good members fall identically under the full sweep and a rooted side sweep",
    ),
    "lemma_split_rooted": (
        "simply-rooted",
        "|d(F1) ^ d(F2)| <= #bad(F) + |F1 ^ F2| for the rooted sides F1, F2",
    ),
    "cor_lower_b": (
        "simply-rooted",
        "|F1||F2| <= 2^n (#bad(F) + |F1 ^ F2|), via Harris on the swept downsets",
    ),
    "lemma_many_bad": ("simply-rooted", "|F_S||F_T| <= 2^n (b1 + 2 b2 + b3)"),
    "lemma_large_product": (
        "simply-rooted",
        "the balanced-partition search certifies 4|F_S||F_T| >= m0^2 - q^2",
    ),
    "lemma_low_degrees": (
        "simply-rooted",
        "if the complement is a union-closed counterexample with all degrees over m/2, "
        "then 2||I(m)|| > m(n-2) + 2 deg(i) - m for every i",
    ),
    "thm_downset": (
        "simply-rooted",
        "||F|| <= ||I(m)|| + m - |largest downset inside F|",
    ),
    "lemma_few_with_root": (
        "simply-rooted",
        "splitting off the peak element: size accounting is exact, both halves stay "
        "simply rooted, the top-rooted members map into the upper half's largest "
        "downset, and the balanced case gives 3||F|| <= 3(||I(m)|| + m) - q",
    ),
    "thm_stability_12": ("simply-rooted", "m^2 - q^2 <= 12 * 2^n * (||I(m)|| + m - ||F||)"),
    "lemma_reimer_cubes": (
        "simply-rooted",
        "the cubes [A, u(A)] of the complement's up sweep are pairwise disjoint and "
        "cover the complement",
    ),
    "lemma_uc_image": (
        "simply-rooted",
        "every member that falls is hit by an up-sweep prefix of itself minus its roots",
    ),
    "lemma_cube_set": (
        "simply-rooted",
        "a member B inside a sweep cube [A, u(A)] satisfies B minus its roots = A",
    ),
    "lemma_root_fall": ("simply-rooted", "members only ever fall by shedding a root"),
    "cor_Z_roots": (
        "simply-rooted",
        "members with three pairwise distinct sweep images have >= 2 roots, >= 3 if moved",
    ),
    "lemma_split_rooted_2": (
        "simply-rooted",
        "when every shared member is full-shadowed, |d(F1) ^ d(F2)| <= #bad(F) + |Z|",
    ),
    "lemma_many_bad_2": (
        "simply-rooted",
        "|F_S||F_T| <= 2^n (b1 + b2 + b3 + |Z| - |Y|)",
    ),
    "lemma_Y_ge_Z": ("simply-rooted", "|Z| <= |Y|"),
    "lemma_refinement": ("simply-rooted", "|F_S||F_T| <= 2^n (b1 + b2 + b3)"),
    "thm_stability_8": ("simply-rooted", "m^2 - q^2 <= 8 * 2^n * (||I(m)|| + m - ||F||)"),
    "probe_degree_bound": ("simply-rooted", "conjectured: ||F|| <= ||I(m)|| + max degree"),
    "probe_max_rooted_bound": ("simply-rooted", "conjectured: ||F|| <= ||I(m)|| + q"),
    "probe_eps_delta_bound": (
        "simply-rooted",
        "conjectured n-free stability at eps = delta = 1/10: "
        "10 q <= m implies 10||F|| <= 10||I(m)|| + 9m",
    ),
}

CATALOG_IDS: tuple[str, ...] = (
    "eq1_duality",
    "rooted_complement_duality",
    "rooted_size_bound",
    "lemma_colex_total",
    "lemma_reimer_basics",
    "lemma_rooted_basics",
    "lemma_no_falls",
    "lemma_full_shadow",
    "lemma_deficiency",
    "lemma_forced_fall",
    "lemma_smaller_falls",
    "lemma_good_fall",
    "lemma_split_rooted",
    "cor_lower_b",
    "lemma_many_bad",
    "lemma_large_product",
    "lemma_low_degrees",
    "thm_downset",
    "lemma_few_with_root",
    "thm_stability_12",
    "lemma_reimer_cubes",
    "lemma_uc_image",
    "lemma_cube_set",
    "lemma_root_fall",
    "cor_Z_roots",
    "lemma_split_rooted_2",
    "lemma_many_bad_2",
    "lemma_Y_ge_Z",
    "lemma_refinement",
    "thm_stability_8",
)

PROBE_IDS: tuple[str, ...] = (
    "probe_degree_bound",
    "probe_max_rooted_bound",
    "probe_eps_delta_bound",
)


def _assert_catalog_complete() -> None:
    registered = set(_FAMILY_CHECKS) | set(_GLOBAL_CHECKS)
    missing = [cid for cid in CATALOG_IDS + PROBE_IDS if cid not in registered]
    if len(CATALOG_IDS) != 30 or missing:
        raise AssertionError(f"check catalog incomplete: {len(CATALOG_IDS)} ids, missing {missing}")
    unknown = registered - set(CATALOG_IDS) - set(PROBE_IDS)
    if unknown:
        raise AssertionError(f"unregistered check ids: {sorted(unknown)}")
    if set(_STATEMENTS) != set(CATALOG_IDS) | set(PROBE_IDS):
        raise AssertionError("statement table out of step with the catalog")


_assert_catalog_complete()


@dataclass(frozen=True)
class CheckDescriptor:
    """One catalog entry: what is claimed, over which population."""

    id: str
    statement_ref: str
    applicability: str  # "simply-rooted" | "any-family" | "numeric"
    population: EnumerationPlan | None = None
    conjecture: bool = False


def catalog(plan: EnumerationPlan | None = None) -> list[CheckDescriptor]:
    """The full ordered catalog: thirty checks plus the three conjecture probes."""
    out = []
    for cid in CATALOG_IDS + PROBE_IDS:
        applicability, statement = _STATEMENTS[cid]
        pop = plan if cid in _FAMILY_CHECKS else None
        out.append(
            CheckDescriptor(
                id=cid,
                statement_ref=statement,
                applicability=applicability,
                population=pop,
                conjecture=cid in PROBE_IDS,
            )
        )
    return out


# ---------------------------------------------------------------------------
# suite runner


@dataclass(frozen=True)
class Violation:
    family: str
    lhs: int
    rhs: int


@dataclass(frozen=True)
class CheckReport:
    id: str
    instances_tested: int
    violations: tuple[Violation, ...]
    violations_seen: int
    status: Literal["pass", "fail", "skipped"]
    wall_time: float
    details: dict
    conjecture: bool = False

    def as_json(self) -> dict:
        return {
            "id": self.id,
            "instances_tested": self.instances_tested,
            "violations": [
                {"family": v.family, "lhs": v.lhs, "rhs": v.rhs} for v in self.violations
            ],
            "violations_seen": self.violations_seen,
            "status": self.status,
            "details": dict(sorted(self.details.items())),
            "conjecture": self.conjecture,
        }


def _population_size(plan: EnumerationPlan) -> int:
    if plan.mode == "exhaustive":
        return len(_union_closed_masks(plan.n))
    return plan.sample_count


def _family_at(plan: EnumerationPlan, index: int) -> Family:
    if plan.mode == "exhaustive":
        return complement(Family(plan.n, _union_closed_masks(plan.n)[index]))
    return indexed_rooted_sample(plan, index)


def _run_shard(args: tuple) -> tuple[dict, int]:
    n, mode, samples, seed, start, count, ids = args
    plan = EnumerationPlan(n=n, mode=mode, sample_count=samples, seed=seed)
    tallies = {cid: _Tally() for cid in ids}
    errors = 0
    for index in range(start, start + count):
        try:
            ev = build_evidence(_family_at(plan, index))
        except CapacityError:
            errors += 1
            continue
        text = None
        for cid in ids:
            ok, lhs, rhs, extra = _FAMILY_CHECKS[cid](ev)
            t = tallies[cid]
            t.instances += 1
            if not ok:
                if text is None:
                    text = family_to_text(ev.fam)
                t.violations.append((index, text, lhs, rhs))
            if extra:
                for key, val in extra.items():
                    t.details[key] = t.details.get(key, 0) + val
    packed = {
        cid: (t.instances, t.violations, t.details) for cid, t in tallies.items()
    }
    return packed, errors


def run_suite(
    descriptors: Sequence[CheckDescriptor], parallelism: int = 1
) -> list[CheckReport]:
    """Execute the given catalog entries and return reports in catalog order.

    Family-scope entries share one evidence pass over their common population,
    sharded into fixed index blocks; global entries run once in the parent.
    Reports are identical for any worker count.
    """
    family_ids = tuple(d.id for d in descriptors if d.id in _FAMILY_CHECKS)
    plans = {d.population for d in descriptors if d.id in _FAMILY_CHECKS}
    plans.discard(None)
    if len(plans) > 1:
        raise DomainError("family-scope checks must share one population plan")
    plan = plans.pop() if plans else None

    merged: dict[str, _Tally] = {cid: _Tally() for cid in family_ids}
    errors = 0
    family_wall = 0.0
    if plan is not None and family_ids:
        t0 = time.perf_counter()
        total = _population_size(plan)
        shards = [
            (plan.n, plan.mode, plan.sample_count, plan.seed, start,
             min(SHARD_SIZE, total - start), family_ids)
            for start in range(0, total, SHARD_SIZE)
        ]
        if parallelism > 1 and len(shards) > 1:
            if plan.mode == "exhaustive":
                _union_closed_masks(plan.n)  # warm before fork, children inherit
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(parallelism) as pool:
                results = pool.map(_run_shard, shards, chunksize=1)
        else:
            results = [_run_shard(s) for s in shards]
        for packed, errs in results:
            errors += errs
            for cid, (instances, violations, details) in packed.items():
                t = merged[cid]
                t.instances += instances
                t.violations.extend(violations)
                for key, val in details.items():
                    t.details[key] = t.details.get(key, 0) + val
        family_wall = time.perf_counter() - t0

    reports = []
    for d in descriptors:
        tally = _Tally()
        wall = family_wall
        if d.id in _FAMILY_CHECKS and d.id in merged:
            base = merged[d.id]
            tally.instances += base.instances
            tally.violations.extend(base.violations)
            for key, val in base.details.items():
                tally.details[key] = tally.details.get(key, 0) + val
        if d.id in _GLOBAL_CHECKS:
            t0 = time.perf_counter()
            extra = _GLOBAL_CHECKS[d.id](plan)
            wall += time.perf_counter() - t0
            tally.instances += extra.instances
            tally.violations.extend(extra.violations)
            for key, val in extra.details.items():
                tally.details[key] = tally.details.get(key, 0) + val
        if errors and d.id in _FAMILY_CHECKS:
            tally.details["families_skipped"] = errors
        tally.violations.sort(key=lambda rec: rec[0])
        kept = tuple(Violation(text, lhs, rhs) for _, text, lhs, rhs in
                     tally.violations[:VIOLATION_CAP])
        status: Literal["pass", "fail", "skipped"]
        if tally.instances == 0:
            status = "skipped"
        elif tally.violations:
            status = "fail"
        else:
            status = "pass"
        reports.append(
            CheckReport(
                id=d.id,
                instances_tested=tally.instances,
                violations=kept,
                violations_seen=len(tally.violations),
                status=status,
                wall_time=wall,
                details=tally.details,
                conjecture=d.conjecture,
            )
        )
    return reports


def suite_document(
    plan: EnumerationPlan | None,
    reports: Iterable[CheckReport],
    selected: Sequence[str] | None = None,
) -> dict:
    """The canonical report document; wall times stay out so output is replayable."""
    reports = list(reports)
    run_config = {
        "n": plan.n if plan else None,
        "mode": plan.mode if plan else None,
        "samples": plan.sample_count if plan else None,
        "checks": list(selected) if selected is not None else None,
    }
    return {
        "run_config": run_config,
        "seed": plan.seed if plan else None,
        "checks": [r.as_json() for r in reports if not r.conjecture],
        "conjecture_probes": [r.as_json() for r in reports if r.conjecture],
    }


def document_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_table(reports: Iterable[CheckReport]) -> str:
    """Human-readable result table, probes separated below the rule."""
    rows = [("check", "status", "instances", "violations", "seconds")]
    reports = list(reports)

    def fmt(r: CheckReport) -> tuple[str, str, str, str, str]:
        return (
            r.id,
            r.status,
            str(r.instances_tested),
            str(r.violations_seen),
            f"{r.wall_time:.2f}",
        )

    rows.extend(fmt(r) for r in reports if not r.conjecture)
    probe_rows = [fmt(r) for r in reports if r.conjecture]
    widths = [
        max(len(row[col]) for row in rows + probe_rows) for col in range(5)
    ]
    lines = []
    for i, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    if probe_rows:
        lines.append("conjecture probes:")
        for row in probe_rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"
