"""Bad sets, deficiency, partitions, and the stability inequalities.

For a simply rooted family F a member B is *bad* when its shadow lies inside
F or the full downward sweep leaves it fixed; every other member is good.
Good members strictly shed one element under the sweep, which is what powers
every bound here: the more bad sets, the further ||F|| sits below the trivial
segment bound ||I(m)|| + m.

Partitions split the ground set into (S, T); writing F_S for the members
rooted in S, the product |F_S||F_T| is large for some partition whenever no
single element roots too many members.  Throughout, the two partition sides
are adjusted to carry the empty set when F does: F1 = F_S + {{}}, F2 = F_T +
{{}}, keeping F1 and F2 simply rooted with F1 union F2 = F, at the price of
the empty set always being bad (it is fixed and has an empty shadow).

All bound comparisons are exact: counts are ints, ratios are Fractions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from . import bitops
from .colex import colex_total_size
from .compression import CompressionTrace, full_down
from .core import Family, is_simply_rooted, set_text, stats
from .errors import CapacityError, DomainError

__all__ = [
    "BadSetAnalysis",
    "InequalityCheck",
    "Partition",
    "bad_set_lower_bounds",
    "classify_sets",
    "deficiency",
    "deficiency_tight_family",
    "largest_downset",
    "partition_search",
    "stability_bound",
    "y_family",
    "z_family",
]

FALLBACK_GROUND_LIMIT = 20


@dataclass(frozen=True)
class Partition:
    """Two-sided split of the ground set, sides as encoded element sets."""

    n: int
    s_elements: int
    t_elements: int

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if self.s_elements & self.t_elements:
            raise DomainError("partition sides overlap")
        if self.s_elements | self.t_elements != full:
            raise DomainError("partition does not cover the ground set")


def deficiency(fam: Family) -> int:
    """Sum over members of how many shadow sets are missing from the family."""
    return sum(
        bitops.down_fallers(fam.n, fam.mask, i).bit_count() for i in range(1, fam.n + 1)
    )


def largest_downset(fam: Family) -> Family:
    """The members whose entire power set lies in the family (the largest down-set)."""
    return Family(fam.n, bitops.subset_and(fam.n, fam.mask))


def full_shadow_mask(fam: Family) -> int:
    """Cells of members with their whole shadow inside the family."""
    fs = fam.mask
    for i in range(1, fam.n + 1):
        ax = bitops.axis(fam.n, i)
        block = 1 << (i - 1)
        fs &= ~ax | ((fam.mask & ~ax) << block)
    return fs


def deficiency_tight_family(m: int, k: int) -> Family:
    """The colex segment of m sets with k fresh elements glued onto every member.

    Its deficiency is exactly k*m and its total size meets the deficiency
    bound with equality.
    """
    base_n = (m - 1).bit_length() if m > 1 else 0
    n = base_n + k
    if n > bitops.MAX_GROUND:
        raise CapacityError(f"needs ground size {n}")
    block = ((1 << k) - 1) << base_n
    return Family.from_cells(n, (s | block for s in range(m)))


def _rooted_or(n: int, rooted: list[int], elements: int) -> int:
    out = 0
    for b in bitops.iter_bits(elements):
        out |= rooted[b]
    return out


def partition_search(fam: Family) -> Partition:
    """Greedy balanced partition of the ground set by rooted-subfamily size.

    Starting from S empty, repeatedly apply the single-element move that most
    increases min(|F_S|, |F_T|) (ties: smallest element).  Any partition that
    no single move improves satisfies 4|F_S||F_T| >= m0^2 - q^2, where m0
    counts the nonempty members and q the largest one-element rooted count;
    that bound is asserted, with an exhaustive search as a fallback.
    """
    if not is_simply_rooted(fam):
        raise DomainError("family is not simply rooted")
    n = fam.n
    rooted = bitops.rooted_masks(n, fam.mask)
    m0 = (fam.mask & ~1).bit_count()
    q = max((r.bit_count() for r in rooted), default=0)
    target = m0 * m0 - q * q  # 4|F_S||F_T| must reach this

    s_el = 0
    t_el = (1 << n) - 1
    cur_s, cur_t = 0, _rooted_or(n, rooted, t_el)
    cur_min = min(cur_s.bit_count(), cur_t.bit_count())
    while True:
        best = None  # (new_min, element, new_s_el)
        for b in range(n):
            bit = 1 << b
            if t_el & bit:
                new_s_el = s_el | bit
            else:
                new_s_el = s_el & ~bit
            new_t_el = ((1 << n) - 1) ^ new_s_el
            ns = _rooted_or(n, rooted, new_s_el).bit_count()
            nt = _rooted_or(n, rooted, new_t_el).bit_count()
            new_min = min(ns, nt)
            if new_min > cur_min and (best is None or new_min > best[0]):
                best = (new_min, b, new_s_el)
        if best is None:
            break
        cur_min = best[0]
        s_el = best[2]
        t_el = ((1 << n) - 1) ^ s_el

    a = _rooted_or(n, rooted, s_el).bit_count()
    b_ = _rooted_or(n, rooted, t_el).bit_count()
    if 4 * a * b_ >= target:
        return Partition(n, s_el, t_el)
    return _partition_exhaustive(fam, rooted, target)


def _partition_exhaustive(fam: Family, rooted: list[int], target: int) -> Partition:
    n = fam.n
    live = [b for b in range(n) if rooted[b]]
    if len(live) > FALLBACK_GROUND_LIMIT:
        raise CapacityError(f"exhaustive partition fallback over {len(live)} elements")
    best_prod = -1
    best_sel = 0
    for pick in range(1 << len(live)):
        s_el = 0
        for j, b in enumerate(live):
            if (pick >> j) & 1:
                s_el |= 1 << b
        t_el = ((1 << n) - 1) ^ s_el
        prod = _rooted_or(n, rooted, s_el).bit_count() * _rooted_or(n, rooted, t_el).bit_count()
        if prod > best_prod:
            best_prod, best_sel = prod, s_el
    if 4 * best_prod < target:  # impossible for simply rooted input
        raise RuntimeError("no partition certifies the product bound")
    return Partition(n, best_sel, ((1 << n) - 1) ^ best_sel)


@dataclass(frozen=True)
class BadSetAnalysis:
    """Outcome of classify_sets: the bad/good split and the partition counts."""

    family: Family
    partition: Partition
    side_s: Family  # members rooted in S, plus {} when present
    side_t: Family
    full_shadow: Family
    fixed: Family
    bad: Family
    good: Family
    y: Family  # full-shadow members that are also fixed
    trace: CompressionTrace

    @property
    def b(self) -> int:
        return len(self.bad)

    @property
    def b1(self) -> int:
        return (self.full_shadow.mask & ~(self.side_s.mask & self.side_t.mask)).bit_count()

    @property
    def b2(self) -> int:
        return (self.side_s.mask & self.side_t.mask).bit_count()

    @property
    def b3(self) -> int:
        return len(self.fixed)


def classify_sets(fam: Family, partition: Partition | None = None) -> BadSetAnalysis:
    """Split a simply rooted family into bad and good members."""
    if not is_simply_rooted(fam):
        raise DomainError("family is not simply rooted")
    if partition is None:
        partition = partition_search(fam)
    n = fam.n
    rooted = bitops.rooted_masks(n, fam.mask)
    empty_bit = fam.mask & 1
    side_s = _rooted_or(n, rooted, partition.s_elements) | empty_bit
    side_t = _rooted_or(n, rooted, partition.t_elements) | empty_bit
    fs = full_shadow_mask(fam)
    _, trace = full_down(fam)
    fixed = trace.fixed_mask()
    bad = fs | fixed
    return BadSetAnalysis(
        family=fam,
        partition=partition,
        side_s=Family(n, side_s),
        side_t=Family(n, side_t),
        full_shadow=Family(n, fs),
        fixed=Family(n, fixed),
        bad=Family(n, bad),
        good=Family(n, fam.mask & ~bad),
        y=Family(n, fs & fixed),
        trace=trace,
    )


def y_family(fam: Family) -> Family:
    """Members that are both full-shadow and fixed by the downward sweep."""
    fs = full_shadow_mask(fam)
    _, trace = full_down(fam)
    return Family(fam.n, fs & trace.fixed_mask())


def z_family(fam: Family, side_s: Family, side_t: Family) -> Family:
    """Members of both sides whose three sweep images are pairwise distinct."""
    if side_s.mask | side_t.mask != fam.mask:
        raise DomainError("sides do not cover the family")
    if (side_s.mask | side_t.mask) & ~fam.mask:
        raise DomainError("sides contain non-members")
    _, tr = full_down(fam)
    _, tr_s = full_down(side_s)
    _, tr_t = full_down(side_t)
    out = 0
    for s in bitops.iter_bits(side_s.mask & side_t.mask):
        i0, i1, i2 = tr.image(s), tr_s.image(s), tr_t.image(s)
        if i0 != i1 and i0 != i2 and i1 != i2:
            out |= 1 << s
    return Family(fam.n, out)


def stability_bound(fam: Family, variant: Literal["twelfth", "eighth"]) -> tuple[Fraction, bool]:
    """Bound ||F|| <= ||I(m)|| + m - m^2(1 - p^2)/(c 2^n), c = 12 or 8.

    p is the exact peak rooted fraction, so m^2(1 - p^2) = m^2 - q^2 with q
    the peak rooted count.  Returns (bound, holds).
    """
    if variant == "twelfth":
        c = 12
    elif variant == "eighth":
        c = 8
    else:
        raise DomainError(f"unknown variant {variant!r}")
    if not is_simply_rooted(fam):
        raise DomainError("family is not simply rooted")
    st = stats(fam)
    m = st.m
    q = st.max_rooted_count
    bound = colex_total_size(m) + m - Fraction(m * m - q * q, c * (1 << fam.n))
    return bound, Fraction(fam.total_size()) <= bound


@dataclass(frozen=True)
class InequalityCheck:
    """One exact inequality instance: passes iff lhs <= rhs (== when equality)."""

    name: str
    lhs: Fraction | int
    rhs: Fraction | int
    equality: bool = False

    @property
    def slack(self) -> Fraction | int:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs if self.equality else self.lhs <= self.rhs


def bad_set_lower_bounds(fam: Family, partition: Partition | None = None) -> list[InequalityCheck]:
    """Every bad-set counting inequality, evaluated exactly on one family.

    Uses the empty-set-adjusted sides F1, F2 (see module docstring); |F1||F2|
    ratios carry the 2^-n factor as exact Fractions.
    """
    ana = classify_sets(fam, partition)
    n = fam.n
    cells = 1 << n
    f1, f2 = ana.side_s, ana.side_t
    d1, _ = full_down(f1)
    d2, _ = full_down(f2)
    inter_d = (d1.mask & d2.mask).bit_count()
    inter = (f1.mask & f2.mask).bit_count()
    zcount = len(z_family(fam, f1, f2))
    ycount = len(ana.y)
    b, b1, b2, b3 = ana.b, ana.b1, ana.b2, ana.b3
    product = Fraction(len(f1) * len(f2), cells)
    m = len(fam)
    rows = [
        InequalityCheck("harris", Fraction(len(d1) * len(d2), cells), inter_d),
        InequalityCheck("split_rooted", inter_d, b + inter),
        InequalityCheck("lower_b", product, b + inter),
        InequalityCheck("many_bad", product, b1 + 2 * b2 + b3),
        InequalityCheck("split_rooted_2", inter_d, b + zcount),
        InequalityCheck("many_bad_2", product, b1 + b2 + b3 + zcount - ycount),
        InequalityCheck("y_ge_z", zcount, ycount),
        InequalityCheck("refinement", product, b1 + b2 + b3),
        InequalityCheck("bad_count_identity", b, b1 + b2 + b3 - ycount, equality=True),
        InequalityCheck(
            "bad_half_bridge",
            Fraction(fam.total_size()),
            colex_total_size(m) + m - Fraction(b, 2),
        ),
    ]
    return rows
