"""Enumeration and sampling of union-closed and simply rooted families.

Exhaustive mode walks every subset of the power set (so it is capped at
n <= 4) and keeps the union-closed ones; the simply rooted stream is the
complement of each.  Random mode draws a handful of uniform seed sets and
closes them under unions.

Randomness is a fixed splitmix64 stream.  Sample i of a run is generated
from substream(seed, i), never from generator state shared across samples,
so any slice of the sample range can be produced independently: parallel
and serial runs agree bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from functools import lru_cache
from typing import Iterator, Literal

from . import bitops
from .core import Family, complement, is_union_closed
from .errors import CapacityError, DomainError

__all__ = [
    "EnumerationPlan",
    "SplitMix64",
    "canonicalize",
    "enumerate_simply_rooted",
    "enumerate_union_closed",
    "extremal_search",
    "random_union_closed",
    "substream",
    "union_closure",
]

EXHAUSTIVE_GROUND_LIMIT = 4
RANDOM_GROUND_LIMIT = 16
CANONICAL_GROUND_LIMIT = 8
REJECTION_LIMIT = 1 << 20

_M64 = (1 << 64) - 1


def _mix64(z: int) -> int:
    """splitmix64 finalizer: the bijective scrambler on 64-bit words."""
    z &= _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator (splitmix64), identical on every platform."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _M64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _M64
        return _mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        if bound <= 0:
            raise DomainError("bound must be positive")
        limit = (_M64 + 1) - ((_M64 + 1) % bound)
        while True:
            v = self.next64()
            if v < limit:
                return v % bound


def substream(seed: int, index: int) -> SplitMix64:
    """Independent generator for sample `index` of a run seeded with `seed`."""
    return SplitMix64(_mix64(seed) ^ _mix64(index ^ 0xA5A5A5A5A5A5A5A5))


def union_closure(n: int, cells: list[int]) -> int:
    """Characteristic vector of the union closure of the given set encodings."""
    mask = 0
    queue = list(cells)
    while queue:
        s = queue.pop()
        if (mask >> s) & 1:
            continue
        img = bitops.union_image(n, mask, s) | (1 << s)
        new = img & ~mask
        mask |= new
        queue.extend(bitops.iter_bits(new))
    return mask


def random_union_closed(n: int, seed_sets: int, seed: int) -> Family:
    """Union closure of seed_sets uniform subsets of {1..n}, deterministic in seed."""
    if n > RANDOM_GROUND_LIMIT:
        raise CapacityError(f"random sampling capped at n <= {RANDOM_GROUND_LIMIT}")
    rng = SplitMix64(seed)
    full = (1 << n) - 1
    cells = [rng.next64() & full for _ in range(seed_sets)]
    return Family(n, union_closure(n, cells))


def _root_repair(n: int, cells: list[int], rng: SplitMix64) -> int:
    """Grow the cells into a simply rooted family by patching rootless members.

    While some nonempty member lacks a root, take the least such cell, pick
    one of its elements at random, and add the whole interval from that
    singleton up to the member.  Added cells are rooted by construction, so
    this stops after at most len(cells) patches.
    """
    mask = 0
    for s in cells:
        mask |= 1 << s
    while True:
        anyroot = 0
        for b in range(1, n + 1):
            anyroot |= bitops.rooted_mask(n, mask, b)
        rootless = mask & ~anyroot & ~1
        if not rootless:
            return mask
        s = (rootless & -rootless).bit_length() - 1
        elems = list(bitops.iter_bits(s))
        b = elems[rng.below(len(elems))]
        cube = 1 << (1 << b)  # cell of the singleton {b+1}
        for other in elems:
            if other != b:
                cube |= cube << (1 << other)
        mask |= cube


def _random_sample(n: int, rng: SplitMix64) -> Family:
    """One random union-closed family; two regimes for size diversity.

    Closures of uniform seed sets stay small, so their simply rooted
    complements are always large.  The second regime builds a simply rooted
    family directly (cube repair) and returns its complement, covering the
    other end of the size range.
    """
    full = (1 << n) - 1
    if n == 0:
        return Family(0, rng.below(2))
    regime = rng.below(2)
    k = rng.below(2 * n + 2)
    cells = [rng.next64() & full for _ in range(k)]
    if regime == 0:
        return Family(n, union_closure(n, cells))
    rooted = _root_repair(n, cells, rng)
    return Family(n, rooted ^ bitops.universe(n))


@dataclass(frozen=True)
class EnumerationPlan:
    """What to enumerate: exhaustive small-n stream or seeded random samples."""

    n: int
    mode: Literal["exhaustive", "random"] = "exhaustive"
    sample_count: int = 0
    seed: int = 0
    size: int | None = None  # keep only families with exactly this many members
    contains_empty: bool | None = None  # keep only families with(out) the empty set

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and self.n > EXHAUSTIVE_GROUND_LIMIT:
            raise CapacityError(
                f"exhaustive enumeration capped at n <= {EXHAUSTIVE_GROUND_LIMIT}"
            )
        if self.mode == "random" and self.n > RANDOM_GROUND_LIMIT:
            raise CapacityError(f"random sampling capped at n <= {RANDOM_GROUND_LIMIT}")

    def admits(self, fam: Family) -> bool:
        if self.size is not None and len(fam) != self.size:
            return False
        if self.contains_empty is not None and (0 in fam) != self.contains_empty:
            return False
        return True


@lru_cache(maxsize=8)
def _union_closed_masks(n: int) -> tuple[int, ...]:
    out = []
    for mask in range(bitops.universe(n) + 1):
        if is_union_closed(Family(n, mask)):
            out.append(mask)
    return tuple(out)


def enumerate_union_closed(plan: EnumerationPlan) -> Iterator[Family]:
    """Stream union-closed families according to the plan."""
    if plan.mode == "exhaustive":
        for mask in _union_closed_masks(plan.n):
            fam = Family(plan.n, mask)
            if plan.admits(fam):
                yield fam
        return
    for index in range(plan.sample_count):
        yield indexed_sample(plan, index)


def indexed_sample(plan: EnumerationPlan, index: int) -> Family:
    """Sample `index` of a random plan; pure function of (plan, index).

    Index addressing is what makes sharded parallel runs reproducible: shard
    boundaries never shift the stream, because position i depends on nothing
    but (seed, i).
    """
    for attempt in range(REJECTION_LIMIT):
        fam = _random_sample(plan.n, substream(plan.seed, (index << 20) | attempt))
        if plan.admits(fam):
            return fam
    raise CapacityError(f"no admissible family after {REJECTION_LIMIT} draws")


def indexed_rooted_sample(plan: EnumerationPlan, index: int) -> Family:
    """Sample `index` of the simply rooted random stream.

    Only unconstrained plans are index-addressable: admission filters would
    make stream positions depend on earlier draws.
    """
    if plan.size is not None or plan.contains_empty is not None:
        raise DomainError("indexed access needs an unconstrained plan")
    return complement(indexed_sample(plan, index))


def enumerate_simply_rooted(plan: EnumerationPlan) -> Iterator[Family]:
    """Stream simply rooted families: complements of the union-closed stream.

    Plan constraints apply to the simply rooted family being yielded.
    """
    inner = EnumerationPlan(plan.n, plan.mode, plan.sample_count, plan.seed)
    for fam in enumerate_union_closed(inner):
        rooted = complement(fam)
        if plan.admits(rooted):
            yield rooted


def canonicalize(fam: Family) -> Family:
    """Least relabeling of the family under ground-set permutations (n <= 8)."""
    if fam.n > CANONICAL_GROUND_LIMIT:
        raise CapacityError(f"canonical forms capped at n <= {CANONICAL_GROUND_LIMIT}")
    cells = list(fam)
    best = fam.mask
    for perm in permutations(range(1, fam.n + 1)):
        mask = 0
        for s in cells:
            mask |= 1 << bitops.permute_cell(s, perm)
        if mask < best:
            best = mask
    return Family(fam.n, best)


def extremal_search(n: int, m: int) -> tuple[int, list[Family]]:
    """Least total size over union-closed families of m sets in {1..n}.

    Returns the minimum and the canonical forms of every minimizer class.
    """
    if n > EXHAUSTIVE_GROUND_LIMIT:
        raise CapacityError(f"extremal search capped at n <= {EXHAUSTIVE_GROUND_LIMIT}")
    if not 0 <= m <= (1 << n):
        raise DomainError(f"no family of {m} sets in a {n}-cube")
    best: int | None = None
    minimizers: list[Family] = []
    for mask in _union_closed_masks(n):
        fam = Family(n, mask)
        if len(fam) != m:
            continue
        total = fam.total_size()
        if best is None or total < best:
            best, minimizers = total, [fam]
        elif total == best:
            minimizers.append(fam)
    if best is None:
        raise DomainError(f"no union-closed family of {m} sets in a {n}-cube")
    classes = sorted({canonicalize(f).mask for f in minimizers})
    return best, [Family(n, mask) for mask in classes]
