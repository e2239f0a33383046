"""Word-parallel primitives over characteristic vectors of set families.

A family over ground set {1..n} is held in a single Python int: bit s is set
iff the member set encoded by s belongs to the family, where a set's encoding
has bit i-1 set iff the set contains element i.  With that layout the basic
structural moves (one compression direction, "union with a fixed element",
subset-containment sweeps) each cost O(1) or O(n) big-integer operations no
matter how many sets the family holds.

Cell index arithmetic: the cell of B - {i} sits exactly 2^(i-1) positions
below the cell of B, so moving every set containing i down one direction is
a shift of the whole vector by 2^(i-1) bits.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

MAX_GROUND = 24


@lru_cache(maxsize=None)
def universe(n: int) -> int:
    """All-ones vector over the 2^n cells of the power set."""
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def axis(n: int, i: int) -> int:
    """Cells whose set contains element i (1 <= i <= n)."""
    block = 1 << (i - 1)
    pat = ((1 << block) - 1) << block  # one 2^i wide period: low half 0, high half 1
    width = 2 * block
    size = 1 << n
    while width < size:
        pat |= pat << width
        width *= 2
    return pat


def iter_bits(x: int) -> Iterator[int]:
    """Positions of set bits, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def down_step(n: int, mask: int, i: int) -> int:
    """Compress direction i downward: each B with i removes i unless B-{i} is occupied."""
    ax = axis(n, i)
    block = 1 << (i - 1)
    lo = mask & ~ax
    hi = mask & ax
    kept = hi & ((lo << block) & ax)  # B-{i} already present: B stays
    return lo | kept | ((hi ^ kept) >> block)


def up_step(n: int, mask: int, i: int) -> int:
    """Compress direction i upward: each B without i gains i unless B+{i} is occupied."""
    ax = axis(n, i)
    block = 1 << (i - 1)
    lo = mask & ~ax
    hi = mask & ax
    kept = lo & ((hi >> block) & ~ax)  # B+{i} already present: B stays
    return hi | kept | ((lo ^ kept) << block)


def down_fallers(n: int, mask: int, i: int) -> int:
    """Cells of mask that move under down_step(n, mask, i), at their pre-move position."""
    ax = axis(n, i)
    block = 1 << (i - 1)
    hi = mask & ax
    return hi & ~((mask & ~ax) << block)


def up_fallers(n: int, mask: int, i: int) -> int:
    """Cells of mask that move under up_step(n, mask, i), at their pre-move position."""
    ax = axis(n, i)
    block = 1 << (i - 1)
    lo = mask & ~ax
    return lo & ~((mask & ax) >> block)


def or_with_element(n: int, mask: int, i: int) -> int:
    """Image of the family under B |-> B + {i}."""
    ax = axis(n, i)
    block = 1 << (i - 1)
    return (mask & ax) | ((mask & ~ax) << block)


def union_image(n: int, mask: int, s: int) -> int:
    """Image of the family under B |-> B union S, for the set encoded by s."""
    out = mask
    for b in iter_bits(s):
        out = or_with_element(n, out, b + 1)
    return out


def subset_and(n: int, mask: int, skip: int = 0) -> int:
    """Vector g with g(B) = 1 iff every A <= B (agreeing with B on `skip`) is in mask.

    With skip = 0 this marks the sets whose entire power set lies in the
    family.  Passing a one-element encoding as `skip` fixes that element, so
    the sweep ranges over the sub-lattice {A : B - skip <= ... <= B}.
    """
    g = mask
    for i in range(1, n + 1):
        if (skip >> (i - 1)) & 1:
            continue
        ax = axis(n, i)
        block = 1 << (i - 1)
        g &= ~ax | (g << block)
    return g


def rooted_mask(n: int, mask: int, b: int) -> int:
    """Cells B with b in B and the whole interval [{b}, B] inside the family."""
    return subset_and(n, mask, 1 << (b - 1)) & axis(n, b)


def rooted_masks(n: int, mask: int) -> list[int]:
    """rooted_mask for every b = 1..n (index b-1 in the result)."""
    return [rooted_mask(n, mask, b) for b in range(1, n + 1)]


def swap_elements(n: int, mask: int, a: int, b: int) -> int:
    """Relabel the family by transposing ground elements a and b."""
    if a == b:
        return mask
    ax_a, ax_b = axis(n, a), axis(n, b)
    shift = abs((1 << (b - 1)) - (1 << (a - 1)))
    only_a = mask & ax_a & ~ax_b
    only_b = mask & ax_b & ~ax_a
    rest = mask ^ only_a ^ only_b
    if b > a:
        return rest | (only_a << shift) | (only_b >> shift)
    return rest | (only_a >> shift) | (only_b << shift)


def permute_cell(s: int, perm: tuple[int, ...]) -> int:
    """Re-encode one set under the permutation perm (perm[i-1] = image of element i)."""
    out = 0
    for b in iter_bits(s):
        out |= 1 << (perm[b] - 1)
    return out
