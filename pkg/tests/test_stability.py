"""Bad/good classification, deficiency, partitions, Y/Z, and the two bounds."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import members, rooted_families, simply_rooted_at, subsets
from ucfam import (
    DomainError,
    Family,
    bad_set_lower_bounds,
    classify_sets,
    colex_total_size,
    decode_set,
    deficiency,
    deficiency_tight_family,
    encode_set,
    full_down,
    is_downset,
    is_simply_rooted,
    largest_downset,
    partition_search,
    rooted_subfamily,
    roots,
    stability_bound,
    stats,
    y_family,
    z_family,
)


def oracle_deficiency(fam: Family) -> int:
    sets = members(fam)
    out = 0
    for b in sets:
        out += sum(1 for e in b if b - {e} not in sets)
    return out


def shifted_segment(n: int, m: int) -> Family:
    """The m smallest colex cells, each with element n adjoined."""
    top = 1 << (n - 1)
    return Family.from_cells(n, (c | top for c in range(m)))


# --- deficiency -----------------------------------------------------------------


def test_deficiency_examples():
    assert deficiency(Family.powerset(3)) == 0
    assert deficiency(Family.from_sets(2, [[1, 2]])) == 2
    assert deficiency(Family.from_sets(2, [[1], [2], [1, 2]])) == 2


@given(rooted_families(max_n=5))
def test_deficiency_matches_oracle(fam):
    assert deficiency(fam) == oracle_deficiency(fam)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_deficiency_counts_missing_shadows_exhaustive(n):
    for mask in range(1 << (1 << n)):
        fam = Family(n, mask)
        assert deficiency(fam) == oracle_deficiency(fam)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rooted_deficiency_is_m_minus_full_shadow(n):
    # simply rooted members miss at most one shadow set each
    for fam in simply_rooted_at(n):
        full = sum(
            1
            for b in members(fam)
            if all(b - {e} in members(fam) for e in b)
        )
        assert oracle_deficiency(fam) == len(fam) - full


def test_deficiency_tight_families():
    for m in range(1, 17):
        for k in range(4):
            fam = deficiency_tight_family(m, k)
            assert len(fam) == m
            assert deficiency(fam) == k * m
            # gluing k fresh elements adds exactly k per member
            assert fam.total_size() == colex_total_size(m) + k * m
            if k <= 1:
                assert is_simply_rooted(fam)


# --- largest down-set ------------------------------------------------------------


def test_largest_downset_examples():
    assert largest_downset(Family.from_sets(2, [[1], [1, 2]])).mask == 0
    got = largest_downset(Family.from_sets(2, [[], [1], [1, 2]]))
    assert members(got) == {frozenset(), frozenset([1])}


@given(rooted_families(max_n=6))
def test_largest_downset_is_the_maximum_downset(fam):
    core = largest_downset(fam)
    assert is_downset(core)
    assert core.mask & ~fam.mask == 0
    # no member outside the core has its whole power set inside fam
    for s in fam:
        if s not in core:
            assert any(
                frozenset(x) not in members(fam)
                for x in subsets(frozenset(decode_set(s)))
            )


# --- bad/good classification ------------------------------------------------------


def test_classify_p2_without_empty():
    fam = Family.from_sets(2, [[1], [2], [1, 2]])
    ana = classify_sets(fam)
    assert members(ana.bad) == {frozenset([2]), frozenset([1, 2])}
    assert members(ana.good) == {frozenset([1])}
    assert ana.b == 2


def test_classify_shifted_segment_has_no_bad_sets():
    for m in range(1, 5):
        ana = classify_sets(shifted_segment(3, m))
        assert ana.b == 0


def test_classify_single_empty_set():
    ana = classify_sets(Family.from_sets(2, [[]]))
    assert members(ana.bad) == {frozenset()}
    assert ana.b == 1


def test_classify_rejects_non_rooted():
    with pytest.raises(DomainError):
        classify_sets(Family.from_sets(2, [[1, 2]]))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_classification_identities_exhaustive(n):
    for fam in simply_rooted_at(n):
        ana = classify_sets(fam)
        assert ana.bad.mask == ana.full_shadow.mask | ana.fixed.mask
        assert ana.good.mask == fam.mask & ~ana.bad.mask
        assert ana.y.mask == ana.full_shadow.mask & ana.fixed.mask
        assert ana.b == ana.b1 + ana.b2 + ana.b3 - len(ana.y)
        if 0 in fam:
            assert 0 in ana.bad


# --- partition search ---------------------------------------------------------------


def test_partition_p2_example():
    fam = Family.from_sets(2, [[1], [2], [1, 2]])
    part = partition_search(fam)
    st = stats(fam)
    assert st.p == Fraction(2, 3)
    a = len(rooted_subfamily(fam, part.s_elements))
    b = len(rooted_subfamily(fam, part.t_elements))
    assert Fraction(a * b) >= Fraction(9, 4) * (1 - st.p**2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_partition_certificate_exhaustive(n):
    for fam in simply_rooted_at(n):
        if not len(fam):
            continue
        part = partition_search(fam)
        assert part.s_elements & part.t_elements == 0
        assert part.s_elements | part.t_elements == (1 << n) - 1
        m0 = len(fam) - (1 if 0 in fam else 0)
        q = stats(fam).max_rooted_count
        a = len(rooted_subfamily(fam, part.s_elements))
        b = len(rooted_subfamily(fam, part.t_elements))
        assert 4 * a * b >= m0 * m0 - q * q


# --- Y and Z families ----------------------------------------------------------------


def test_y_family_examples():
    assert y_family(Family.powerset(2)) == Family.powerset(2)
    assert y_family(Family.from_sets(2, [[1], [2], [1, 2]])).mask == 0
    assert y_family(Family.from_sets(2, [[]])) == Family.from_sets(2, [[]])


def test_z_family_examples():
    fam = Family.from_sets(2, [[1], [2], [1, 2]])
    assert z_family(fam, fam, fam).mask == 0
    f1 = rooted_subfamily(fam, encode_set([1]))
    f2 = rooted_subfamily(fam, encode_set([2]))
    assert z_family(fam, f1, f2).mask == 0
    with pytest.raises(DomainError):
        z_family(fam, f1, f1)  # sides do not cover


@pytest.mark.parametrize("n", [1, 2, 3])
def test_z_members_have_two_roots_exhaustive(n):
    for fam in simply_rooted_at(n):
        if not len(fam):
            continue
        ana = classify_sets(fam)
        z = z_family(fam, ana.side_s, ana.side_t)
        _, trace = full_down(fam)
        for s in z:
            r = roots(fam, s).bit_count()
            assert r >= 2
            if trace.image(s) != s:
                assert r >= 3


# --- stability bounds ------------------------------------------------------------------


def test_stability_bound_peak_rooted_is_eq2():
    # all-rooted-at-n families meet the plain size bound with equality
    for m in range(1, 9):
        fam = shifted_segment(4, m)
        st = stats(fam)
        assert st.max_rooted_count == m
        assert fam.total_size() == colex_total_size(m) + m
        for variant in ("twelfth", "eighth"):
            bound, holds = stability_bound(fam, variant)
            assert holds and bound == colex_total_size(m) + m


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("variant", ["twelfth", "eighth"])
def test_stability_bound_exhaustive(n, variant):
    for fam in simply_rooted_at(n):
        bound, holds = stability_bound(fam, variant)
        assert holds


def test_stability_bound_rejects():
    with pytest.raises(DomainError):
        stability_bound(Family.from_sets(2, [[1, 2]]), "twelfth")
    with pytest.raises(DomainError):
        stability_bound(Family.powerset(2), "sixth")


# --- the inequality table ----------------------------------------------------------------


EXPECTED_ROWS = [
    "harris",
    "split_rooted",
    "lower_b",
    "many_bad",
    "split_rooted_2",
    "many_bad_2",
    "y_ge_z",
    "refinement",
    "bad_count_identity",
    "bad_half_bridge",
]


def test_lower_bound_rows_all_pass_exhaustive():
    for n in range(4):
        for fam in simply_rooted_at(n):
            if not len(fam):
                continue
            rows = bad_set_lower_bounds(fam)
            assert [r.name for r in rows] == EXPECTED_ROWS
            for row in rows:
                assert row.passed, (fam, row)
                assert row.slack == row.rhs - row.lhs


@settings(max_examples=250)
@given(rooted_families(min_n=1, max_n=6))
def test_bad_half_bridge_property(fam):
    # total size stays under the colex bound minus half the bad count
    if not len(fam):
        return
    rows = {r.name: r for r in bad_set_lower_bounds(fam)}
    bridge = rows["bad_half_bridge"]
    assert bridge.passed
    ana = classify_sets(fam)
    assert bridge.rhs == colex_total_size(len(fam)) + len(fam) - Fraction(ana.b, 2)
