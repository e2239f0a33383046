"""Check catalog, suite runner, and the constant-derivation chain."""
from fractions import Fraction

import pytest

from ucfam import DomainError, Family
from ucfam.enumeration import EnumerationPlan
from ucfam.verify import (
    CATALOG_IDS,
    PROBE_IDS,
    CheckDescriptor,
    ConstantChain,
    catalog,
    check_few_with_root,
    derive_constants,
    document_json,
    excluded_fraction,
    fixpoint_constants,
    margin_from_root,
    render_table,
    run_suite,
    suite_document,
    threshold_coefficients,
)

EXHAUSTIVE_2 = EnumerationPlan(n=2, mode="exhaustive")
EXHAUSTIVE_4 = EnumerationPlan(n=4, mode="exhaustive")


# ---------------------------------------------------------------------------
# catalog shape


def test_catalog_ids_frozen():
    assert len(CATALOG_IDS) == 30
    assert len(PROBE_IDS) == 3
    assert len(set(CATALOG_IDS + PROBE_IDS)) == 33
    assert PROBE_IDS == (
        "probe_degree_bound",
        "probe_max_rooted_bound",
        "probe_eps_delta_bound",
    )


def test_catalog_descriptor_fields():
    entries = catalog(EXHAUSTIVE_2)
    assert [d.id for d in entries] == list(CATALOG_IDS + PROBE_IDS)
    for d in entries:
        assert d.statement_ref
        assert d.applicability in ("simply-rooted", "any-family", "numeric")
        assert d.conjecture == (d.id in PROBE_IDS)
    # family-scope entries carry the plan; with no plan nothing does
    assert any(d.population == EXHAUSTIVE_2 for d in entries)
    assert all(d.population is None for d in catalog())


# ---------------------------------------------------------------------------
# suite runner


def test_exhaustive_n2_all_pass():
    reports = run_suite(catalog(EXHAUSTIVE_2))
    assert [r.id for r in reports] == list(CATALOG_IDS + PROBE_IDS)
    for r in reports:
        assert r.status == "pass", r.id
        assert r.violations_seen == 0
    by_id = {r.id: r for r in reports}
    # 14 union-closed families over n=2, hence 14 simply rooted complements
    assert by_id["eq1_duality"].instances_tested == 14
    assert by_id["thm_stability_8"].instances_tested == 14


def test_no_plan_skips_family_checks():
    reports = run_suite(catalog())
    by_id = {r.id: r for r in reports}
    assert by_id["thm_stability_8"].status == "skipped"
    assert by_id["thm_stability_8"].instances_tested == 0
    # the numeric sweeps run regardless of a family population
    assert by_id["lemma_colex_total"].status == "pass"
    assert by_id["lemma_colex_total"].instances_tested > 0


def test_empty_random_plan_skips():
    plan = EnumerationPlan(n=5, mode="random", sample_count=0, seed=1)
    reports = run_suite([d for d in catalog(plan) if d.id == "thm_stability_8"])
    assert reports[0].status == "skipped"


def test_mixed_population_plans_rejected():
    a = catalog(EXHAUSTIVE_2)
    b = catalog(EnumerationPlan(n=3, mode="exhaustive"))
    mixed = [d for d in a if d.id == "eq1_duality"] + [
        d for d in b if d.id == "thm_stability_8"
    ]
    with pytest.raises(DomainError):
        run_suite(mixed)


def test_parallel_runs_byte_identical():
    plan = EnumerationPlan(n=5, mode="random", sample_count=2500, seed=11)
    selected = list(CATALOG_IDS + PROBE_IDS)
    docs = []
    for workers in (1, 2):
        reports = run_suite(catalog(plan), parallelism=workers)
        docs.append(document_json(suite_document(plan, reports, selected)))
    assert docs[0] == docs[1]


def test_probe_refutation_at_n4():
    reports = run_suite(catalog(EXHAUSTIVE_4))
    by_id = {r.id: r for r in reports}
    for r in reports:
        if not r.conjecture:
            assert r.status == "pass", r.id

    probe = by_id["probe_max_rooted_bound"]
    assert probe.status == "fail"
    assert probe.conjecture
    assert probe.instances_tested == 4960
    # the peak-rooted-count bound first breaks here: 24 labeled witnesses,
    # each exceeding the bound by exactly one
    assert probe.violations_seen == 24
    assert len(probe.violations) == 24
    assert all(v.lhs == v.rhs + 1 for v in probe.violations)
    assert sorted({(v.lhs, v.rhs) for v in probe.violations}) == [(14, 13), (20, 19)]

    # the max-degree form of the bound survives every family at this size
    assert by_id["probe_degree_bound"].status == "pass"
    assert by_id["probe_eps_delta_bound"].status == "pass"


def test_report_json_shape():
    reports = run_suite(catalog(EXHAUSTIVE_2))
    doc = suite_document(EXHAUSTIVE_2, reports, None)
    assert set(doc) == {"run_config", "seed", "checks", "conjecture_probes"}
    assert doc["run_config"] == {
        "n": 2,
        "mode": "exhaustive",
        "samples": 0,
        "checks": None,
    }
    assert len(doc["checks"]) == 30
    assert len(doc["conjecture_probes"]) == 3
    for row in doc["checks"] + doc["conjecture_probes"]:
        assert set(row) == {
            "id",
            "instances_tested",
            "violations",
            "violations_seen",
            "status",
            "details",
            "conjecture",
        }
        assert "wall_time" not in row  # timings would break replay comparisons
    text = document_json(doc)
    assert text.endswith("\n")
    assert document_json(doc) == text


def test_render_table_layout():
    reports = run_suite(catalog(EXHAUSTIVE_2))
    table = render_table(reports)
    lines = table.splitlines()
    assert lines[0].split() == ["check", "status", "instances", "violations", "seconds"]
    assert set(lines[1]) <= {"-", " "}
    assert "conjecture probes:" in lines
    rule = lines.index("conjecture probes:")
    assert len(lines) == rule + 1 + len(PROBE_IDS)


# ---------------------------------------------------------------------------
# the standalone accounting check


def test_check_few_with_root_examples():
    assert check_few_with_root(Family(3, (1 << 8) - 2))  # P(3) minus the empty set
    assert check_few_with_root(Family(0, 1))
    with pytest.raises(DomainError):
        check_few_with_root(Family(2, 0b1000))  # {{1,2}} is not simply rooted


# ---------------------------------------------------------------------------
# constant chain


def test_threshold_coefficients_default():
    assert threshold_coefficients(ConstantChain()) == (
        Fraction(9),
        Fraction(36),
        Fraction(1),
    )


def test_excluded_fraction_brackets_the_root():
    chain = ConstantChain()
    assert excluded_fraction(chain, Fraction(1, 37))
    assert not excluded_fraction(chain, Fraction(1, 36))


def test_margin_from_root_value():
    assert margin_from_root(Fraction(1, 37)) == Fraction(2, 327)


def test_derive_constants_default_chain():
    chain = derive_constants(ConstantChain())
    assert Fraction(1, 37) <= chain.c1 < Fraction(1, 36)
    # the certified c1 still sits on the excluded side of the quadratic
    assert excluded_fraction(chain, chain.c1)
    assert chain.c2 == margin_from_root(chain.c1)
    assert chain.c2 >= Fraction(2, 327)


def test_fixpoint_tightens_constants():
    chain = fixpoint_constants(3, 8)
    assert chain.c1 >= Fraction(1, 24)
    assert chain.c2 >= Fraction(1, 104)
    assert excluded_fraction(chain, chain.c1)
    # feedback strictly improves on the single-pass derivation
    single = derive_constants(ConstantChain(3, 8))
    assert chain.c1 > single.c1


def test_chain_validation():
    with pytest.raises(DomainError):
        ConstantChain(split_factor=0)
    with pytest.raises(DomainError):
        ConstantChain(stability_constant=7)
    with pytest.raises(DomainError):
        ConstantChain(alpha=Fraction(3, 4))
    with pytest.raises(DomainError):
        ConstantChain(alpha=Fraction(1, 3))
