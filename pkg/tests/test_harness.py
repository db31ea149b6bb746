import pytest

from stabgraph.harness import (
    CLAIMS,
    SELF_TEST_CLAIM,
    constructive_roundtrip,
    run_claim,
    theorem_harness,
)


def test_all_claims_pass_at_n5():
    report = theorem_harness(max_n=5)
    failed = [c for c in report.claims if not c.passed]
    assert not failed, failed
    assert report.all_passed
    assert all(c.instances > 0 for c in report.claims)


def test_claim_filtering():
    report = theorem_harness(max_n=4, claims=["konig", "tree-alpha-plus"])
    assert [c.name for c in report.claims] == ["konig", "tree-alpha-plus"]


def test_unknown_claim_rejected():
    with pytest.raises(ValueError):
        theorem_harness(max_n=4, claims=["nope"])


def test_self_test_negation_fails_with_counterexample():
    result = run_claim(SELF_TEST_CLAIM, max_n=4)
    assert not result.passed
    assert result.counterexample is not None
    assert "graph" in result.counterexample


def test_sampling_requires_sample_count():
    with pytest.raises(ValueError):
        theorem_harness(max_n=12)


def test_sampled_run_is_reproducible():
    a = theorem_harness(max_n=9, claims=["konig"], seed=3, sample=6)
    b = theorem_harness(max_n=9, claims=["konig"], seed=3, sample=6)
    assert a.claims[0] == b.claims[0]
    assert a.claims[0].instances > sum(1 for _ in range(0))


def test_constructive_roundtrip_small():
    result = constructive_roundtrip(trials=8, seed=5, max_vertices=16)
    assert result.passed and result.instances == 24


def test_claim_registry_names_are_kebab():
    for name in CLAIMS:
        assert name == name.lower() and " " not in name
