import pytest

from minkmat import MinkowskiMatroid, gf
from minkmat.field import RATIONALS
from minkmat.matroid import rank_mutation
from minkmat.suite import CHECKS, GenConfig, parse_field, random_tuple, replay, run_suite


def test_deterministic_stream():
    cfg = GenConfig(field=gf(2), ambient_dim=2, n=3, seed=1)
    a, b = random_tuple(cfg, 0), random_tuple(cfg, 0)
    assert a == b
    assert random_tuple(cfg, 0) != random_tuple(cfg, 1) or random_tuple(cfg, 2) != a


def test_zero_generators_gives_loops():
    cfg = GenConfig(field=gf(3), ambient_dim=3, n=4, max_generators_per_subspace=0, seed=5)
    for i in range(5):
        t = random_tuple(cfg, i)
        assert MinkowskiMatroid(t).loops() == tuple(range(len(t)))


def test_stream_is_not_trivial():
    cfg = GenConfig(field=gf(3), ambient_dim=4, n=5, seed=7)
    kinds = set()
    for i in range(100):
        t = random_tuple(cfg, i)
        kinds.add(MinkowskiMatroid(t).is_independent_mask(t.full_mask))
    assert kinds == {True, False}


def test_rational_entries_small():
    cfg = GenConfig(field=RATIONALS, ambient_dim=3, n=3, seed=2)
    t = random_tuple(cfg, 0)
    assert t.field == RATIONALS


def test_bad_config():
    with pytest.raises(ValueError):
        GenConfig(ambient_dim=2, min_ambient_dim=3)
    with pytest.raises(ValueError):
        GenConfig(cases=-1)


def test_parse_field():
    assert parse_field("gf2") == gf(2) and parse_field("GF 5") == gf(5)
    assert parse_field("Q") == RATIONALS
    with pytest.raises(ValueError):
        parse_field("gf4")
    with pytest.raises(ValueError):
        parse_field("reals")


def test_zero_cases():
    r = run_suite(GenConfig(cases=0))
    assert r.total_cases == 0 and r.ok
    assert all(s.run == s.skipped == s.failed == 0 for s in r.checks.values())


def test_clean_run_and_skip_accounting():
    r = run_suite(GenConfig(field=gf(2), ambient_dim=4, n=5, seed=3, cases=60))
    assert r.ok, r.render()
    for s in r.checks.values():
        assert s.run + s.skipped == r.total_cases
    assert set(r.checks) == set(CHECKS)
    assert "PASS" in r.render()


def test_unknown_check():
    with pytest.raises(KeyError):
        run_suite(GenConfig(cases=1), ["no_such_check"])


def test_mutation_caught_and_replayable():
    with rank_mutation():
        r = run_suite(GenConfig(seed=4, cases=10), ["rank_function", "circuit_defect"])
        stats = r.checks["rank_function"]
        assert stats.failed > 0 and stats.counterexample.startswith("# check: rank_function")
        assert replay("rank_function", stats.counterexample) is not None
    assert replay("rank_function", stats.counterexample) is None
    assert not r.ok and r.to_dict()["failures"] == r.failures
