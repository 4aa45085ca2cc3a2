"""Acceptance gate: one test per criterion, each at its stated bound."""
import itertools
import random
import time

import pytest

from minkmat import MinkowskiMatroid, classify, gf, quotient_tuple
from minkmat.bk import bk_decomposition, bk_sublattice, realize_poset
from minkmat.cli import main
from minkmat.field import RATIONALS
from minkmat.matroid import _bits
from minkmat.polymatroid import dual_partition, flats
from minkmat.poset import Poset, birkhoff_poset, poset_iso_classes
from minkmat.suite import CHECKS, GenConfig, random_tuple
from minkmat.tuples import from_mask

import oracle
from conftest import LINES_IN_PLANE, LINES_IN_SPACE, LINE_PLANE_SPACE, make

TITLES = {
    1: "golden examples (lines in a plane, lines in 3-space, line + plane + space), exact, < 1 s",
    2: "theorem suite, 1000 cases each over GF(2), GF(3), GF(5), Q, 0 failures, < 5 min",
    3: "poset round trip for every class with <= 5 elements, < 30 s",
    4: "dual partition on >= 100 random tuples over GF(2) and GF(3), dim <= 4, < 1 min",
    5: "oracle cross-checks: witness vs defect scan, maximal essential two ways",
    6: "mutation self-test: rank off-by-one makes verify fail",
}


def test_criterion_1():
    start = time.perf_counter()
    t1 = make(LINES_IN_PLANE)
    m1 = MinkowskiMatroid(t1)
    assert m1.rank() == 2
    assert m1.circuits() == [(0, 1)] and t1.defect_mask(0b011) == -1
    assert m1.coloops() == (2,)
    assert m1.bases() == [(0, 2), (1, 2)] and all(t1.defect_mask(t1.mask(b)) == 0 for b in m1.bases())

    t2 = make(LINES_IN_SPACE)
    m2 = MinkowskiMatroid(t2)
    assert m2.basis_defect() == 1
    assert m2.max_bk_in_basis((0, 2)) == (0,) and m2.max_bk_in_basis((1, 2)) == (1,)
    assert m2.maximal_essential_subtuple() == (0, 1)
    q = quotient_tuple(t2, (0, 1))
    assert q.dims == (2,) and MinkowskiMatroid(q).is_independent((0,))

    t3 = make(LINE_PLANE_SPACE)
    dec = bk_decomposition(t3)
    assert sorted(dec.blocks.values()) == [(0,), (1, 2)]
    assert dec.poset.is_isomorphic(Poset.chain(2))
    assert time.perf_counter() - start < 1.0


@pytest.mark.parametrize("field", ["gf2", "gf3", "gf5", "q"])
def test_criterion_2(field, capsys, tmp_path):
    # the four fields together must stay under 5 minutes; each gets a quarter
    for name in ("circuit_defect", "circuit_minus_element_bk", "basis_defect", "max_bk_in_bases",
                 "essential_iff_cyclic", "maximal_essential", "quotient_is_contraction",
                 "quotient_defect_identity", "bk_lattice", "dual_rank_equality", "poly_submodular"):
        assert name in CHECKS
    start = time.perf_counter()
    code = main(["verify", "--seed", "2024", "--cases", "1000", "--field", field, "--dim", "5", "--n", "6",
                 "--counterexample-dir", str(tmp_path)])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    assert code == 0, out
    assert "1000 cases" in out and out.rstrip().endswith("PASS")
    assert elapsed < 75.0


def test_criterion_3():
    start = time.perf_counter()
    total = 0
    for n in range(1, 6):
        classes = poset_iso_classes(n)
        total += len(classes)
        if n == 5:
            assert len(classes) == 63
        for P in classes:
            for field in (RATIONALS, gf(2)):
                back = birkhoff_poset(bk_sublattice(realize_poset(P, field)))
                assert back.is_isomorphic(P)
    assert total == 87
    assert time.perf_counter() - start < 30.0


def _partition_cases():
    for p in (2, 3):
        cfg = GenConfig(field=gf(p), ambient_dim=4, n=5, seed=99, cases=100)
        for i in range(cfg.cases):
            yield p, random_tuple(cfg, i)


def test_criterion_4():
    start = time.perf_counter()
    count = 0
    for p, t in _partition_cases():
        d = t.ambient_dim
        gens = [list(L.basis) for L in t.entries]
        flat_keys = set(oracle.flats(gens, len(t), p))
        part = dual_partition(t)
        seen = {}
        for key, pts in part.blocks.items():
            if pts:
                assert key in flat_keys
            for x in pts:
                assert x not in seen  # disjoint
                seen[x] = key
        assert len(seen) == p**d and part.unassigned == 0
        for x, key in seen.items():
            killed = tuple(i for i, g in enumerate(gens) if all(sum(a * b for a, b in zip(x, r)) % p == 0 for r in g))
            assert killed == key
            # constructible formula: x lies in <F>^perp exactly for the flats F inside its key
            for f in flat_keys:
                kills_f = all(sum(a * b for a, b in zip(x, r)) % p == 0 for i in f for r in gens[i])
                assert kills_f == (set(f) <= set(key))
        count += 1
    assert count >= 200
    assert time.perf_counter() - start < 60.0


def test_criterion_5():
    tested = dependent = 0
    for field in (gf(2), gf(3), gf(5), RATIONALS):
        cfg = GenConfig(field=field, ambient_dim=5, n=6, seed=17, cases=250)
        for i in range(cfg.cases):
            t = random_tuple(cfg, i)
            m = MinkowskiMatroid(t)
            for s in range(t.full_mask + 1):
                by_defect = all(t.defect_mask(sub) >= 0 for sub in range(s + 1) if sub & s == sub)
                assert (m.witness_mask(s) is not None) == by_defect, (i, from_mask(s))
                tested += 1
            if m.is_independent_mask(t.full_mask):
                continue
            dependent += 1
            union = 0
            for c in m.circuits_masks():
                union |= c
            best = min(t.defect_mask(s) for s in range(t.full_mask + 1))
            attaining = [s for s in range(t.full_mask + 1) if t.defect_mask(s) == best]
            minimal = [s for s in attaining if not any(o != s and o & s == o for o in attaining)]
            assert minimal == [union]
            assert m.maximal_essential_subtuple() == from_mask(union)
    assert dependent > 100 and tested > 10000


def test_criterion_6(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("MINKMAT_TEST_MUTATION", "rank_off_by_one")
    code = main(["verify", "--seed", "1", "--cases", "50", "--counterexample-dir", str(tmp_path)])
    out = capsys.readouterr().out
    assert code != 0
    assert "counterexample for" in out
    assert any(p.name.startswith("counterexample-") for p in tmp_path.iterdir())
