import itertools

import pytest

from minkmat import RATIONALS, SubspaceTuple, gf
from minkmat.bk import (
    NotBKError,
    apply_basis_change,
    bk_decomposition,
    bk_sublattice,
    coordinate_basis,
    maximal_bk_filtration,
    realize_poset,
)
from minkmat.field import Subspace, canonicalize
from minkmat.poset import LatticeOfSets, Poset, birkhoff_poset, poset_iso_classes

from conftest import make

# number of unlabelled posets on n points (OEIS A000112)
KNOWN_COUNTS = [1, 1, 2, 5, 16, 63]


class TestPoset:
    def test_closure_and_validation(self):
        P = Poset.from_relations("abc", [("a", "b"), ("b", "c")])
        assert P.leq("a", "c") and not P.leq("c", "a")
        with pytest.raises(ValueError):
            Poset.from_relations("ab", [("a", "b"), ("b", "a")])

    def test_covers_and_ideals(self):
        V = Poset.from_relations("abc", [("a", "b"), ("a", "c")])
        assert sorted(V.cover_pairs()) == [("a", "b"), ("a", "c")]
        assert len(V.ideals()) == 5

    def test_linear_extensions(self):
        V = Poset.from_relations("abc", [("a", "b"), ("a", "c")])
        assert V.is_linear_extension(V.linear_extension())
        assert V.is_linear_extension(V.linear_extension(reverse=True))
        assert not V.is_linear_extension([1, 0, 2])

    def test_isomorphism(self):
        V = Poset.from_relations("abc", [("a", "b"), ("a", "c")])
        W = Poset.from_relations("xyz", [("z", "x"), ("z", "y")])
        L = Poset.from_relations("abc", [("a", "c"), ("b", "c")])
        assert V.is_isomorphic(W) and not V.is_isomorphic(L)
        assert not Poset.chain(3).is_isomorphic(Poset.antichain(3))

    @pytest.mark.parametrize("n", range(6))
    def test_class_counts(self, n):
        classes = poset_iso_classes(n)
        assert len(classes) == KNOWN_COUNTS[n]
        for a, b in itertools.combinations(classes, 2):
            assert not a.is_isomorphic(b)


class TestLattice:
    def test_boolean_gives_antichain(self):
        lat = LatticeOfSets.from_masks(range(8))
        assert birkhoff_poset(lat).is_isomorphic(Poset.antichain(3))

    def test_chain(self):
        lat = LatticeOfSets.from_masks([0, 1, 3, 7, 15])
        assert birkhoff_poset(lat).is_isomorphic(Poset.chain(4))

    def test_not_closed(self):
        with pytest.raises(ValueError):
            birkhoff_poset(LatticeOfSets.from_masks([0, 1, 2]))


class TestBkSublattice:
    def test_line_plane_space(self, line_plane_space):
        assert bk_sublattice(line_plane_space).family == [(), (0,), (0, 1, 2)]

    def test_independent_lines_boolean(self):
        t = make([[(1, 0, 0)], [(0, 1, 0)], [(0, 0, 1)]])
        assert len(bk_sublattice(t)) == 8

    def test_flag_chain(self, flag3):
        assert bk_sublattice(flag3).family == [(), (0,), (0, 1), (0, 1, 2)]

    def test_dependent_rejected(self, lines_in_plane):
        with pytest.raises(NotBKError) as info:
            bk_sublattice(lines_in_plane)
        assert info.value.subset == (0, 1) and info.value.defect == -1


class TestDecomposition:
    def test_line_plane_space(self, line_plane_space):
        dec = bk_decomposition(line_plane_space)
        assert sorted(dec.blocks.values()) == [(0,), (1, 2)]
        assert dec.poset.is_isomorphic(Poset.chain(2))
        assert dec.graded[(0,)].dims == (1,)
        top = dec.graded[(0, 1, 2)]
        assert top.dims == (2, 2) and top.ambient_dim == 2

    def test_irreducible_single_block(self):
        t = make([[(1, 0), (0, 1)], [(1, 0), (0, 1)]])
        dec = bk_decomposition(t)
        assert list(dec.blocks.values()) == [(0, 1)]

    def test_flag(self, flag3):
        dec = bk_decomposition(flag3)
        assert dec.poset.is_isomorphic(Poset.chain(3))
        assert sorted(dec.blocks.values()) == [(0,), (1,), (2,)]
        assert all(g.dims == (1,) and g.ambient_dim == 1 for g in dec.graded.values())

    def test_not_bk(self, lines_in_space):
        plane = make([[(1, 0, 0), (0, 1, 0)]])
        with pytest.raises(NotBKError):
            bk_decomposition(plane)
        with pytest.raises(NotBKError):
            bk_decomposition(lines_in_space)


class TestFiltration:
    def test_line_plane_space(self, line_plane_space):
        f = maximal_bk_filtration(line_plane_space)
        assert f.chain == ((), (0,), (0, 1, 2))

    def test_single_element(self):
        t = make([[(1,)]])
        assert maximal_bk_filtration(t).chain == ((), (0,))

    def test_antichain_shapes_agree(self):
        t = realize_poset(Poset.antichain(2), RATIONALS)
        dec = bk_decomposition(t)
        labels = dec.poset.labels
        a = maximal_bk_filtration(t, labels, dec)
        b = maximal_bk_filtration(t, labels[::-1], dec)
        assert a.chain != b.chain and a.shape() == b.shape()

    def test_bad_extension(self, line_plane_space):
        with pytest.raises(ValueError):
            maximal_bk_filtration(line_plane_space, [(0, 1, 2), (0,)])


class TestRealize:
    def test_antichain(self):
        t = realize_poset(Poset.antichain(2), RATIONALS)
        assert [L.basis for L in t.entries] == [((1, 0),), ((0, 1),)]

    def test_chain_is_flag(self):
        t = realize_poset(Poset.chain(3), RATIONALS)
        assert t.dims == (1, 2, 3)
        assert all(t.entries[i].contains(r) for i in range(3) for j in range(i) for r in t.entries[j].basis)

    def test_v_poset(self):
        V = Poset.from_relations("abc", [("a", "b"), ("a", "c")])
        t = realize_poset(V, RATIONALS)
        assert [L.basis for L in t.entries] == [((1, 0, 0),), ((1, 0, 0), (0, 1, 0)), ((1, 0, 0), (0, 0, 1))]
        assert len(bk_sublattice(t)) == 5

    def test_empty(self):
        with pytest.raises(ValueError):
            realize_poset(Poset.antichain(0), RATIONALS)


class TestCoordinateBasis:
    def test_line_plane_space_identity(self, line_plane_space):
        assert coordinate_basis(line_plane_space) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_skewed_flag(self):
        t = make([[(1, 1)], [(1, 0), (0, 1)]])
        m = coordinate_basis(t)
        moved = apply_basis_change(t, m)
        assert moved.entries[0] == Subspace.coordinate(RATIONALS, 2, (0,))
        # e1 + e2 goes to e1
        assert tuple(sum(a * b for a, b in zip(row, (1, 1))) for row in m) == (1, 0)

    def test_realization_identity(self):
        V = Poset.from_relations("abc", [("a", "b"), ("a", "c")])
        t = realize_poset(V, gf(3))
        assert coordinate_basis(t) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
