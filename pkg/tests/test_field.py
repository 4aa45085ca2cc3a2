from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from minkmat.field import (
    RATIONALS,
    Echelon,
    FieldSpec,
    Subspace,
    canonicalize,
    gf,
    intersect,
    inverse,
    matmul,
    orthogonal_complement,
    project,
    quotient_context,
    rref,
    sum_,
    transform,
)
from oracle import naive_rank

GF2, GF3 = gf(2), gf(3)


def sub(rows, field=RATIONALS, d=None):
    return canonicalize(rows, field, d if d is not None else len(rows[0]))


def e(i, d, field=RATIONALS):
    return sub([tuple(1 if j == i else 0 for j in range(d))], field, d)


class TestFieldSpec:
    def test_rejects_composite(self):
        for p in (0, 1, 4, 6, 9, 15):
            with pytest.raises(ValueError):
                FieldSpec(p)

    def test_prime_ok(self):
        assert str(gf(7)) == "gf 7"
        assert str(RATIONALS) == "rational"
        assert gf(5).coerce(-1) == 4
        assert gf(5).inv(2) == 3
        assert list(gf(3).elements()) == [0, 1, 2]

    def test_rationals_exact(self):
        assert RATIONALS.coerce(Fraction(1, 3)) * 3 == 1
        assert isinstance(RATIONALS.coerce(2), Fraction)


class TestCanonicalize:
    def test_duplicate_row(self):
        s = sub([(1, 0), (1, 0)])
        assert s.basis == ((1, 0),) and s.dim == 1

    def test_empty_rows_zero_subspace(self):
        s = canonicalize([], RATIONALS, 3)
        assert s.dim == 0 and s.basis == () and s.ambient_dim == 3

    def test_gf2_row_reduction(self):
        assert sub([(1, 1), (0, 1)], GF2).basis == ((1, 0), (0, 1))

    def test_inconsistent_lengths(self):
        with pytest.raises(ValueError):
            canonicalize([(1, 0), (1, 0, 0)], RATIONALS, 2)

    def test_representation_unique(self):
        a = sub([(1, 2, 3), (0, 1, 1)])
        b = sub([(1, 3, 4), (2, 5, 7)])
        assert a == b and hash(a) == hash(b)

    def test_idempotent(self):
        a = sub([(2, 4, 0), (1, 1, 1)])
        assert canonicalize(a.basis, RATIONALS, 3) == a

    def test_gf_entries_reduced(self):
        assert sub([(4, 5)], GF3).basis == ((1, 2),)


class TestSumIntersect:
    def test_idempotent_sum(self):
        assert sum_(e(0, 2), e(0, 2)) == e(0, 2)

    def test_line_plus_plane(self):
        assert sum_(e(0, 3), sub([(0, 1, 0), (0, 0, 1)])) == Subspace.full(RATIONALS, 3)

    def test_gf2_two_lines_fill(self):
        assert sum_(sub([(1, 0)], GF2), sub([(1, 1)], GF2)).dim == 2

    def test_nested(self):
        assert intersect(e(0, 2), Subspace.full(RATIONALS, 2)) == e(0, 2)

    def test_complementary(self):
        assert intersect(e(0, 2), e(1, 2)).dim == 0

    def test_gf2_diagonal(self):
        full = sub([(1, 0), (0, 1)], GF2)
        assert intersect(full, sub([(1, 1)], GF2)) == sub([(1, 1)], GF2)

    def test_mismatch(self):
        with pytest.raises(ValueError):
            sum_(e(0, 2), e(0, 3))
        with pytest.raises(ValueError):
            intersect(e(0, 2, GF2), e(0, 2))


class TestQuotient:
    def test_full_mod_line(self):
        ctx = quotient_context(3, e(0, 3))
        assert project(ctx, Subspace.full(RATIONALS, 3)).dim == 2

    def test_kernel_dies(self):
        k = sub([(1, 1, 0)])
        ctx = quotient_context(3, k)
        assert project(ctx, k).dim == 0
        assert all(x == 0 for x in ctx.apply((1, 1, 0)))

    def test_line_in_plane(self):
        ctx = quotient_context(2, e(0, 2))
        img = project(ctx, e(0, 2))
        assert img.dim == 0 and img.ambient_dim == 1

    def test_coordinates_are_non_pivots(self):
        ctx = quotient_context(3, sub([(0, 1, 0)]))
        assert ctx.apply((5, 7, 9)) == (5, 9)

    def test_ambient_mismatch(self):
        ctx = quotient_context(3, e(0, 3))
        with pytest.raises(ValueError):
            project(ctx, e(0, 2))


class TestComplement:
    def test_coordinate_line(self):
        assert orthogonal_complement(e(0, 2)) == e(1, 2)

    def test_full(self):
        assert orthogonal_complement(Subspace.full(RATIONALS, 2)).dim == 0

    def test_gf2_self_dual_line(self):
        d = sub([(1, 1)], GF2)
        assert orthogonal_complement(d) == d


class TestMatrices:
    def test_inverse_roundtrip(self):
        m = [(2, 1), (1, 1)]
        inv = inverse(m, RATIONALS)
        assert matmul(m, inv, RATIONALS) == [(1, 0), (0, 1)]

    def test_singular(self):
        with pytest.raises(ValueError):
            inverse([(1, 2), (2, 4)], RATIONALS)

    def test_transform(self):
        # swap coordinates
        assert transform(e(0, 2), [(0, 1), (1, 0)]) == e(1, 2)

    def test_rref_pivots(self):
        rows, piv = rref([(0, 2, 4), (0, 1, 3)], RATIONALS, 3)
        assert piv == (1, 2) or list(piv) == [1, 2]

    def test_echelon_incremental(self):
        ech = Echelon(GF3, 2)
        assert ech.add((1, 2)) and not ech.add((2, 1)) and ech.contains((2, 1))


# -- properties -------------------------------------------------------------------

FIELDS = [GF2, GF3, RATIONALS]


@st.composite
def subspaces(draw, field, d):
    k = draw(st.integers(0, d + 1))
    if field.p is None:
        el = st.integers(-3, 3)
    else:
        el = st.integers(0, field.p - 1)
    rows = draw(st.lists(st.tuples(*[el] * d), min_size=k, max_size=k))
    return canonicalize(rows, field, d)


@st.composite
def pair(draw):
    field = draw(st.sampled_from(FIELDS))
    d = draw(st.integers(1, 6))
    return field, draw(subspaces(field, d)), draw(subspaces(field, d))


@settings(max_examples=150, deadline=None)
@given(pair())
def test_modular_law(fab):
    _, a, b = fab
    assert sum_(a, b).dim + intersect(a, b).dim == a.dim + b.dim


@settings(max_examples=150, deadline=None)
@given(pair())
def test_intersection_contained_in_both(fab):
    _, a, b = fab
    for r in intersect(a, b).basis:
        assert a.contains(r) and b.contains(r)


@settings(max_examples=150, deadline=None)
@given(pair())
def test_double_complement(fab):
    _, a, _ = fab
    c = orthogonal_complement(a)
    assert c.dim + a.dim == a.ambient_dim
    assert orthogonal_complement(c) == a


@settings(max_examples=150, deadline=None)
@given(pair())
def test_projection_dimension(fab):
    _, s, k = fab
    assert project(quotient_context(k.ambient_dim, k), s).dim == sum_(s, k).dim - k.dim


@settings(max_examples=150, deadline=None)
@given(pair())
def test_dim_matches_naive_rank(fab):
    f, a, b = fab
    rows = list(a.basis) + list(b.basis)
    assert sum_(a, b).dim == (naive_rank(rows, f.p) if rows else 0)
