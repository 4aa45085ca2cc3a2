"""BK-subtuples of linearly independent tuples and the poset decomposition.

In a linearly independent tuple the zero-defect subtuples form a
distributive lattice of sets.  Its join-irreducible members, ordered by
inclusion, form the Birkhoff poset; each poset element owns a block of the
tuple, and the blocks partition the tuple.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import VerificationError
from .field import Echelon, FieldSpec, Subspace, canonicalize, inverse, intersect, transform
from .matroid import MinkowskiMatroid
from .poset import LatticeOfSets, Poset, birkhoff_poset
from .tuples import IndexSet, SubspaceTuple, classify, from_mask, quotient_tuple, submasks

__all__ = [
    "NotBKError",
    "BkDecomposition",
    "Filtration",
    "bk_sublattice",
    "bk_decomposition",
    "maximal_bk_filtration",
    "realize_poset",
    "coordinate_basis",
    "apply_basis_change",
]


class NotBKError(ValueError):
    """The tuple fails a BK precondition; ``subset`` witnesses the failure."""

    def __init__(self, message: str, subset: IndexSet = (), defect: int | None = None):
        super().__init__(message)
        self.subset = subset
        self.defect = defect


def _negative_subset(t: SubspaceTuple) -> int | None:
    for m in range(t.full_mask + 1):
        if t.defect_mask(m) < 0:
            return m
    return None


def _require_independent(t: SubspaceTuple) -> None:
    m = _negative_subset(t)
    if m is not None:
        raise NotBKError(
            f"tuple is linearly dependent: subset {list(from_mask(m))} has defect {t.defect_mask(m)}",
            from_mask(m), t.defect_mask(m))


def _require_bk(t: SubspaceTuple) -> None:
    _require_independent(t)
    d = t.defect_mask(t.full_mask)
    if d != 0:
        raise NotBKError(f"tuple has defect {d}, not 0", tuple(range(len(t))), d)


def bk_sublattice(t: SubspaceTuple) -> LatticeOfSets:
    """All zero-defect subtuples of a linearly independent tuple."""
    MinkowskiMatroid(t)  # enumeration guard
    _require_independent(t)
    lat = LatticeOfSets.from_masks(m for m in range(t.full_mask + 1) if t.defect_mask(m) == 0)
    bad = lat.closure_violation()
    if bad is not None:
        a, b, op = bad
        raise VerificationError(f"BK-subtuples {from_mask(a)}, {from_mask(b)} not closed under {op}")
    return lat


@dataclass(frozen=True)
class BkDecomposition:
    """Poset elements are labelled by their principal BK-subtuples."""

    poset: Poset
    blocks: dict  # label -> IndexSet
    graded: dict  # label -> SubspaceTuple

    def principal(self, label) -> IndexSet:
        return label


def _in_own_span(t: SubspaceTuple) -> SubspaceTuple:
    """Re-express ``t`` inside its span, using RREF pivot coordinates."""
    piv = t.span(range(len(t))).pivots
    entries = tuple(canonicalize([[row[c] for c in piv] for row in L.basis], t.field, len(piv))
                    for L in t.entries)
    return SubspaceTuple(t.field, len(piv), entries)


def _graded_piece(t: SubspaceTuple, upper: int, lower: int) -> SubspaceTuple:
    """``t|upper / t|lower`` inside ``<t|upper> / <t|lower>``."""
    idx = from_mask(upper)
    pos = [k for k, i in enumerate(idx) if lower >> i & 1]
    return quotient_tuple(_in_own_span(t.restrict(idx)), pos)


def _check_irreducible_bk(piece: SubspaceTuple, what: str) -> None:
    if len(piece) == 0:
        raise VerificationError(f"{what}: empty graded piece")
    c = classify(piece, range(len(piece)))
    if not (c.bk and c.irreducible):
        raise VerificationError(f"{what}: graded piece is not an irreducible BK-tuple ({c})")


def bk_decomposition(t: SubspaceTuple) -> BkDecomposition:
    _require_bk(t)
    lat = bk_sublattice(t)
    poset = birkhoff_poset(lat)
    blocks, graded = {}, {}
    covered = 0
    for label in poset.labels:
        upper = t.mask(label)
        lower = lat.lower_cover(upper)
        block = upper & ~lower
        if block & covered:
            raise VerificationError(f"block {from_mask(block)} overlaps earlier blocks")
        covered |= block
        blocks[label] = from_mask(block)
        graded[label] = _graded_piece(t, upper, lower)
        _check_irreducible_bk(graded[label], f"poset element {label}")
    if covered != t.full_mask:
        raise VerificationError(f"blocks cover only {from_mask(covered)}")
    minimal = [label for j, label in enumerate(poset.labels) if poset.below[j] == 1 << j]
    spans = {label: t.span(label) for label in minimal}
    for i, a in enumerate(minimal):
        for b in minimal[i + 1:]:
            if intersect(spans[a], spans[b]).dim:
                raise VerificationError(f"spans of irreducible BK-subtuples {a} and {b} meet")
    return BkDecomposition(poset, blocks, graded)


@dataclass(frozen=True)
class Filtration:
    chain: tuple[IndexSet, ...]
    graded: tuple[SubspaceTuple, ...]

    def shape(self) -> list[tuple[int, int]]:
        """Sorted (cardinality, span dimension) of the graded pieces."""
        return sorted((len(g), g.span_dim_mask(g.full_mask)) for g in self.graded)


def maximal_bk_filtration(t: SubspaceTuple, order: Sequence | None = None,
                          decomposition: BkDecomposition | None = None) -> Filtration:
    """Filtration by the ideals generated by successive prefixes of ``order``.

    ``order`` lists poset labels; it defaults to the least linear extension.
    """
    dec = decomposition or bk_decomposition(t)
    P = dec.poset
    if order is None:
        idx_order = P.linear_extension()
    else:
        try:
            idx_order = [P.index[a] for a in order]
        except KeyError as exc:
            raise ValueError(f"unknown poset element {exc}") from None
    if not P.is_linear_extension(idx_order):
        raise ValueError("order is not a linear extension of the BK poset")
    chain, graded = [()], []
    acc = 0
    for j in idx_order:
        prev = acc
        acc |= t.mask(dec.blocks[P.labels[j]])
        chain.append(from_mask(acc))
        piece = _graded_piece(t, acc, prev)
        _check_irreducible_bk(piece, f"filtration step {from_mask(acc)}")
        graded.append(piece)
    return Filtration(tuple(chain), tuple(graded))


def realize_poset(P: Poset, field: FieldSpec) -> SubspaceTuple:
    """Down-set coordinate realization: ``L_j = span(e_i : i <= j)``."""
    if len(P) == 0:
        raise ValueError("cannot realize the empty poset")
    n = len(P)
    t = SubspaceTuple(field, n, tuple(Subspace.coordinate(field, n, from_mask(b)) for b in P.below))
    back = birkhoff_poset(bk_sublattice(t))
    if not back.is_isomorphic(P):
        raise VerificationError("realized tuple does not reproduce the poset")
    return t


def coordinate_basis(t: SubspaceTuple, decomposition: BkDecomposition | None = None) -> list[tuple]:
    """Invertible ``M`` such that every BK-subtuple span of ``M t`` is coordinate.

    Basis vectors are chosen element by element along a linear extension,
    extending the vectors already chosen for the lower elements.  ``M`` maps
    old coordinates (column vectors) to coordinates in that basis.
    """
    dec = decomposition or bk_decomposition(t)
    P = dec.poset
    field, d = t.field, t.ambient_dim
    chosen: list[tuple] = []
    ech = Echelon(field, d)
    for j in P.linear_extension():
        for row in t.span(P.labels[j]).basis:
            if ech.add(row):
                chosen.append(row)
    for row in Subspace.full(field, d).basis:
        if ech.add(row):
            chosen.append(row)
    chosen.sort(key=lambda r: next(c for c, x in enumerate(r) if x))
    # columns of B^T are the chosen vectors; M = (B^T)^-1
    bt = [tuple(r[i] for r in chosen) for i in range(d)]
    m = inverse(bt, field)
    moved = apply_basis_change(t, m)
    for mask in submasks(t.full_mask):
        if t.defect_mask(mask) == 0 and not moved.span(from_mask(mask)).is_coordinate():
            raise VerificationError(f"span of BK-subtuple {from_mask(mask)} is not coordinate")
    return m


def apply_basis_change(t: SubspaceTuple, m: Sequence[Sequence]) -> SubspaceTuple:
    return SubspaceTuple(t.field, len(m), tuple(transform(L, m) for L in t.entries))
