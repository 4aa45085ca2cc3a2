"""The polymatroid realized by a subspace tuple: flats, dual realization,
the partition of the dual space over a finite field, and coordinate
decompositions when the lattice of flats is distributive."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import GuardError, VerificationError
from .field import (
    Echelon,
    Subspace,
    canonicalize,
    intersect,
    intersect_kernel,
    inverse,
    orthogonal_complement,
    sum_,
    transform,
)
from .matroid import MinkowskiMatroid
from .tuples import IndexSet, SubspaceTuple, from_mask

__all__ = [
    "DEFAULT_POINT_CAP",
    "Polymatroid",
    "FlatLattice",
    "DualRealization",
    "DualPartition",
    "Decomposition",
    "poly_rank",
    "closure",
    "flats",
    "forbidden_sublattice",
    "dual_realization",
    "dual_partition",
    "distributive_decomposition",
]

DEFAULT_POINT_CAP = 10**6


class Polymatroid:
    """Rank function ``I -> dim sum(L_i, i in I)`` of a tuple."""

    def __init__(self, t: SubspaceTuple):
        MinkowskiMatroid(t)  # enumeration guard
        self.tuple = t
        self.n = len(t)
        self.full = t.full_mask

    def rank_mask(self, mask: int) -> int:
        return self.tuple.span_dim_mask(mask)

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        out = mask
        for j in range(self.n):
            if not mask >> j & 1 and self.rank_mask(mask | 1 << j) == r:
                out |= 1 << j
        return out

    def flat_masks(self) -> list[int]:
        return sorted((m for m in range(self.full + 1) if self.closure_mask(m) == m),
                      key=lambda m: (bin(m).count("1"), from_mask(m)))


class FlatLattice:
    """Flats ordered by inclusion; meet is intersection, join is closed union."""

    def __init__(self, poly: Polymatroid):
        self.poly = poly
        self.masks = poly.flat_masks()
        self._set = set(self.masks)
        for a, b in itertools.combinations(self.masks, 2):
            if a & b not in self._set:
                raise VerificationError(f"flats {from_mask(a)}, {from_mask(b)} meet in a non-flat")

    @property
    def flats(self) -> list[IndexSet]:
        return [from_mask(m) for m in self.masks]

    def __len__(self):
        return len(self.masks)

    def meet(self, a: int, b: int) -> int:
        return a & b

    def join(self, a: int, b: int) -> int:
        return self.poly.closure_mask(a | b)

    def meet_table(self) -> dict:
        return {(a, b): self.meet(a, b) for a in self.masks for b in self.masks}

    def join_table(self) -> dict:
        return {(a, b): self.join(a, b) for a in self.masks for b in self.masks}

    def hasse_masks(self) -> list[tuple[int, int]]:
        edges = []
        for x in self.masks:
            ups = [y for y in self.masks if y != x and y & x == x]
            for y in ups:
                if not any(z != y and z & y == z for z in ups):
                    edges.append((x, y))
        return edges

    @property
    def hasse(self) -> list[tuple[IndexSet, IndexSet]]:
        return [(from_mask(a), from_mask(b)) for a, b in self.hasse_masks()]

    def is_distributive(self) -> bool:
        """Distributive law checked on all triples."""
        for x, y, z in itertools.product(self.masks, repeat=3):
            if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)):
                return False
        return True


def poly_rank(t: SubspaceTuple, s: Iterable[int]) -> int:
    return t.span_dim_mask(t.mask(s))


def closure(t: SubspaceTuple, s: Iterable[int]) -> IndexSet:
    return from_mask(Polymatroid(t).closure_mask(t.mask(s)))


def flats(t: SubspaceTuple) -> FlatLattice:
    return FlatLattice(Polymatroid(t))


def forbidden_sublattice(lat: FlatLattice) -> tuple[str, tuple[IndexSet, ...]] | None:
    """A diamond (M3) or pentagon (N5) sublattice, or None if distributive."""
    masks = lat.masks
    meet, join = lat.meet, lat.join

    def comparable(a, b):
        return a & b == a or a & b == b

    for a, b, c in itertools.combinations(masks, 3):
        if comparable(a, b) or comparable(a, c) or comparable(b, c):
            continue
        top = join(a, b)
        bot = meet(a, b)
        if join(a, c) == top == join(b, c) and meet(a, c) == bot == meet(b, c):
            return "M3", tuple(from_mask(m) for m in (bot, a, b, c, top))
    for a, c in itertools.permutations(masks, 2):
        if a == c or a & c != a:
            continue
        for b in masks:
            if comparable(a, b) or comparable(c, b):
                continue
            if join(a, b) == join(c, b) and meet(a, b) == meet(c, b):
                return "N5", tuple(from_mask(m) for m in (meet(a, b), a, c, b, join(a, b)))
    return None


@dataclass(frozen=True)
class DualRealization:
    dual_tuple: SubspaceTuple

    def rank_mask(self, mask: int) -> int:
        """Codimension of the intersection of the indexed dual subspaces."""
        t = self.dual_tuple
        acc = Subspace.full(t.field, t.ambient_dim)
        for i in from_mask(mask):
            acc = intersect_kernel(acc, t.entries[i])
        return t.ambient_dim - acc.dim


def dual_realization(t: SubspaceTuple) -> DualRealization:
    dual = SubspaceTuple(t.field, t.ambient_dim, tuple(orthogonal_complement(L) for L in t.entries))
    real = DualRealization(dual)
    for m in range(t.full_mask + 1):
        if real.rank_mask(m) != t.span_dim_mask(m):
            raise VerificationError(f"dual rank differs on {from_mask(m)}")
    return real


@dataclass(frozen=True)
class DualPartition:
    p: int
    ambient_dim: int
    blocks: dict  # flat IndexSet -> list of points (tuples), every flat present
    unassigned: int = 0

    def sizes(self) -> dict:
        return {f: len(pts) for f, pts in self.blocks.items()}


def _annihilates(x, L: Subspace, p: int) -> bool:
    return all(sum(a * b for a, b in zip(x, row)) % p == 0 for row in L.basis)


def dual_partition(t: SubspaceTuple, cap: int = DEFAULT_POINT_CAP) -> DualPartition:
    """Group the points of the dual space by ``x -> {i : x kills L_i}``.

    Every label must be a flat, and each block must equal the constructible
    set ``L_F^perp minus the union of L_G^perp over flats G not inside F``.
    """
    if not t.field.is_finite:
        raise ValueError("the dual partition needs a finite field")
    p, d = t.field.p, t.ambient_dim
    if p**d > cap:
        raise GuardError(f"{p}^{d} points exceed the cap {cap}")
    lat = flats(t)
    flat_set = set(lat.masks)
    blocks = {m: [] for m in lat.masks}
    unassigned = 0
    points = list(itertools.product(range(p), repeat=d))
    for x in points:
        g = sum(1 << i for i, L in enumerate(t.entries) if _annihilates(x, L, p))
        if g not in flat_set:
            raise VerificationError(f"point {x} is killed by the non-flat {from_mask(g)}")
        blocks[g].append(x)
    perp = {m: orthogonal_complement(t.span(from_mask(m))) for m in lat.masks}
    inside = {m: {x for x in points if perp[m].contains(x)} for m in lat.masks}
    for f in lat.masks:
        expected = set(inside[f])
        for g in lat.masks:
            if g & f != g:
                expected -= inside[g]
        if expected != set(blocks[f]):
            raise VerificationError(f"block of flat {from_mask(f)} differs from its constructible set")
    total = sum(len(v) for v in blocks.values())
    if total != p**d:
        unassigned = p**d - total
    return DualPartition(p, d, {from_mask(m): pts for m, pts in blocks.items()}, unassigned)


@dataclass(frozen=True)
class Decomposition:
    """``matrix`` maps old coordinates to coordinates in which every entry is
    a coordinate subspace; ``blocks`` are the summands, in new coordinates."""

    matrix: list
    basis: list  # new basis vectors in old coordinates
    blocks: list  # list of coordinate index tuples


def _generated_lattice(entries, field, d, cap: int) -> list[Subspace]:
    members = {Subspace.zero(field, d)} | set(entries)
    frontier = list(members)
    while frontier:
        new = set()
        cur = list(members)
        for a in frontier:
            for b in cur:
                for c in (sum_(a, b), intersect(a, b)):
                    if c not in members and c not in new:
                        new.add(c)
        if len(members) + len(new) > cap:
            raise GuardError("subspace lattice generated by the tuple is too large")
        members |= new
        frontier = list(new)
    return sorted(members, key=lambda s: (s.dim, s.basis))


def _subspace_leq(a: Subspace, b: Subspace) -> bool:
    e = b.echelon()
    return all(e.contains(r) for r in a.basis)


def _lattice_is_distributive(members: list[Subspace]) -> bool:
    for a, b, c in itertools.combinations(members, 3):
        for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
            if intersect(x, sum_(y, z)) != sum_(intersect(x, y), intersect(x, z)):
                return False
    return True


class _NoBasis(Exception):
    pass


def _coordinate_basis(t: SubspaceTuple, members: list[Subspace]) -> Decomposition:
    field, d = t.field, t.ambient_dim
    # join-irreducible subspaces of the generated lattice, with their unique lower cover
    ech = Echelon(field, d)
    chosen, blocks = [], []
    for x in members:
        below = [y for y in members if y != x and _subspace_leq(y, x)]
        maximal = [y for y in below if not any(z != y and _subspace_leq(y, z) for z in below)]
        if len(maximal) != 1:
            continue
        start = len(chosen)
        lower_ech = maximal[0].echelon()
        for row in x.basis:
            if not lower_ech.contains(row) and lower_ech.add(row):
                if not ech.add(row):
                    raise _NoBasis("summands of the generated lattice are not independent")
                chosen.append(row)
        blocks.append((start, len(chosen)))
    start = len(chosen)
    for row in Subspace.full(field, d).basis:
        if ech.add(row):
            chosen.append(row)
    if len(chosen) > start:
        blocks.append((start, len(chosen)))
    bt = [tuple(r[i] for r in chosen) for i in range(d)]
    m = inverse(bt, field)
    for i, L in enumerate(t.entries):
        if not transform(L, m).is_coordinate():
            raise _NoBasis(f"entry {i} is not coordinate in the constructed basis")
    return Decomposition(m, [tuple(r) for r in chosen], [tuple(range(a, b)) for a, b in blocks])


def distributive_decomposition(t: SubspaceTuple, cap: int = 4096) -> Decomposition | None:
    """Coordinate basis for the tuple, or None.

    None when the lattice of flats has a diamond or pentagon.  A distributive
    lattice of flats is not enough on its own: three planes in general
    position in 5-space have Boolean flats but no coordinate basis.  Such
    cases are recognised by the lattice the entries generate under sum and
    intersection failing to be distributive, and also give None.
    """
    if forbidden_sublattice(flats(t)) is not None:
        return None
    members = _generated_lattice(t.entries, t.field, t.ambient_dim, cap)
    try:
        return _coordinate_basis(t, members)
    except _NoBasis as exc:
        if _lattice_is_distributive(members):
            raise VerificationError(f"distributive subspace lattice but {exc}") from None
        return None
