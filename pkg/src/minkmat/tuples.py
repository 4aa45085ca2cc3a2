"""Subspace tuples, their defects, and quotient tuples.

Subtuples are addressed by index sets.  Public functions take any iterable of
indices and return sorted tuples; internally a subtuple is a bitmask.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .field import (
    Echelon,
    FieldSpec,
    Subspace,
    canonicalize,
    project,
    quotient_context,
)

IndexSet = tuple  # sorted tuple of distinct ints

__all__ = [
    "IndexSet",
    "SubspaceTuple",
    "TupleClass",
    "to_mask",
    "from_mask",
    "submasks",
    "span_dim",
    "defect",
    "classify",
    "quotient_tuple",
]


def to_mask(s: Iterable[int], n: int) -> int:
    mask = 0
    for i in s:
        if not 0 <= i < n:
            raise IndexError(f"index {i} out of range for a tuple of {n} subspaces")
        mask |= 1 << i
    return mask


def from_mask(mask: int) -> IndexSet:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True, eq=False)
class SubspaceTuple:
    """An ordered tuple of subspaces of one ambient space.

    Entries are identified by position, so two equal subspaces at different
    indices are different elements.  Span echelons are memoized per subset.
    """

    field: FieldSpec
    ambient_dim: int
    entries: tuple[Subspace, ...]
    _spans: dict = dc_field(default_factory=dict, repr=False, compare=False)
    _memo: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for i, L in enumerate(self.entries):
            if L.field != self.field or L.ambient_dim != self.ambient_dim:
                raise ValueError(f"entry {i} does not live in {self.field}^{self.ambient_dim}")

    @classmethod
    def from_generators(cls, field: FieldSpec, ambient_dim: int, gens: Sequence[Sequence[Sequence]]):
        """Build from one list of generator rows per subspace."""
        return cls(field, ambient_dim, tuple(canonicalize(g, field, ambient_dim) for g in gens))

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SubspaceTuple):
            return NotImplemented
        return (self.field, self.ambient_dim, self.entries) == (
            other.field, other.ambient_dim, other.entries)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.entries))

    @property
    def full_mask(self) -> int:
        return (1 << len(self.entries)) - 1

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(L.dim for L in self.entries)

    def mask(self, s: Iterable[int]) -> int:
        return to_mask(s, len(self.entries))

    def _echelon(self, mask: int) -> Echelon:
        e = self._spans.get(mask)
        if e is None:
            if mask == 0:
                e = Echelon(self.field, self.ambient_dim)
            else:
                top = mask.bit_length() - 1
                e = self._echelon(mask & ~(1 << top)).copy()
                for row in self.entries[top].basis:
                    if len(e) == self.ambient_dim:
                        break
                    e.add(row)
            self._spans[mask] = e
        return e

    def span_dim_mask(self, mask: int) -> int:
        return len(self._echelon(mask))

    def defect_mask(self, mask: int) -> int:
        return len(self._echelon(mask)) - bin(mask).count("1")

    def span(self, s: Iterable[int]) -> Subspace:
        e = self._echelon(self.mask(s))
        return canonicalize(e.rows.values(), self.field, self.ambient_dim)

    def restrict(self, s: Iterable[int]) -> "SubspaceTuple":
        """The subtuple at the given indices, re-indexed from 0 in index order."""
        idx = sorted(set(s))
        self.mask(idx)
        return SubspaceTuple(self.field, self.ambient_dim, tuple(self.entries[i] for i in idx))


@dataclass(frozen=True)
class TupleClass:
    independent: bool
    bk: bool
    irreducible: bool
    essential: bool
    cyclic: bool
    defect: int


def span_dim(t: SubspaceTuple, s: Iterable[int]) -> int:
    return t.span_dim_mask(t.mask(s))


def defect(t: SubspaceTuple, s: Iterable[int]) -> int:
    return t.defect_mask(t.mask(s))


def classify(t: SubspaceTuple, s: Iterable[int]) -> TupleClass:
    """Exhaustive subset scan of the defect-based tuple properties."""
    mask = t.mask(s)
    if mask == 0:
        raise ValueError("classify needs a nonempty subtuple")
    d = t.defect_mask(mask)
    independent = True
    all_proper_positive = True
    essential = True
    for sub in submasks(mask):
        ds = t.defect_mask(sub)
        if ds < 0:
            independent = False
        if sub != mask:
            if ds <= d:
                essential = False
            if sub and ds <= 0:
                all_proper_positive = False
    bk = independent and d == 0
    from .matroid import MinkowskiMatroid

    cyclic = MinkowskiMatroid(t).is_cyclic_mask(mask, check=False)
    return TupleClass(
        independent=independent,
        bk=bk,
        irreducible=independent and all_proper_positive,
        essential=essential,
        cyclic=cyclic,
        defect=d,
    )


def quotient_tuple(t: SubspaceTuple, k: Iterable[int]) -> SubspaceTuple:
    """Project the entries outside ``k`` onto ``V / <k>``, keeping index order."""
    kmask = t.mask(k)
    ctx = quotient_context(t.ambient_dim, t.span(from_mask(kmask)))
    rest = [L for i, L in enumerate(t.entries) if not kmask >> i & 1]
    return SubspaceTuple(t.field, ctx.quotient_dim, tuple(project(ctx, L) for L in rest))
