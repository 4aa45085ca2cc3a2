"""Finite posets, lattices of sets, and Birkhoff's representation."""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import VerificationError
from .tuples import IndexSet, from_mask

__all__ = [
    "Poset",
    "LatticeOfSets",
    "birkhoff_poset",
    "poset_iso_classes",
]


class Poset:
    """A finite poset on ``labels``; ``below[j]`` is the bitmask of all i <= j."""

    def __init__(self, labels: Sequence[Hashable], below: Sequence[int]):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate poset labels")
        self.below = tuple(below)
        self.index = {a: i for i, a in enumerate(self.labels)}
        self._validate()

    @classmethod
    def from_relations(cls, labels: Sequence[Hashable], pairs: Iterable[tuple]) -> "Poset":
        """Poset generated by ``a <= b`` for each pair, transitively closed."""
        labels = tuple(labels)
        index = {a: i for i, a in enumerate(labels)}
        n = len(labels)
        below = [1 << i for i in range(n)]
        for a, b in pairs:
            if a not in index or b not in index:
                raise ValueError(f"unknown element in relation {a!r} < {b!r}")
            below[index[b]] |= 1 << index[a]
        changed = True
        while changed:
            changed = False
            for j in range(n):
                acc = below[j]
                for i in from_mask(below[j]):
                    acc |= below[i]
                if acc != below[j]:
                    below[j] = acc
                    changed = True
        return cls(labels, below)

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_relations(range(n), [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls.from_relations(range(n), [])

    def _validate(self):
        n = len(self.labels)
        for j, b in enumerate(self.below):
            if not b >> j & 1:
                raise ValueError("relation is not reflexive")
            for i in from_mask(b):
                if i != j and self.below[i] >> j & 1:
                    raise ValueError(
                        f"relation has a cycle through {self.labels[i]!r} and {self.labels[j]!r}")
                if self.below[i] & ~b:
                    raise ValueError("relation is not transitive")
            if b >> n:
                raise ValueError("relation mentions unknown elements")

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"Poset({list(self.labels)}, covers={self.cover_pairs()})"

    def leq(self, a, b) -> bool:
        return bool(self.below[self.index[b]] >> self.index[a] & 1)

    def above(self, i: int) -> int:
        return sum(1 << j for j in range(len(self)) if self.below[j] >> i & 1)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram as index pairs (i, j) with i covered by j."""
        out = []
        for j, b in enumerate(self.below):
            strict = b & ~(1 << j)
            for i in from_mask(strict):
                if not any(self.below[k] >> i & 1 for k in from_mask(strict) if k != i):
                    out.append((i, j))
        return sorted(out)

    def cover_pairs(self) -> list[tuple]:
        return [(self.labels[i], self.labels[j]) for i, j in self.covers()]

    def is_ideal(self, mask: int) -> bool:
        return all(self.below[j] & ~mask == 0 for j in from_mask(mask))

    def ideals(self) -> list[int]:
        """All order ideals as bitmasks (brute force over subsets)."""
        return [m for m in range(1 << len(self)) if self.is_ideal(m)]

    def is_linear_extension(self, order: Sequence[int]) -> bool:
        if sorted(order) != list(range(len(self))):
            return False
        seen = 0
        for j in order:
            if self.below[j] & ~(seen | 1 << j):
                return False
            seen |= 1 << j
        return True

    def linear_extension(self, reverse: bool = False) -> list[int]:
        """Lexicographically least (or greatest) linear extension, as indices."""
        n = len(self)
        indeg = [bin(b).count("1") - 1 for b in self.below]
        sign = -1 if reverse else 1
        heap = [sign * j for j in range(n) if indeg[j] == 0]
        heapq.heapify(heap)
        out = []
        while heap:
            i = sign * heapq.heappop(heap)
            out.append(i)
            for j in range(n):
                if j != i and self.below[j] >> i & 1:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        heapq.heappush(heap, sign * j)
        return out

    def isomorphism(self, other: "Poset") -> dict | None:
        """An order isomorphism ``self -> other`` as an index map, or None."""
        n = len(self)
        if n != len(other):
            return None

        def sig(p, i):
            return (bin(p.below[i]).count("1"), bin(p.above(i)).count("1"))

        s1 = [sig(self, i) for i in range(n)]
        s2 = [sig(other, i) for i in range(n)]
        if sorted(s1) != sorted(s2):
            return None
        order = sorted(range(n), key=lambda i: (s1[i], i))
        mapping: dict[int, int] = {}
        used = set()

        def extend(k):
            if k == n:
                return True
            i = order[k]
            for j in range(n):
                if j in used or s2[j] != s1[i]:
                    continue
                ok = all(
                    bool(self.below[i] >> a & 1) == bool(other.below[j] >> b & 1)
                    and bool(self.below[a] >> i & 1) == bool(other.below[b] >> j & 1)
                    for a, b in mapping.items())
                if ok:
                    mapping[i] = j
                    used.add(j)
                    if extend(k + 1):
                        return True
                    del mapping[i]
                    used.discard(j)
            return False

        return dict(mapping) if extend(0) else None

    def is_isomorphic(self, other: "Poset") -> bool:
        return self.isomorphism(other) is not None


@dataclass(frozen=True)
class LatticeOfSets:
    """A family of index sets under union and intersection."""

    masks: tuple[int, ...]

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "LatticeOfSets":
        return cls(tuple(sorted(set(masks), key=lambda m: (bin(m).count("1"), from_mask(m)))))

    @property
    def family(self) -> list[IndexSet]:
        return [from_mask(m) for m in self.masks]

    def __len__(self):
        return len(self.masks)

    def closure_violation(self) -> tuple[int, int, str] | None:
        present = set(self.masks)
        for a, b in itertools.combinations(self.masks, 2):
            if a | b not in present:
                return a, b, "union"
            if a & b not in present:
                return a, b, "intersection"
        return None

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

    def join_irreducibles(self) -> list[int]:
        """Members covering exactly one member."""
        lower = {}
        for a, b in self.hasse_masks():
            lower.setdefault(b, []).append(a)
        return [m for m in self.masks if len(lower.get(m, ())) == 1]

    def lower_cover(self, m: int) -> int:
        """Union of members strictly inside ``m``."""
        u = 0
        for x in self.masks:
            if x != m and x & m == x:
                u |= x
        return u


def birkhoff_poset(lat: LatticeOfSets) -> Poset:
    """Poset of join-irreducibles (labelled by their index sets), by inclusion.

    Raises VerificationError unless its order ideals reproduce ``lat``.
    """
    bad = lat.closure_violation()
    if bad is not None:
        raise ValueError(f"family is not closed under {bad[2]}")
    ji = lat.join_irreducibles()
    below = [sum(1 << i for i, a in enumerate(ji) if a & b == a) for b in ji]
    poset = Poset([from_mask(m) for m in ji], below)
    members = set(lat.masks)
    seen = set()
    for ideal in poset.ideals():
        u = 0
        for i in from_mask(ideal):
            u |= ji[i]
        back = sum(1 << i for i, a in enumerate(ji) if a & u == a)
        if u not in members or back != ideal:
            raise VerificationError(f"order ideal {from_mask(ideal)} does not match a lattice member")
        seen.add(u)
    if seen != members:
        raise VerificationError("order ideals do not cover the lattice")
    return poset


def _canonical_key(n: int, below: Sequence[int]) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(
            sum(1 << perm[i] for i in from_mask(below[j])) for j in sorted(range(n), key=perm.__getitem__))
        if best is None or key < best:
            best = key
    return best


def poset_iso_classes(n: int) -> list[Poset]:
    """One representative per isomorphism class of n-element posets.

    Brute force: every poset has a natural labelling, so enumerate relations
    contained in ``i < j`` and keep the transitive ones, up to relabelling.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    reps = {}
    for bits in range(1 << len(pairs)):
        below = [1 << j for j in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                below[j] |= 1 << i
        if any(below[i] & ~below[j] for j in range(n) for i in from_mask(below[j])):
            continue
        key = _canonical_key(n, below)
        if key not in reps:
            reps[key] = Poset(range(n), below)
    return list(reps.values())
