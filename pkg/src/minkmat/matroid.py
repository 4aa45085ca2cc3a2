"""The Minkowski matroid of a subspace tuple.

A subtuple is independent when every one of its subtuples has non-negative
defect.  The oracle here is that definition, evaluated over all subsets with
memoization; :meth:`MinkowskiMatroid.witness` is an independent route through
an explicit transversal of linearly independent vectors.
"""
from __future__ import annotations

import contextlib
import os
import warnings
from collections import deque
from typing import Iterable

from .errors import GuardError, VerificationError
from .field import Echelon
from .tuples import IndexSet, SubspaceTuple, from_mask, submasks

__all__ = [
    "DEFAULT_MAX_GROUND",
    "MinkowskiMatroid",
    "Contraction",
    "DegenerateCaseWarning",
    "rank_mutation",
]

DEFAULT_MAX_GROUND = 20

# Test-only fault injection: added to every nonempty rank.
_RANK_OFFSET = 0


@contextlib.contextmanager
def rank_mutation(offset: int = 1):
    """Make :meth:`MinkowskiMatroid.rank` wrong by ``offset`` (harness self-test)."""
    global _RANK_OFFSET
    old = _RANK_OFFSET
    _RANK_OFFSET = offset
    try:
        yield
    finally:
        _RANK_OFFSET = old


class DegenerateCaseWarning(UserWarning):
    pass


def max_ground() -> int:
    return int(os.environ.get("MINKMAT_MAX_GROUND", DEFAULT_MAX_GROUND))


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


class MinkowskiMatroid:
    def __init__(self, t: SubspaceTuple, cap: int | None = None):
        cap = max_ground() if cap is None else cap
        if len(t) > cap:
            raise GuardError(f"{len(t)} subspaces exceed the subset-enumeration cap {cap}")
        self.tuple = t
        self.n = len(t)
        self.full = t.full_mask
        memo = t._memo
        self._indep = memo.setdefault("indep", {0: True})
        self._rank = memo.setdefault("rank", {0: 0})

    # -- independence and rank -------------------------------------------

    def is_independent_mask(self, mask: int) -> bool:
        r = self._indep.get(mask)
        if r is None:
            r = self.tuple.defect_mask(mask) >= 0 and all(
                self.is_independent_mask(mask ^ b) for b in _bits(mask))
            self._indep[mask] = r
        return r

    def is_independent(self, s: Iterable[int]) -> bool:
        return self.is_independent_mask(self.tuple.mask(s))

    def _true_rank(self, mask: int) -> int:
        r = self._rank.get(mask)
        if r is None:
            if self.is_independent_mask(mask):
                r = _popcount(mask)
            else:
                r = max(self._true_rank(mask ^ b) for b in _bits(mask))
            self._rank[mask] = r
        return r

    def rank_mask(self, mask: int) -> int:
        r = self._true_rank(mask)
        return r + _RANK_OFFSET if mask else r

    def rank(self, s: Iterable[int] | None = None) -> int:
        return self.rank_mask(self.full if s is None else self.tuple.mask(s))

    # -- witness ------------------------------------------------------------

    def witness(self, s: Iterable[int]) -> dict[int, tuple] | None:
        return self.witness_mask(self.tuple.mask(s))

    def witness_mask(self, mask: int) -> dict[int, tuple] | None:
        """Linearly independent vectors, one from each subspace, or None.

        Candidates are the stored basis rows.  The search is unweighted
        matroid intersection of the linear matroid on the candidates with the
        partition matroid "one row per subspace", by shortest augmenting
        paths in the exchange graph.
        """
        t = self.tuple
        field, d = t.field, t.ambient_dim
        owners = from_mask(mask)
        cand = [(i, row) for i in owners for row in t.entries[i].basis]
        chosen: list[int] = []  # candidate indices in the current common independent set
        while len(chosen) < len(owners):
            k = len(chosen)
            aug = Echelon(field, d + k)
            for j, ci in enumerate(chosen):
                unit = [field.zero()] * k
                unit[j] = field.one()
                aug.add(list(cand[ci][1]) + unit)
            covered = {cand[ci][0] for ci in chosen}
            in_set = set(chosen)
            # for y outside: None if I+y is independent, else its coefficients on I
            coeffs = {}
            for y in range(len(cand)):
                if y in in_set:
                    continue
                res = aug.reduce(list(cand[y][1]) + [field.zero()] * k)
                coeffs[y] = None if any(res[:d]) else res[d:]
            sources = [y for y, c in coeffs.items() if c is None]
            sinks = {y for y in coeffs if cand[y][0] not in covered}
            path = self._shortest_path(cand, chosen, coeffs, sources, sinks)
            if path is None:
                return None
            for node in path:
                if node in in_set:
                    in_set.discard(node)
                else:
                    in_set.add(node)
            chosen = sorted(in_set)
        return {cand[ci][0]: tuple(cand[ci][1]) for ci in chosen}

    @staticmethod
    def _shortest_path(cand, chosen, coeffs, sources, sinks):
        prev = {y: None for y in sources}
        queue = deque(sources)
        while queue:
            u = queue.popleft()
            if u in sinks:
                path = []
                while u is not None:
                    path.append(u)
                    u = prev[u]
                return path[::-1]
            if u in coeffs:
                # u outside: u -> x when swapping x for u keeps one row per subspace
                for x in chosen:
                    if x not in prev and cand[x][0] == cand[u][0]:
                        prev[x] = u
                        queue.append(x)
            else:
                # u inside: u -> y when I - u + y stays linearly independent
                j = chosen.index(u)
                for y, c in coeffs.items():
                    if y not in prev and (c is None or c[j]):
                        prev[y] = u
                        queue.append(y)
        return None

    # -- enumerations ---------------------------------------------------------

    def _masks_by_size(self):
        memo = self.tuple._memo
        if "by_size" not in memo:
            memo["by_size"] = sorted(range(self.full + 1), key=lambda m: (_popcount(m), from_mask(m)))
        return memo["by_size"]

    def bases_masks(self) -> list[int]:
        r = self.rank_mask(self.full)
        return [m for m in self._masks_by_size()
                if _popcount(m) == r and self.is_independent_mask(m)]

    def circuits_masks(self) -> list[int]:
        memo = self.tuple._memo
        if "circuits" not in memo:
            memo["circuits"] = [
                m for m in self._masks_by_size()
                if m and not self.is_independent_mask(m)
                and all(self.is_independent_mask(m ^ b) for b in _bits(m))
            ]
        return memo["circuits"]

    def bases(self) -> list[IndexSet]:
        return sorted(from_mask(m) for m in self.bases_masks())

    def circuits(self) -> list[IndexSet]:
        return sorted(from_mask(m) for m in self.circuits_masks())

    def loops(self) -> IndexSet:
        return tuple(i for i, L in enumerate(self.tuple.entries) if L.dim == 0)

    def coloops(self) -> IndexSet:
        bases = self.bases_masks()
        if not bases:
            return ()
        common = self.full
        for b in bases:
            common &= b
        return from_mask(common)

    def basis_defect(self) -> int:
        bases = self.bases_masks()
        if not bases:
            raise VerificationError("no basis of the reported rank")
        defects = {self.tuple.defect_mask(b) for b in bases}
        if len(defects) != 1:
            raise VerificationError(f"bases have different defects {sorted(defects)}")
        return defects.pop()

    # -- contraction and structure ------------------------------------------

    def contract(self, k: Iterable[int]) -> "Contraction":
        kmask = self.tuple.mask(k)
        if not self.is_independent_mask(kmask):
            raise ValueError(f"cannot contract the dependent set {from_mask(kmask)}")
        return Contraction(self, kmask)

    def zero_defect_union(self, mask: int) -> int:
        """Union of all zero-defect submasks of ``mask``."""
        u = 0
        for sub in submasks(mask):
            if self.tuple.defect_mask(sub) == 0:
                u |= sub
        return u

    def max_bk_in_basis(self, b: Iterable[int]) -> IndexSet:
        bmask = self.tuple.mask(b)
        if not self.is_independent_mask(bmask) or _popcount(bmask) != self.rank_mask(self.full):
            raise ValueError(f"{from_mask(bmask)} is not a basis")
        if self.is_independent_mask(self.full):
            warnings.warn(
                "the tuple is linearly independent; the maximal BK-subtuple of a basis "
                "is only defined for dependent tuples", DegenerateCaseWarning, stacklevel=2)
        u = self.zero_defect_union(bmask)
        if self.tuple.defect_mask(u) != 0:
            raise VerificationError(f"union {from_mask(u)} of BK-subtuples is not BK")
        return from_mask(u)

    def is_cyclic_mask(self, mask: int, check: bool = True) -> bool:
        u = 0
        for c in self.circuits_masks():
            if c & mask == c:
                u |= c
        cyclic = u == mask
        if check and mask:
            from .tuples import classify

            essential = classify(self.tuple, from_mask(mask)).essential
            if essential != cyclic:
                raise VerificationError(
                    f"{from_mask(mask)}: cyclic={cyclic} but essential={essential}")
        return cyclic

    def is_cyclic(self, s: Iterable[int]) -> bool:
        return self.is_cyclic_mask(self.tuple.mask(s))

    def maximal_essential_subtuple(self) -> IndexSet:
        """Union of circuits, cross-checked against the minimal min-defect subtuple.

        Returns the empty index set for a linearly independent tuple.
        """
        union = 0
        for c in self.circuits_masks():
            union |= c
        t = self.tuple
        best = min(t.defect_mask(m) for m in range(self.full + 1))
        attaining = [m for m in range(self.full + 1) if t.defect_mask(m) == best]
        minimal = [m for m in attaining if not any(o != m and o & m == o for o in attaining)]
        if len(minimal) != 1:
            raise VerificationError(
                f"minimal subtuples of defect {best} are not unique: "
                f"{[from_mask(m) for m in minimal]}")
        if minimal[0] != union:
            raise VerificationError(
                f"union of circuits {from_mask(union)} differs from the minimal "
                f"min-defect subtuple {from_mask(minimal[0])}")
        return from_mask(union)


class Contraction:
    """The matroid ``M / k`` on the indices outside ``k`` (original numbering)."""

    def __init__(self, m: MinkowskiMatroid, kmask: int):
        self.matroid = m
        self.kmask = kmask
        self.ground: IndexSet = tuple(i for i in range(m.n) if not kmask >> i & 1)

    def is_independent_mask(self, mask: int) -> bool:
        if mask & self.kmask:
            raise ValueError("set meets the contracted elements")
        return self.matroid.is_independent_mask(mask | self.kmask)

    def is_independent(self, s: Iterable[int]) -> bool:
        return self.is_independent_mask(self.matroid.tuple.mask(s))
