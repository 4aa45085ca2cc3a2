"""Random subspace tuples and a registry of structural checks run on them.

Each check receives a :class:`Case` and either returns (pass), raises
:class:`Skip` (precondition not met), or raises anything else (failure).
Checks depend only on the tuple, so a failing case replays from its
serialized tuple file alone.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

from . import bk, polymatroid as pm
from .field import RATIONALS, FieldSpec, canonicalize, gf
from .formats import dump_tuple, parse_tuple
from .matroid import MinkowskiMatroid, _bits, _popcount
from .tuples import SubspaceTuple, from_mask, quotient_tuple, submasks

__all__ = [
    "GenConfig",
    "SuiteReport",
    "CheckStats",
    "CHECKS",
    "Skip",
    "Case",
    "random_tuple",
    "run_suite",
    "run_check",
    "replay",
    "parse_field",
]


class Skip(Exception):
    pass


def parse_field(name: str) -> FieldSpec:
    """``q``/``rational`` or ``gf<p>``/``gf <p>``."""
    key = name.replace(" ", "").lower()
    if key in ("q", "rational", "rationals"):
        return RATIONALS
    if key.startswith("gf") and key[2:].isdigit():
        return gf(int(key[2:]))
    raise ValueError(f"unknown field {name!r}")


@dataclass(frozen=True)
class GenConfig:
    """``ambient_dim`` and ``n`` are upper bounds; each case draws its own
    shape between the ``min_`` values and them."""

    field: FieldSpec = gf(2)
    ambient_dim: int = 4
    n: int = 6
    max_generators_per_subspace: int | None = None
    seed: int = 0
    cases: int = 100
    min_ambient_dim: int = 1
    min_n: int = 1
    partition_cap: int = 256

    def __post_init__(self):
        if not 0 <= self.min_ambient_dim <= self.ambient_dim:
            raise ValueError("need 0 <= min_ambient_dim <= ambient_dim")
        if not 0 <= self.min_n <= self.n:
            raise ValueError("need 0 <= min_n <= n")
        if self.cases < 0:
            raise ValueError("cases must be non-negative")


def _random_vector(rng: random.Random, field: FieldSpec, d: int, pool: list) -> tuple:
    if pool and rng.random() < 0.25:
        a, b = rng.choice(pool), rng.choice(pool)
        ca, cb = _random_scalar(rng, field), _random_scalar(rng, field)
        return tuple(field.coerce(ca * x + cb * y) for x, y in zip(a, b))
    return tuple(_random_scalar(rng, field) for _ in range(d))


def _random_scalar(rng: random.Random, field: FieldSpec):
    if field.p is None:
        return Fraction(rng.randint(-3, 3))
    return rng.randrange(field.p)


def random_tuple(cfg: GenConfig, case_index: int) -> SubspaceTuple:
    rng = random.Random(f"minkmat:{cfg.seed}:{case_index}")
    d = rng.randint(cfg.min_ambient_dim, cfg.ambient_dim)
    n = rng.randint(cfg.min_n, cfg.n)
    max_gen = d if cfg.max_generators_per_subspace is None else cfg.max_generators_per_subspace
    pool: list = []
    entries = []
    for _ in range(n):
        rows = [_random_vector(rng, cfg.field, d, pool) for _ in range(rng.randint(0, max_gen))]
        pool.extend(rows)
        entries.append(canonicalize(rows, cfg.field, d))
    return SubspaceTuple(cfg.field, d, tuple(entries))


class Case:
    """A tuple plus lazily computed shared structure."""

    def __init__(self, t: SubspaceTuple, partition_cap: int = 256):
        self.t = t
        self.m = MinkowskiMatroid(t)
        self.partition_cap = partition_cap
        self._quot: dict[int, SubspaceTuple] = {}
        self._dec = None

    @property
    def independent(self) -> bool:
        return self.m.is_independent_mask(self.t.full_mask)

    @property
    def is_bk(self) -> bool:
        return self.independent and self.t.defect_mask(self.t.full_mask) == 0

    def quotient(self, kmask: int) -> SubspaceTuple:
        q = self._quot.get(kmask)
        if q is None:
            q = self._quot[kmask] = quotient_tuple(self.t, from_mask(kmask))
        return q

    def decomposition(self):
        if self._dec is None:
            self._dec = bk.bk_decomposition(self.t)
        return self._dec


def _embed(kmask: int, n: int) -> list[int]:
    """Original indices of the quotient tuple's entries."""
    return [i for i in range(n) if not kmask >> i & 1]


def _lift(qmask: int, positions: list[int]) -> int:
    return sum(1 << positions[j] for j in from_mask(qmask))


def _fail(msg: str):
    raise AssertionError(msg)


@dataclass(frozen=True)
class Check:
    name: str
    statement: str
    fn: Callable[[Case], None]


CHECKS: dict[str, Check] = {}


def check(name: str, statement: str):
    def deco(fn):
        CHECKS[name] = Check(name, statement, fn)
        return fn
    return deco


# -- matroid structure --------------------------------------------------------

@check("matroid_axioms", "independent subtuples satisfy the hereditary and augmentation axioms")
def _matroid_axioms(c: Case):
    m, full = c.m, c.t.full_mask
    indep = [s for s in range(full + 1) if m.is_independent_mask(s)]
    if not m.is_independent_mask(0):
        _fail("empty set dependent")
    for s in indep:
        for b in _bits(s):
            if not m.is_independent_mask(s ^ b):
                _fail(f"{from_mask(s)} independent but {from_mask(s ^ b)} is not")
    by_size: dict[int, list[int]] = {}
    for s in indep:
        by_size.setdefault(_popcount(s), []).append(s)
    for k, small in by_size.items():
        for i in small:
            for j in by_size.get(k + 1, ()):
                if not any(m.is_independent_mask(i | b) for b in _bits(j & ~i)):
                    _fail(f"augmentation fails for {from_mask(i)} from {from_mask(j)}")


@check("rank_function", "rank is bounded by cardinality and dimension, monotone and submodular")
def _rank_function(c: Case):
    m, t, n = c.m, c.t, len(c.t)
    for s in range(c.t.full_mask + 1):
        r = m.rank_mask(s)
        if not 0 <= r <= min(_popcount(s), t.span_dim_mask(s)):
            _fail(f"rank {r} of {from_mask(s)} outside [0, min(|s|, dim)]")
        for i in range(n):
            if s >> i & 1:
                continue
            ri = m.rank_mask(s | 1 << i)
            if not r <= ri <= r + 1:
                _fail(f"rank jumps from {from_mask(s)} to {from_mask(s | 1 << i)}")
            for j in range(i + 1, n):
                if s >> j & 1:
                    continue
                if ri + m.rank_mask(s | 1 << j) < m.rank_mask(s | 1 << i | 1 << j) + r:
                    _fail(f"rank not submodular at {from_mask(s)} + {i}, {j}")


@check("witness_oracle", "subset-defect independence agrees with existence of a vector witness")
def _witness_oracle(c: Case):
    m, t = c.m, c.t
    field = t.field
    for s in range(t.full_mask + 1):
        w = m.witness_mask(s)
        if (w is not None) != m.is_independent_mask(s):
            _fail(f"witness existence {w is not None} disagrees with independence on {from_mask(s)}")
        if w is not None:
            if sorted(w) != list(from_mask(s)):
                _fail(f"witness for {from_mask(s)} covers {sorted(w)}")
            for i, v in w.items():
                if not t.entries[i].contains(v):
                    _fail(f"witness vector {v} not in subspace {i}")
            if canonicalize(list(w.values()), field, t.ambient_dim).dim != len(w):
                _fail(f"witness vectors for {from_mask(s)} are dependent")


@check("circuit_defect", "circuits and loops have defect -1")
def _circuit_defect(c: Case):
    for cm in c.m.circuits_masks():
        if c.t.defect_mask(cm) != -1:
            _fail(f"circuit {from_mask(cm)} has defect {c.t.defect_mask(cm)}")
    bases = c.m.bases_masks()
    for i in c.m.loops():
        if c.t.defect_mask(1 << i) != -1:
            _fail(f"loop {i} has defect {c.t.defect_mask(1 << i)}")
        if any(b >> i & 1 for b in bases):
            _fail(f"loop {i} lies in a basis")


@check("circuit_minus_element_bk", "removing any element from a circuit leaves a BK-tuple")
def _circuit_minus(c: Case):
    for cm in c.m.circuits_masks():
        for b in _bits(cm):
            s = cm ^ b
            if not (c.m.is_independent_mask(s) and c.t.defect_mask(s) == 0):
                _fail(f"{from_mask(s)} (circuit {from_mask(cm)} minus one) is not BK")


@check("basis_defect", "all bases share one non-negative defect and span the whole tuple")
def _basis_defect(c: Case):
    t, m = c.t, c.m
    bases = m.bases_masks()
    if not bases:
        _fail(f"no independent set of size rank={m.rank_mask(t.full_mask)}")
    full_dim = t.span_dim_mask(t.full_mask)
    defects = {t.defect_mask(b) for b in bases}
    if len(defects) != 1 or min(defects) < 0:
        _fail(f"basis defects {sorted(defects)}")
    for b in bases:
        if t.span_dim_mask(b) != full_dim:
            _fail(f"basis {from_mask(b)} spans dimension {t.span_dim_mask(b)} < {full_dim}")
    if defects.pop() != full_dim - m.rank_mask(t.full_mask):
        _fail("basis defect differs from dim - rank")


@check("rank_dim_iff_bk_bases", "rank equals dimension iff bases are BK")
def _rank_dim(c: Case):
    t, m = c.t, c.m
    lhs = m.rank_mask(t.full_mask) == t.span_dim_mask(t.full_mask)
    rhs = m.basis_defect() == 0
    if lhs != rhs:
        _fail(f"rank==dim is {lhs} but bases BK is {rhs}")


@check("max_bk_in_bases", "each basis of a dependent tuple has a unique maximal BK-subtuple, of one common size")
def _max_bk(c: Case):
    if c.independent:
        raise Skip
    t, m = c.t, c.m
    sizes = set()
    for b in m.bases_masks():
        zero = [s for s in submasks(b) if t.defect_mask(s) == 0]
        maximal = [s for s in zero if not any(o != s and o & s == s for o in zero)]
        if len(maximal) != 1:
            _fail(f"basis {from_mask(b)} has maximal BK-subtuples {[from_mask(s) for s in maximal]}")
        if m.zero_defect_union(b) != maximal[0]:
            _fail("union of BK-subtuples is not the maximal one")
        sizes.add(_popcount(maximal[0]))
    if len(sizes) != 1:
        _fail(f"maximal BK-subtuples of bases have sizes {sorted(sizes)}")


@check("cyclic_bases_bk", "in a cyclic subtuple every basis is BK")
def _cyclic_bases(c: Case):
    t, m = c.t, c.m
    ran = False
    for s in range(1, t.full_mask + 1):
        if not m.is_cyclic_mask(s, check=False):
            continue
        ran = True
        r = m.rank_mask(s)
        for b in submasks(s):
            if _popcount(b) == r and m.is_independent_mask(b) and t.defect_mask(b) != 0:
                _fail(f"basis {from_mask(b)} of cyclic {from_mask(s)} has defect {t.defect_mask(b)}")
    if not ran:
        raise Skip


@check("essential_iff_cyclic", "a subtuple is essential iff it is a union of circuits")
def _essential_cyclic(c: Case):
    t, m = c.t, c.m
    for s in range(1, t.full_mask + 1):
        d = t.defect_mask(s)
        essential = all(t.defect_mask(sub) > d for sub in submasks(s) if sub != s)
        if essential != m.is_cyclic_mask(s, check=False):
            _fail(f"{from_mask(s)}: essential={essential}, cyclic={not essential}")


@check("union_with_circuit", "adding a circuit not already inside lowers the defect")
def _union_circuit(c: Case):
    t = c.t
    circuits = c.m.circuits_masks()
    if not circuits:
        raise Skip
    for k in range(t.full_mask + 1):
        dk = t.defect_mask(k)
        for cm in circuits:
            if cm & k != cm and t.defect_mask(k | cm) >= dk:
                _fail(f"defect of {from_mask(k)} does not drop after adding circuit {from_mask(cm)}")


@check("maximal_essential", "union of circuits is the unique inclusion-minimal subtuple of minimal defect")
def _max_essential(c: Case):
    if c.independent:
        raise Skip
    t = c.t
    ess = c.m.maximal_essential_subtuple()
    best = min(t.defect_mask(s) for s in range(t.full_mask + 1))
    if t.defect_mask(t.mask(ess)) != best:
        _fail(f"maximal essential {ess} does not attain the minimal defect {best}")


@check("quotient_by_essential_independent", "quotient by the maximal essential subtuple is independent")
def _quot_essential(c: Case):
    if c.independent:
        raise Skip
    ess = c.t.mask(c.m.maximal_essential_subtuple())
    q = c.quotient(ess)
    qm = MinkowskiMatroid(q)
    if not qm.is_independent_mask(q.full_mask):
        _fail(f"quotient by {from_mask(ess)} is dependent")


@check("quotient_defect_identity", "defect of a quotient: d(s/k) = d(s u k) - d(k)")
def _quot_identity(c: Case):
    t, n = c.t, len(c.t)
    for k in range(t.full_mask + 1):
        q = c.quotient(k)
        pos = _embed(k, n)
        dk = t.defect_mask(k)
        for qs in range(q.full_mask + 1):
            if q.defect_mask(qs) != t.defect_mask(_lift(qs, pos) | k) - dk:
                _fail(f"defect identity fails for s={from_mask(_lift(qs, pos))}, k={from_mask(k)}")


@check("quotient_relations", "<n>/<k> = <n/k> and iterated quotients agree")
def _quot_relations(c: Case):
    t, n = c.t, len(c.t)
    full_dim = t.span_dim_mask(t.full_mask)
    for k in range(t.full_mask + 1):
        q = c.quotient(k)
        if q.span_dim_mask(q.full_mask) != full_dim - t.span_dim_mask(k):
            _fail(f"dim <n/k> != dim <n> - dim <k> for k={from_mask(k)}")
        if not k:
            continue
        for h in {k & (k - 1), k & ~(1 << (k.bit_length() - 1))}:
            qh = c.quotient(h)
            pos_h = _embed(h, n)
            k_in_qh = [j for j, i in enumerate(pos_h) if k >> i & 1]
            double = quotient_tuple(qh, k_in_qh)
            if double.dims != q.dims:
                _fail(f"(n/h)/(k/h) dims {double.dims} != n/k dims {q.dims} for h={from_mask(h)}, k={from_mask(k)}")
            for a, b in itertools.combinations(range(len(q)), 2):
                pair = 1 << a | 1 << b
                if double.span_dim_mask(pair) != q.span_dim_mask(pair):
                    _fail(f"iterated quotient pair dims differ for h={from_mask(h)}, k={from_mask(k)}")


@check("quotient_is_contraction", "for a BK-subtuple k, M(n/k) is the contraction of M(n) by k")
def _quot_contraction(c: Case):
    t, m, n = c.t, c.m, len(c.t)
    ran = False
    for k in range(1, t.full_mask + 1):
        if t.defect_mask(k) != 0 or not m.is_independent_mask(k):
            continue
        ran = True
        q = c.quotient(k)
        qm = MinkowskiMatroid(q)
        con = m.contract(from_mask(k))
        pos = _embed(k, n)
        for qs in range(q.full_mask + 1):
            if qm.is_independent_mask(qs) != con.is_independent_mask(_lift(qs, pos)):
                _fail(f"M(n/k) and M/k disagree on {from_mask(_lift(qs, pos))} for k={from_mask(k)}")
    if not ran:
        raise Skip


# -- BK structure ------------------------------------------------------------

@check("bk_lattice", "BK-subtuples of an independent tuple are closed under union and intersection "
       "and their Birkhoff poset reproduces the lattice")
def _bk_lattice(c: Case):
    if not c.independent:
        raise Skip
    lat = bk.bk_sublattice(c.t)
    P = bk.birkhoff_poset(lat)
    if len(P):
        back = bk.birkhoff_poset(bk.bk_sublattice(bk.realize_poset(P, c.t.field)))
        if not back.is_isomorphic(P):
            _fail("realizing the Birkhoff poset does not reproduce it")


@check("bk_quotient_bijection", "for BK k in independent n, BK-subtuples of n/k match BK-subtuples containing k")
def _bk_bijection(c: Case):
    if not c.independent:
        raise Skip
    t, n = c.t, len(c.t)
    ran = False
    for k in range(1, t.full_mask + 1):
        if t.defect_mask(k) != 0:
            continue
        ran = True
        q = c.quotient(k)
        pos = _embed(k, n)
        upstairs = {s for s in range(t.full_mask + 1) if s & k == k and t.defect_mask(s) == 0}
        downstairs = {_lift(qs, pos) | k for qs in range(q.full_mask + 1) if q.defect_mask(qs) == 0}
        if upstairs != downstairs:
            _fail(f"BK-subtuple correspondence fails for k={from_mask(k)}")
    if not ran:
        raise Skip


@check("bk_decomposition", "a BK-tuple splits uniquely into blocks with irreducible graded quotients")
def _bk_decomposition(c: Case):
    if not c.is_bk or len(c.t) == 0:
        raise Skip
    dec = c.decomposition()
    blocks = [c.t.mask(b) for b in dec.blocks.values()]
    if sum(blocks) != c.t.full_mask or any(a & b for a, b in itertools.combinations(blocks, 2)):
        _fail("blocks do not partition the tuple")


@check("bk_filtration", "maximal BK-filtrations from different linear extensions have the same graded shape")
def _bk_filtration(c: Case):
    if not c.is_bk or len(c.t) == 0:
        raise Skip
    dec = c.decomposition()
    P = dec.poset
    lo = bk.maximal_bk_filtration(c.t, [P.labels[i] for i in P.linear_extension()], dec)
    hi = bk.maximal_bk_filtration(c.t, [P.labels[i] for i in P.linear_extension(reverse=True)], dec)
    if lo.shape() != hi.shape():
        _fail(f"graded shapes {lo.shape()} and {hi.shape()} differ")


@check("bk_coordinate_basis", "a BK-tuple has a basis in which every BK-subtuple spans a coordinate subspace")
def _bk_coordinates(c: Case):
    if not c.is_bk or len(c.t) == 0:
        raise Skip
    bk.coordinate_basis(c.t, c.decomposition())


@check("bk_polymatroid", "spans of the principal BK-subtuples have a distributive lattice of flats")
def _bk_polymatroid(c: Case):
    if not c.is_bk or len(c.t) == 0:
        raise Skip
    dec = c.decomposition()
    spans = SubspaceTuple(c.t.field, c.t.ambient_dim, tuple(c.t.span(a) for a in dec.poset.labels))
    lat = pm.flats(spans)
    if pm.forbidden_sublattice(lat) is not None or not lat.is_distributive():
        _fail("lattice of flats of the principal spans is not distributive")


# -- polymatroid -----------------------------------------------------------------

@check("poly_submodular", "the realized rank function is normalized, monotone and submodular")
def _poly_submodular(c: Case):
    t = c.t
    r = [t.span_dim_mask(s) for s in range(t.full_mask + 1)]
    if r[0] != 0:
        _fail("rank of the empty set is not 0")
    for a in range(len(r)):
        for b in range(a, len(r)):
            if r[a | b] + r[a & b] > r[a] + r[b]:
                _fail(f"submodularity fails for {from_mask(a)}, {from_mask(b)}")
            if a & b == a and r[a] > r[b]:
                _fail(f"rank not monotone on {from_mask(a)} <= {from_mask(b)}")


@check("poly_flats", "closure is a closure operator and its fixed points are the flats")
def _poly_flats(c: Case):
    t = c.t
    P = pm.Polymatroid(t)
    lat = pm.FlatLattice(P)
    flat_set = set(lat.masks)
    for s in range(t.full_mask + 1):
        cl = P.closure_mask(s)
        if cl & s != s or P.closure_mask(cl) != cl or cl not in flat_set:
            _fail(f"closure of {from_mask(s)} misbehaves")
        if P.rank_mask(cl) != P.rank_mask(s):
            _fail(f"closure of {from_mask(s)} changes rank")
    for f in lat.masks:
        r = P.rank_mask(f)
        if any(P.rank_mask(f | 1 << j) == r for j in range(len(t)) if not f >> j & 1):
            _fail(f"flat {from_mask(f)} is not maximal for its rank")


@check("dual_rank_equality", "the orthogonal configuration realizes the same polymatroid")
def _dual_rank(c: Case):
    pm.dual_realization(c.t)


@check("dual_partition", "points of the dual space split into constructible blocks indexed by flats")
def _dual_partition(c: Case):
    t = c.t
    if not t.field.is_finite or t.field.p ** t.ambient_dim > c.partition_cap:
        raise Skip
    part = pm.dual_partition(t, cap=c.partition_cap)
    if part.unassigned or sum(part.sizes().values()) != t.field.p ** t.ambient_dim:
        _fail("partition does not cover the dual space")
    zero = tuple([0] * t.ambient_dim)
    if zero not in part.blocks[tuple(range(len(t)))]:
        _fail("the origin is not in the block of the top flat")


@check("distributive_decomposition", "a returned basis makes every entry coordinate and keeps the flats; "
       "none is returned only if the flats or the subspace lattice generated by the entries are not distributive")
def _distributive(c: Case):
    dec = pm.distributive_decomposition(c.t)
    if dec is None:
        if pm.forbidden_sublattice(pm.flats(c.t)) is None:
            members = pm._generated_lattice(c.t.entries, c.t.field, c.t.ambient_dim, 4096)
            if pm._lattice_is_distributive(members):
                _fail("no decomposition although the generated subspace lattice is distributive")
        return
    moved = bk.apply_basis_change(c.t, dec.matrix)
    if not all(L.is_coordinate() for L in moved.entries):
        _fail("entries are not coordinate in the returned basis")
    if pm.flats(moved).masks != pm.flats(c.t).masks:
        _fail("change of basis altered the lattice of flats")


# -- running ------------------------------------------------------------------------

@dataclass
class CheckStats:
    run: int = 0
    skipped: int = 0
    failed: int = 0
    seconds: float = 0.0
    message: str | None = None
    counterexample: str | None = None


@dataclass
class SuiteReport:
    config: GenConfig
    total_cases: int = 0
    checks: dict = dc_field(default_factory=dict)  # name -> CheckStats

    @property
    def failures(self) -> int:
        return sum(s.failed for s in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "config": {
                "field": str(cfg.field), "ambient_dim": cfg.ambient_dim, "n": cfg.n,
                "max_generators_per_subspace": cfg.max_generators_per_subspace, "seed": cfg.seed, "cases": cfg.cases,
            },
            "total_cases": self.total_cases,
            "failures": self.failures,
            "checks": {
                name: {
                    "statement": CHECKS[name].statement,
                    "run": s.run, "skipped": s.skipped, "failed": s.failed,
                    **({"message": s.message, "counterexample": s.counterexample} if s.failed else {}),
                }
                for name, s in sorted(self.checks.items())
            },
        }

    def render(self) -> str:
        lines = [f"theorem suite: {self.total_cases} cases over {self.config.field}, seed {self.config.seed}"]
        for name, s in sorted(self.checks.items()):
            verdict = "FAIL" if s.failed else "ok"
            lines.append(f"  {verdict:4} {name:36} run={s.run:<6} skipped={s.skipped:<6} failed={s.failed}")
            if s.failed:
                lines.append(f"       first failure: {s.message}")
        lines.append("PASS" if self.ok else f"FAIL ({self.failures} failures)")
        return "\n".join(lines)


def run_check(name: str, case: Case) -> str | None:
    """Run one check; return None on pass, ``"skip"``, or a failure message."""
    try:
        CHECKS[name].fn(case)
    except Skip:
        return "skip"
    except Exception as exc:  # failures are data here
        return f"{type(exc).__name__}: {exc}" or type(exc).__name__
    return None


def run_suite(cfg: GenConfig, checks: list[str] | None = None) -> SuiteReport:
    names = list(CHECKS) if checks is None else list(checks)
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}")
    report = SuiteReport(cfg, checks={name: CheckStats() for name in names})
    for i in range(cfg.cases):
        t = random_tuple(cfg, i)
        case = Case(t, cfg.partition_cap)
        report.total_cases += 1
        for name in names:
            stats = report.checks[name]
            start = time.perf_counter()
            outcome = run_check(name, case)
            stats.seconds += time.perf_counter() - start
            if outcome == "skip":
                stats.skipped += 1
                continue
            stats.run += 1
            if outcome is not None:
                stats.failed += 1
                if stats.counterexample is None:
                    stats.message = outcome
                    stats.counterexample = dump_tuple(
                        t, [f"check: {name}", f"seed: {cfg.seed}", f"case: {i}", outcome.splitlines()[0]])
    return report


def replay(name: str, tuple_text: str) -> str | None:
    """Re-run a check on a serialized counterexample."""
    return run_check(name, Case(parse_tuple(tuple_text)))
