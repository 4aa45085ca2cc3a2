"""Exact linear algebra over the rationals and prime fields.

Vectors are plain tuples of scalars: ``Fraction`` over Q, ``int`` in
``range(p)`` over GF(p).  Subspaces are stored in reduced row-echelon form so
that equal subspaces compare (and hash) equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "FieldSpec",
    "Subspace",
    "QuotientContext",
    "RATIONALS",
    "gf",
    "rref",
    "rank",
    "canonicalize",
    "sum_",
    "intersect",
    "quotient_context",
    "project",
    "orthogonal_complement",
    "inverse",
    "matmul",
    "Echelon",
    "transform",
    "intersect_kernel",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The rationals when ``p`` is None, otherwise GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus must be prime")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    def coerce(self, x) -> int | Fraction:
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def inv(self, a):
        if self.p is None:
            return 1 / a
        return pow(a, -1, self.p)

    def elements(self):
        """All field elements; only for finite fields."""
        if self.p is None:
            raise ValueError("the rationals are not enumerable")
        return range(self.p)

    def __str__(self):
        return "rational" if self.p is None else f"gf {self.p}"


RATIONALS = FieldSpec()


def gf(p: int) -> FieldSpec:
    return FieldSpec(p)


def _axpy(field: FieldSpec, y: list, a, x: Sequence, start: int = 0) -> None:
    """y -= a * x, in place, from column ``start``."""
    p = field.p
    if p is None:
        for c in range(start, len(y)):
            if x[c]:
                y[c] -= a * x[c]
    else:
        for c in range(start, len(y)):
            if x[c]:
                y[c] = (y[c] - a * x[c]) % p


def _scale(field: FieldSpec, x: list, a, start: int = 0) -> None:
    p = field.p
    for c in range(start, len(x)):
        x[c] = x[c] * a if p is None else (x[c] * a) % p


class Echelon:
    """Incremental row-echelon basis, used for fast rank and membership tests.

    Rows have a leading 1 at their pivot and zeros before it; they are not
    reduced above other pivots, which keeps insertion cheap.
    """

    __slots__ = ("field", "ncols", "rows")

    def __init__(self, field: FieldSpec, ncols: int, rows: dict | None = None):
        self.field = field
        self.ncols = ncols
        self.rows: dict[int, list] = dict(rows) if rows else {}

    def copy(self) -> "Echelon":
        return Echelon(self.field, self.ncols, self.rows)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Sequence) -> list:
        """Residue of ``v`` after elimination against the stored rows."""
        w = list(v)
        rows = self.rows
        for c in range(self.ncols):
            if w[c] and c in rows:
                _axpy(self.field, w, w[c], rows[c], c)
        return w

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return True if it enlarged the span."""
        w = list(v)
        rows = self.rows
        field = self.field
        for c in range(self.ncols):
            if not w[c]:
                continue
            if c in rows:
                _axpy(field, w, w[c], rows[c], c)
            else:
                _scale(field, w, field.inv(w[c]), c)
                rows[c] = w
                return True
        return False

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))


def rref(rows: Iterable[Sequence], field: FieldSpec, ncols: int | None = None):
    """Reduced row-echelon form.  Returns ``(rows, pivot_columns)``."""
    m = [[field.coerce(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    for r in m:
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)} in a matrix with {ncols} columns")
    pivots = []
    piv_r = 0
    for c in range(ncols):
        for i in range(piv_r, len(m)):
            if m[i][c]:
                break
        else:
            continue
        m[piv_r], m[i] = m[i], m[piv_r]
        _scale(field, m[piv_r], field.inv(m[piv_r][c]), c)
        for i in range(len(m)):
            if i != piv_r and m[i][c]:
                _axpy(field, m[i], m[i][c], m[piv_r], c)
        pivots.append(c)
        piv_r += 1
        if piv_r == len(m):
            break
    return [tuple(r) for r in m[:piv_r]], pivots


def rank(rows: Iterable[Sequence], field: FieldSpec, ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    e = Echelon(field, len(rows[0]) if ncols is None else ncols)
    return sum(e.add([field.coerce(x) for x in r]) for r in rows)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field^ambient_dim`` given by its RREF basis."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple[tuple, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(c for c, x in enumerate(r) if x) for r in self.basis)

    def echelon(self) -> Echelon:
        return Echelon(self.field, self.ambient_dim, zip(self.pivots, map(list, self.basis)))

    def contains(self, v: Sequence) -> bool:
        return self.echelon().contains([self.field.coerce(x) for x in v])

    def is_coordinate(self) -> bool:
        """True if spanned by standard basis vectors."""
        return all(sum(1 for x in r if x) == 1 for r in self.basis)

    def __repr__(self):
        rows = ", ".join("(" + ",".join(str(x) for x in r) + ")" for r in self.basis)
        return f"Subspace<{self.field}, {self.ambient_dim}>[{rows}]"

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, ())

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return canonicalize(_identity(field, ambient_dim), field, ambient_dim)

    @classmethod
    def coordinate(cls, field: FieldSpec, ambient_dim: int, coords: Iterable[int]) -> "Subspace":
        ident = _identity(field, ambient_dim)
        return canonicalize([ident[i] for i in coords], field, ambient_dim)


def _identity(field: FieldSpec, n: int) -> list[list]:
    return [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]


def canonicalize(rows: Iterable[Sequence], field: FieldSpec, ambient_dim: int) -> Subspace:
    rows = list(rows)
    for r in rows:
        if len(r) != ambient_dim:
            raise ValueError(f"row {tuple(r)} does not have length {ambient_dim}")
    basis, _ = rref(rows, field, ambient_dim)
    return Subspace(field, ambient_dim, tuple(basis))


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.ambient_dim != b.ambient_dim:
        raise ValueError(
            f"incompatible subspaces: {a.field}^{a.ambient_dim} vs {b.field}^{b.ambient_dim}"
        )


def sum_(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return canonicalize(a.basis + b.basis, a.field, a.ambient_dim)


def orthogonal_complement(s: Subspace) -> Subspace:
    """Annihilator of ``s`` under the standard coordinate pairing."""
    field, d = s.field, s.ambient_dim
    pivots = s.pivots
    free = [c for c in range(d) if c not in pivots]
    rows = []
    for f in free:
        v = [field.zero()] * d
        v[f] = field.one()
        for r, pc in zip(s.basis, pivots):
            v[pc] = field.coerce(-r[f])
        rows.append(v)
    return canonicalize(rows, field, d)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    # A ∩ B = (A^⊥ + B^⊥)^⊥
    return orthogonal_complement(sum_(orthogonal_complement(a), orthogonal_complement(b)))


@dataclass(frozen=True)
class QuotientContext:
    """Projection ``field^ambient_dim -> field^ambient_dim / kernel``.

    Quotient coordinates are the non-pivot columns of the kernel's RREF;
    ``projection`` has one row per quotient coordinate.
    """

    ambient_dim: int
    kernel: Subspace
    projection: tuple[tuple, ...]

    @property
    def quotient_dim(self) -> int:
        return self.ambient_dim - self.kernel.dim

    def apply(self, v: Sequence) -> tuple:
        field = self.kernel.field
        if field.p is None:
            return tuple(sum(m * x for m, x in zip(row, v) if m and x) for row in self.projection)
        p = field.p
        return tuple(sum(m * x for m, x in zip(row, v)) % p for row in self.projection)


def quotient_context(ambient_dim: int, kernel: Subspace) -> QuotientContext:
    if kernel.ambient_dim != ambient_dim:
        raise ValueError("kernel does not live in the given ambient space")
    field = kernel.field
    pivots = kernel.pivots
    proj = []
    for f in range(ambient_dim):
        if f in pivots:
            continue
        row = [field.zero()] * ambient_dim
        row[f] = field.one()
        for kr, pc in zip(kernel.basis, pivots):
            row[pc] = field.coerce(-kr[f])
        proj.append(tuple(row))
    return QuotientContext(ambient_dim, kernel, tuple(proj))


def project(ctx: QuotientContext, s: Subspace) -> Subspace:
    if s.ambient_dim != ctx.ambient_dim or s.field != ctx.kernel.field:
        raise ValueError("subspace does not live in the quotient's ambient space")
    return canonicalize([ctx.apply(r) for r in s.basis], s.field, ctx.quotient_dim)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], field: FieldSpec) -> list[tuple]:
    cols = list(zip(*b))
    out = []
    for row in a:
        r = tuple(field.coerce(sum(x * y for x, y in zip(row, col))) for col in cols)
        out.append(r)
    return out


def inverse(m: Sequence[Sequence], field: FieldSpec) -> list[tuple]:
    n = len(m)
    aug = [list(row) + e for row, e in zip(m, _identity(field, n))]
    red, pivots = rref(aug, field, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [tuple(r[n:]) for r in red]


def transform(s: Subspace, m: Sequence[Sequence]) -> Subspace:
    """Image of ``s`` under ``v -> m v`` (column-vector convention)."""
    rows = [tuple(sum(a * x for a, x in zip(row, v)) for row in m) for v in s.basis]
    return canonicalize(rows, s.field, len(m))


def intersect_kernel(a: Subspace, b: Subspace) -> Subspace:
    """A ∩ B from the left null space of the stacked bases.

    Independent of :func:`intersect`, which goes through complements.
    """
    _check_compatible(a, b)
    stacked = a.basis + b.basis
    if not a.basis or not b.basis:
        return Subspace.zero(a.field, a.ambient_dim)
    # c with c @ stacked == 0; then c[:dim a] @ A lies in both spans
    transposed = canonicalize(list(zip(*stacked)), a.field, len(stacked))
    null = orthogonal_complement(transposed)
    field = a.field
    rows = []
    for c in null.basis:
        rows.append(tuple(
            field.coerce(sum(ci * r[j] for ci, r in zip(c[:a.dim], a.basis)))
            for j in range(a.ambient_dim)))
    return canonicalize(rows, field, a.ambient_dim)
