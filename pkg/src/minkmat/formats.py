"""Plain-text tuple and poset files.

Tuple file::

    # LINES_IN_PLANE: two equal lines inside a plane
    field rational        # or: field gf 5
    dim 2
    subspace
    1 0
    subspace
    1 0
    subspace
    1 0
    0 1

A ``subspace`` line with no rows after it is the zero subspace.

Poset file::

    elements a b c
    a < b
    a < c
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from .field import RATIONALS, FieldSpec, gf
from .poset import Poset
from .tuples import SubspaceTuple

__all__ = ["ParseError", "parse_tuple", "dump_tuple", "parse_poset", "dump_poset", "set_id", "hasse_dot"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks, col = [], 0
        for tok in line.split():
            col = line.index(tok, col)
            toks.append((tok, col + 1))
            col += len(tok)
        yield lineno, toks


def parse_tuple(text: str) -> SubspaceTuple:
    field: FieldSpec | None = None
    dim: int | None = None
    gens: list[list[tuple]] = []
    for lineno, toks in _tokens(text):
        head, col = toks[0]
        if head == "field":
            if field is not None:
                raise ParseError("duplicate field line", lineno, col)
            args = [t for t, _ in toks[1:]]
            if args == ["rational"]:
                field = RATIONALS
            elif len(args) == 2 and args[0] == "gf":
                try:
                    field = gf(int(args[1]))
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, toks[2][1]) from None
            else:
                raise ParseError("expected 'field rational' or 'field gf <p>'", lineno, col)
        elif head == "dim":
            if dim is not None:
                raise ParseError("duplicate dim line", lineno, col)
            if len(toks) != 2 or not toks[1][0].isdigit():
                raise ParseError("expected 'dim <non-negative integer>'", lineno, col)
            dim = int(toks[1][0])
        elif head == "subspace":
            if field is None or dim is None:
                raise ParseError("'field' and 'dim' must precede the first subspace", lineno, col)
            if len(toks) != 1:
                raise ParseError("unexpected text after 'subspace'", lineno, toks[1][1])
            gens.append([])
        else:
            if not gens:
                raise ParseError(f"unexpected {head!r}; rows belong after a 'subspace' line", lineno, col)
            if len(toks) != dim:
                raise ParseError(f"row has {len(toks)} entries, expected {dim}", lineno, col)
            row = []
            for tok, c in toks:
                try:
                    row.append(int(tok))
                except ValueError:
                    raise ParseError(f"{tok!r} is not an integer", lineno, c) from None
            gens[-1].append(tuple(field.coerce(x) for x in row))
    if field is None:
        raise ParseError("missing 'field' line", 1)
    if dim is None:
        raise ParseError("missing 'dim' line", 1)
    return SubspaceTuple.from_generators(field, dim, gens)


def _int_row(row, field: FieldSpec) -> list[int]:
    if field.p is not None:
        return [int(x) for x in row]
    den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * den) for x in row]


def dump_tuple(t: SubspaceTuple, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"field {t.field}")
    lines.append(f"dim {t.ambient_dim}")
    for L in t.entries:
        lines.append("subspace")
        for row in L.basis:
            lines.append(" ".join(str(x) for x in _int_row(row, t.field)))
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> Poset:
    labels: list[str] | None = None
    pairs = []
    for lineno, toks in _tokens(text):
        head, col = toks[0]
        if head == "elements":
            if labels is not None:
                raise ParseError("duplicate elements line", lineno, col)
            labels = [t for t, _ in toks[1:]]
            if len(set(labels)) != len(labels):
                raise ParseError("duplicate element label", lineno, col)
        elif len(toks) == 3 and toks[1][0] == "<":
            if labels is None:
                raise ParseError("'elements' must come first", lineno, col)
            a, b = toks[0][0], toks[2][0]
            for name, c in ((a, toks[0][1]), (b, toks[2][1])):
                if name not in labels:
                    raise ParseError(f"unknown element {name!r}", lineno, c)
            pairs.append((a, b))
        else:
            raise ParseError("expected 'elements ...' or 'a < b'", lineno, col)
    if labels is None:
        raise ParseError("missing 'elements' line", 1)
    try:
        return Poset.from_relations(labels, pairs)
    except ValueError as exc:
        raise ParseError(f"not a partial order: {exc}", 1) from None


def dump_poset(P: Poset) -> str:
    def name(a):
        return "".join(str(a).split()) if not isinstance(a, tuple) else "{" + ",".join(map(str, a)) + "}"

    lines = ["elements " + " ".join(name(a) for a in P.labels)]
    lines += [f"{name(a)} < {name(b)}" for a, b in P.cover_pairs()]
    return "\n".join(lines) + "\n"


def set_id(s) -> str:
    """Stable node name for an index set: ``{0,2}``."""
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def hasse_dot(name: str, nodes, edges, label=set_id) -> str:
    """Hasse diagram as DOT, edges drawn from lower to upper element."""
    out = [f"digraph {name} {{", "  rankdir=BT;"]
    out += [f'  "{label(v)}";' for v in nodes]
    out += [f'  "{label(a)}" -> "{label(b)}";' for a, b in edges]
    out.append("}")
    return "\n".join(out) + "\n"
