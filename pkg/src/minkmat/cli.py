"""``minkmat`` command line: analyze, bk, realize, polymatroid, verify.

Exit status is 0 on success, 1 when a verification fails and 2 for bad
input (unparsable files, unmet preconditions, exceeded caps).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

import yaml

from . import bk, polymatroid as pm
from .errors import GuardError, VerificationError
from .formats import ParseError, dump_tuple, hasse_dot, parse_poset, parse_tuple, set_id
from .matroid import MinkowskiMatroid, rank_mutation
from .suite import CHECKS, GenConfig, parse_field, run_suite
from .tuples import classify, quotient_tuple

MUTATION_ENV = "MINKMAT_TEST_MUTATION"


class InputError(Exception):
    pass


def _scalar(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _sets(sets) -> list[list[int]]:
    return [list(s) for s in sets]


def _emit(doc: dict, args) -> None:
    if args.json:
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        text = yaml.safe_dump(doc, sort_keys=True, default_flow_style=None, width=100)
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_tuple(path: str):
    try:
        return parse_tuple(_read(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _write_dot(directory: str | None, name: str, text: str) -> None:
    if directory is None:
        return
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    (d / f"{name}.dot").write_text(text)


def _parse_subset(text: str) -> tuple[int, ...]:
    text = text.strip().strip("{}")
    try:
        return tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad subset {text!r}; use e.g. 0,2") from None


# -- commands ------------------------------------------------------------------

def cmd_analyze(args) -> int:
    t = _load_tuple(args.tuple_file)
    m = MinkowskiMatroid(t)
    full = tuple(range(len(t)))
    ess = m.maximal_essential_subtuple()
    doc = {
        "field": str(t.field),
        "ambient_dim": t.ambient_dim,
        "n": len(t),
        "dims": list(t.dims),
        "span_dim": t.span_dim_mask(t.full_mask),
        "defect": t.defect_mask(t.full_mask),
        "rank": m.rank(),
        "bases": _sets(m.bases()),
        "circuits": _sets(m.circuits()),
        "loops": list(m.loops()),
        "coloops": list(m.coloops()),
        "basis_defect": m.basis_defect(),
        "max_essential": list(ess),
    }
    if len(t):
        doc["class"] = _class_doc(t, full)
    if ess:
        q = quotient_tuple(t, ess)
        doc["quotient_by_essential_independent"] = MinkowskiMatroid(q).is_independent_mask(q.full_mask)
    if args.subset:
        doc["subsets"] = {set_id(s): _class_doc(t, s) for s in args.subset}
    _emit(doc, args)
    return 0


def _class_doc(t, s) -> dict:
    if not s:
        return {"defect": 0, "independent": True, "bk": True}
    c = classify(t, s)
    return {k: getattr(c, k) for k in ("independent", "bk", "irreducible", "essential", "cyclic", "defect")}


def cmd_bk(args) -> int:
    t = _load_tuple(args.tuple_file)
    lat = bk.bk_sublattice(t)
    dec = bk.bk_decomposition(t)
    P = dec.poset
    filt = bk.maximal_bk_filtration(t, decomposition=dec)
    matrix = bk.coordinate_basis(t, dec)
    doc = {
        "bk_lattice": _sets(lat.family),
        "poset": {
            "elements": [set_id(a) for a in P.labels],
            "covers": [[set_id(a), set_id(b)] for a, b in P.cover_pairs()],
        },
        "blocks": {set_id(a): list(dec.blocks[a]) for a in P.labels},
        "graded_dims": {set_id(a): list(dec.graded[a].dims) for a in P.labels},
        "filtration": _sets(filt.chain),
        "coordinate_basis": [[_scalar(x) for x in row] for row in matrix],
    }
    _write_dot(args.dot, "bk_lattice", hasse_dot("bk_lattice", lat.family, lat.hasse))
    _write_dot(args.dot, "bk_poset", hasse_dot("bk_poset", P.labels, P.cover_pairs()))
    _emit(doc, args)
    return 0


def cmd_realize(args) -> int:
    try:
        P = parse_poset(_read(args.poset_file))
        field = parse_field(args.field)
    except (ParseError, ValueError) as exc:
        raise InputError(f"{args.poset_file}: {exc}") from None
    t = bk.realize_poset(P, field)
    comments = [f"realization of {len(P)}-element poset"]
    comments += [f"subspace {i}: {a}" for i, a in enumerate(P.labels)]
    text = dump_tuple(t, comments)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_polymatroid(args) -> int:
    t = _load_tuple(args.tuple_file)
    want_flats = args.flats or not (args.dual or args.partition)
    doc: dict = {"n": len(t), "field": str(t.field), "ambient_dim": t.ambient_dim}
    if want_flats:
        lat = pm.flats(t)
        bad = pm.forbidden_sublattice(lat)
        doc["flats"] = [{"flat": list(f), "rank": pm.poly_rank(t, f)} for f in lat.flats]
        doc["distributive"] = bad is None
        if bad is not None:
            doc["forbidden_sublattice"] = {"kind": bad[0], "members": _sets(bad[1])}
        _write_dot(args.dot, "flats", hasse_dot("flats", lat.flats, lat.hasse))
    if args.dual:
        pm.dual_realization(t)
        doc["rank_equality"] = "PASS"
    if args.partition:
        if not t.field.is_finite:
            raise InputError("--partition needs a tuple over GF(p)")
        part = pm.dual_partition(t, cap=args.cap)
        doc["partition"] = {
            "points": part.p ** part.ambient_dim,
            "block_sizes": {set_id(f): k for f, k in part.sizes().items()},
        }
    _emit(doc, args)
    return 0


_VERIFY_DEFAULTS = {"seed": 0, "cases": 100, "field": "gf2", "dim": 4, "n": 6,
                    "max_generators": None, "checks": None}


def _verify_config(args) -> tuple[GenConfig, list | None]:
    conf = dict(_VERIFY_DEFAULTS)
    if args.config:
        try:
            loaded = yaml.safe_load(_read(args.config)) or {}
        except yaml.YAMLError as exc:
            raise InputError(f"{args.config}: {exc}") from None
        if not isinstance(loaded, dict):
            raise InputError(f"{args.config}: expected a mapping")
        unknown = set(loaded) - set(conf)
        if unknown:
            raise InputError(f"{args.config}: unknown keys {sorted(unknown)}")
        conf.update(loaded)
    for key in conf:
        val = getattr(args, key, None)
        if val is not None:
            conf[key] = val
    try:
        cfg = GenConfig(field=parse_field(str(conf["field"])), ambient_dim=int(conf["dim"]), n=int(conf["n"]),
                        max_generators_per_subspace=conf["max_generators"], seed=int(conf["seed"]),
                        cases=int(conf["cases"]))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    checks = conf["checks"]
    if isinstance(checks, str):
        checks = [c for c in checks.split(",") if c]
    for c in checks or ():
        if c not in CHECKS:
            raise InputError(f"unknown check {c!r}; see --list")
    return cfg, checks


def cmd_verify(args) -> int:
    if args.list:
        for name, chk in CHECKS.items():
            print(f"{name}: {chk.statement}")
        return 0
    cfg, checks = _verify_config(args)
    mutation = os.environ.get(MUTATION_ENV)
    if mutation not in (None, "", "rank_off_by_one"):
        raise InputError(f"{MUTATION_ENV}={mutation!r} is not a known mutation")
    if mutation:
        with rank_mutation(1):
            report = run_suite(cfg, checks)
    else:
        report = run_suite(cfg, checks)
    print(report.render())
    if args.report:
        Path(args.report).write_text(yaml.safe_dump(report.to_dict(), sort_keys=True))
    if not report.ok:
        out = Path(args.counterexample_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name, stats in sorted(report.checks.items()):
            if stats.counterexample:
                path = out / f"counterexample-{name}.tuple"
                path.write_text(stats.counterexample)
                print(f"counterexample for {name}: {path}")
        return 1
    return 0


# -- entry point -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="minkmat", description="Minkowski matroids of subspace tuples.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of YAML")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="matroid report for a tuple file")
    p.add_argument("tuple_file")
    p.add_argument("--subset", action="append", type=_parse_subset, metavar="I,J,...",
                   help="also classify this subtuple (repeatable)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bk", parents=[common], help="BK lattice, poset, blocks and coordinate basis")
    p.add_argument("tuple_file")
    p.add_argument("--dot", metavar="DIR", help="write Hasse diagrams as DOT files into DIR")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bk)

    p = sub.add_parser("realize", parents=[common], help="tuple file whose BK poset is the given poset")
    p.add_argument("poset_file")
    p.add_argument("--field", default="rational", help="rational or gf<p> (default rational)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("polymatroid", parents=[common], help="flats, dual realization and dual partition")
    p.add_argument("tuple_file")
    p.add_argument("--flats", action="store_true")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--partition", action="store_true")
    p.add_argument("--cap", type=int, default=pm.DEFAULT_POINT_CAP, help="max points for --partition")
    p.add_argument("--dot", metavar="DIR")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_polymatroid)

    p = sub.add_parser("verify", parents=[common], help="run the randomized theorem suite")
    p.add_argument("--config", help="YAML file with seed/cases/field/dim/n/max_generators/checks")
    p.add_argument("--seed", type=int)
    p.add_argument("--cases", type=int)
    p.add_argument("--field")
    p.add_argument("--dim", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-generators", dest="max_generators", type=int)
    p.add_argument("--checks", help="comma-separated check names (default all)")
    p.add_argument("--list", action="store_true", help="list registered checks and exit")
    p.add_argument("--report", help="also write the report as YAML to this file")
    p.add_argument("--counterexample-dir", default=".", help="where failing cases are written")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"minkmat: verification failed: {exc}", file=sys.stderr)
        return 1
    except bk.NotBKError as exc:
        print(f"minkmat: {exc}", file=sys.stderr)
        return 2
    except (InputError, GuardError, ValueError) as exc:
        print(f"minkmat: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
