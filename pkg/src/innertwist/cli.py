"""Command-line interface.

    innertwist verify <file> [--json] [--skip-hopf] [--degree N]
    innertwist demo <name> [key=value ...] [--json] [--skip-hopf]
    innertwist oracle cqt <file> [--support PATTERN] [--samples a,b,...] [--json]
    innertwist tensoralg <file> --degree N [--json]

Exit status: 0 when no check fails, 1 when some check fails (or the oracle
finds nothing), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catcore import StructuralError
from .examples import EXAMPLES, ExampleSpec, build
from .fileformat import ParseError, parse_structure_file
from .report import SCHEMA_VERSION, Report
from .suite import SuiteOptions, run_suite, run_tasks, thread_count
from .tensoralg import BicharacterError, check_bicharacter, check_diagram_R, extend_bicharacter

__all__ = ["main", "build_parser"]

DEMO_ALIASES = {"kz3": ("kz", {"n": "3", "k": "1"}), "h4": ("sweedler", {})}


def _emit_report(rep: Report, as_json: bool) -> int:
    print(rep.to_json() if as_json else rep.to_text())
    return 0 if rep.passed else 1


def _load(path):
    try:
        return parse_structure_file(path)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except ParseError as exc:
        raise _InputError(f"{path}: {exc}") from None


class _InputError(Exception):
    pass


def _param(text: str):
    try:
        return Fraction(text)
    except ValueError:
        return text


def _parse_params(items):
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise _InputError(f"parameter {item!r} is not of the form key=value")
        params[key] = value
    return params


# --- subcommands


def cmd_verify(args) -> int:
    session = _load(args.file)
    if session.is_empty:
        return _emit_report(Report(), args.json)
    rep = run_suite(session, SuiteOptions(skip_hopf=args.skip_hopf, degree=args.degree))
    return _emit_report(rep, args.json)


def cmd_demo(args) -> int:
    name, params = DEMO_ALIASES.get(args.name, (args.name, {}))
    params = {**params, **_parse_params(args.params)}
    if name not in EXAMPLES:
        raise _InputError(f"unknown demo {args.name!r}; choose from "
                          f"{sorted(set(EXAMPLES) | set(DEMO_ALIASES))}")
    conv = {k: (int(v) if k in ("n", "k") else _param(v)) for k, v in params.items()}
    try:
        example = build(ExampleSpec(name, conv))
    except TypeError as exc:
        raise _InputError(f"bad parameters for {name}: {exc}") from None
    rep = run_suite(example, SuiteOptions(skip_hopf=args.skip_hopf))
    return _emit_report(rep, args.json)


def cmd_oracle(args) -> int:
    from .oracle import cqt_ansatz_solver, parse_support

    session = _load(args.file)
    if not session.centrals:
        raise _InputError(f"{args.file}: no central bialgebra declared")
    samples = tuple(_param(s) for s in args.samples.split(",")) if args.samples else (1,)
    results = {}
    for name, CB in session.centrals.items():
        try:
            support = parse_support(args.support, CB)
        except (ValueError, KeyError) as exc:
            raise _InputError(f"bad support pattern: {exc}") from None
        results[name] = cqt_ansatz_solver(session.ctx, CB, support, samples)
    if args.json:
        print(json.dumps({"schema": SCHEMA_VERSION, "candidates": {
            name: [{"r": c.describe(), "parameters": {k: str(v) for k, v in c.parameters.items()},
                    "free": list(c.free)} for c in cands]
            for name, cands in results.items()}}, indent=2))
    else:
        for name, cands in results.items():
            print(f"{name}: {len(cands)} CQT candidate(s)")
            for c in cands:
                print("  " + c.describe())
    return 0 if any(results.values()) else 1


def _functional_table(f):
    return {f.source.label(j): str(f.entry(0, j)) for j in range(f.source.dim)}


def cmd_tensoralg(args) -> int:
    session = _load(args.file)
    if not session.bicharacters:
        raise _InputError(f"{args.file}: no bicharacter seed declared")
    if args.degree < 2:
        raise _InputError("--degree must be at least 2")
    tables = {}
    tasks = []
    for name, seed in session.bicharacters.items():
        CC = session.central_coalgebras[name]
        try:
            bc = extend_bicharacter(session.ctx, CC, seed, args.degree)
        except BicharacterError as exc:
            rep = Report()
            rep.add(Report.boolean("bicharacter extension", False, name, {"reason": str(exc)}))
            tasks.append((name, lambda rep=rep: rep))
            continue
        tables[name] = [{"i": i, "j": j, "r": _functional_table(f)}
                        for (i, j), f in sorted(bc.r.items()) if i and j]
        tasks.append((name, lambda bc=bc, name=name: check_bicharacter(session.ctx, bc, name)
                      .extend(check_diagram_R(session.ctx, bc, name))))
    rep = run_tasks(tasks, thread_count())
    if args.json:
        doc = json.loads(rep.to_json())
        doc["degree"] = args.degree
        doc["tables"] = tables
        print(json.dumps(doc, indent=2))
    else:
        for name, rows in tables.items():
            print(f"r_(i,j) for {name}, degree {args.degree}:")
            for row in rows:
                nz = {k: v for k, v in row["r"].items() if v != "0"}
                print(f"  r_({row['i']},{row['j']}): " + ", ".join(f"{k}={v}" for k, v in nz.items()))
        print(rep.to_text())
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="innertwist",
                                description="Exact verification of central and CQT bialgebras.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run every applicable check on a structure file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true", help="emit a JSON report")
    v.add_argument("--skip-hopf", action="store_true", help="bialgebra-level checks only")
    v.add_argument("--degree", type=int, default=None,
                   help="truncation degree for tensor-algebra checks")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("demo", help="build a shipped example and run its suite")
    d.add_argument("name", help=f"one of {sorted(set(EXAMPLES) | set(DEMO_ALIASES))}")
    d.add_argument("params", nargs="*", help="key=value parameters, e.g. n=4 k=1")
    d.add_argument("--json", action="store_true")
    d.add_argument("--skip-hopf", action="store_true")
    d.set_defaults(func=cmd_demo)

    o = sub.add_parser("oracle", help="solve for structures on a file's bialgebras")
    osub = o.add_subparsers(dest="what", required=True)
    oc = osub.add_parser("cqt", help="CQT functionals with a given support")
    oc.add_argument("file")
    oc.add_argument("--support", default="all",
                    help="'all' or basis-label pairs 'a,b;c,d'")
    oc.add_argument("--samples", default=None,
                    help="comma-separated values for free parameters")
    oc.add_argument("--json", action="store_true")
    oc.set_defaults(func=cmd_oracle)

    t = sub.add_parser("tensoralg", help="extend a bicharacter seed and dump the r_(i,j) table")
    t.add_argument("file")
    t.add_argument("--degree", type=int, required=True)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_tensoralg)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (_InputError, StructuralError) as exc:
        print(f"innertwist: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
