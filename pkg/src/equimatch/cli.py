"""Command-line front end.

Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or input error,
3 failed cross-check.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .families import FAMILY_IDS, ENUMERATE_CEILING, FamilyError, FamilyParams, enumerate_members, instantiate
from .formats import FormatError, read_graphs, to_dot, to_graph6
from .graph import Graph, GraphError, is_bipartite, is_triangle_free
from .matching import (DEFAULT_ORACLE_CEILING, OracleCeilingError, PreconditionError, is_equimatchable_oracle,
                       is_factor_critical)
from .recognition import Classification, classify

EXIT_POSITIVE, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CROSSCHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load(args) -> list[Graph]:
    graphs = list(read_graphs(_read_source(args.input), args.format))
    if not graphs:
        raise UsageError("no graph in input")
    return graphs


def _emit(args, record: dict, text: str) -> None:
    if args.output == "json":
        print(json.dumps(record))
    else:
        print(text)


def classification_record(g: Graph, c: Classification) -> dict:
    family = None
    if c.family is not None:
        family = {"id": c.family.family_id, "params": c.family.values}
    return {"verdict": c.verdict, "branch": c.branch, "family": family,
            "reject_reason": c.reject_reason, "n": g.n, "m": g.m}


def cmd_recognize(args) -> int:
    graphs = _load(args)
    bulk = len(graphs) > 1
    all_true = True
    for index, g in enumerate(graphs):
        c = classify(g)
        all_true &= c.verdict
        record = classification_record(g, c)
        if bulk:
            record["index"] = index
        detail = str(c.family) if c.family else c.reject_reason
        _emit(args, record, f"{'accept' if c.verdict else 'reject'} {c.branch} {detail} n={g.n} m={g.m}")
    return EXIT_POSITIVE if all_true else EXIT_NEGATIVE


def _parse_params(tokens: Sequence[str]) -> dict[str, int]:
    out = {}
    for tok in tokens:
        key, eq, value = tok.partition("=")
        if not eq or not key or not value.lstrip("-").isdigit():
            raise UsageError(f"parameter {tok!r} is not key=integer")
        out[key] = int(value)
    return out


def cmd_generate(args) -> int:
    p = FamilyParams(args.family.lower(), tuple(_parse_params(args.params).items()))
    print(to_graph6(instantiate(p)))
    return EXIT_POSITIVE


def cmd_enumerate(args) -> int:
    if args.max_vertices > ENUMERATE_CEILING:
        raise UsageError(f"max_vertices limited to {ENUMERATE_CEILING}")
    if args.cross_check and args.max_vertices > args.oracle_ceiling:
        raise UsageError(f"--cross-check needs max_vertices <= oracle ceiling ({args.oracle_ceiling})")
    families = [args.family.lower()] if args.family else list(FAMILY_IDS)
    failed = False
    for fid in families:
        for p, g in enumerate_members(fid, args.max_vertices):
            record: dict = {"family": p.family_id, "params": p.values, "graph6": to_graph6(g)}
            if args.cross_check:
                record["oracle_equimatchable"] = is_equimatchable_oracle(g, args.oracle_ceiling).verdict
                record["factor_critical"] = is_factor_critical(g)
                record["triangle_free"] = is_triangle_free(g)[0]
                failed |= not (record["oracle_equimatchable"] and record["factor_critical"]
                               and record["triangle_free"])
            _emit(args, record, f"{p} {record['graph6']}")
    return EXIT_CROSSCHECK if failed else EXIT_POSITIVE


def verify_record(g: Graph, ceiling: int) -> dict:
    report = is_equimatchable_oracle(g, ceiling)
    witness = sorted(list(e) for e in report.witness_small) if report.witness_small is not None else None
    return {
        "equimatchable": report.verdict,
        "max_matching": report.max_size,
        "min_maximal_matching": report.min_maximal_size,
        "factor_critical": is_factor_critical(g),
        "triangle_free": is_triangle_free(g)[0],
        "bipartite": is_bipartite(g) is not None,
        "witness": witness,
    }


def cmd_verify(args) -> int:
    graphs = _load(args)
    all_true = True
    for index, g in enumerate(graphs):
        record = verify_record(g, args.oracle_ceiling)
        all_true &= record["equimatchable"]
        if len(graphs) > 1:
            record["index"] = index
        _emit(args, record, " ".join(f"{k}={v}" for k, v in record.items()))
    return EXIT_POSITIVE if all_true else EXIT_NEGATIVE


def cmd_export_dot(args) -> int:
    for g in _load(args):
        sys.stdout.write(to_dot(g))
    return EXIT_POSITIVE


def build_parser() -> argparse.ArgumentParser:
    env_ceiling = os.environ.get("EQUIMATCH_ORACLE_CEILING")
    try:
        ceiling = _positive_int(env_ceiling) if env_ceiling else DEFAULT_ORACLE_CEILING
    except (ValueError, argparse.ArgumentTypeError):
        ceiling = DEFAULT_ORACLE_CEILING

    def add_globals(parser: argparse.ArgumentParser, top_level: bool) -> None:
        # Subcommands repeat the flags with suppressed defaults so either position works.
        def dflt(value):
            return value if top_level else argparse.SUPPRESS
        parser.add_argument("--format", choices=("graph6", "edgelist", "auto"), default=dflt("auto"))
        parser.add_argument("--output", choices=("json", "text"), default=dflt("json"))
        parser.add_argument("--oracle-ceiling", type=_positive_int, default=dflt(ceiling))
        parser.add_argument("--seed", type=int, default=dflt(0))

    common = argparse.ArgumentParser(add_help=False)
    add_globals(common, False)
    top = argparse.ArgumentParser(prog="equimatch", description=__doc__.splitlines()[0])
    add_globals(top, True)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="classify graphs")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("generate", parents=[common], help="print a family member as graph6")
    p.add_argument("family", help=", ".join(FAMILY_IDS))
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", parents=[common], help="list family members up to a size")
    p.add_argument("max_vertices", type=int)
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--family")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="exhaustive matching oracle report")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", parents=[common], help="emit Graphviz DOT")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_export_dot)
    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, GraphError, FamilyError, OracleCeilingError, PreconditionError) as exc:
        print(f"equimatch: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
