"""Command-line entry point.

Exit codes: 0 ok, 1 parse/usage error, 2 validation error, 3 size limit,
4 oracle disagreement.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence, TextIO

from . import aid, engine
from .dataflow import analyze, worklist_solve
from .errors import ParseError, SizeLimitExceeded, ValidationError
from .formats import parse_inputs, parse_lattice
from .lattice import (
    MAX_SCAN_GENERATORS,
    check_join_laws,
    check_order_laws,
    set_presentation,
    validate_generators,
)
from .stdind import std_lfp

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_SIZE, EXIT_DISAGREE = range(5)
LAW_SCAN_LIMIT = 1024


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(f"{self.prog}: error: {message}")


def _cap(limit: int | None, default: int) -> int:
    return default if limit is None else min(limit, default)


def _braces(names: Sequence[str]) -> str:
    return "{" + ",".join(names) + "}"


def cmd_lattice_check(args, out: TextIO) -> int:
    L = parse_lattice(args.file, check_generators=args.strict)
    print(f"lattice: {L.family} |L|={L.size} |B|={L.width}", file=out)
    print(f"bottom: {L.name(L.bottom)}", file=out)
    print(f"top: {L.name(L.top)}", file=out)
    status = EXIT_OK
    scan = _cap(args.limit, LAW_SCAN_LIMIT)
    if L.size <= scan:
        for label, problems in (("order", check_order_laws(L)), ("joins", check_join_laws(L))):
            if problems:
                status = EXIT_VALIDATION
                print(f"{label}: FAIL {'; '.join(problems[:5])}", file=out)
            else:
                print(f"{label}: ok", file=out)
    else:
        print(f"order: skipped (|L| > {scan})", file=out)
        print(f"joins: skipped (|L| > {scan})", file=out)
    report = validate_generators(L)
    if report.ok:
        print("generators: ok", file=out)
    else:
        status = EXIT_VALIDATION
        print("generators: FAIL at " + ", ".join(L.name(x) for x in report.violators), file=out)
    return status


def _load_definition(args):
    if (args.aid is None) == (args.map is None):
        raise _UsageError("lfp-run: give exactly one of --aid or --map")
    if args.aid is not None:
        return parse_inputs(args.aid, "aid")
    g = parse_inputs(args.map, "map")
    return aid.phi_of_gamma(g, _cap(args.limit, aid.MATERIALIZE_LIMIT))


def _print_trace(phi, result, out: TextIO) -> None:
    L = phi.lattice
    for n, stage in enumerate(result.trace.stages):
        print(f"stage {n}: {L.format_subset(stage)}", file=out)


def cmd_lfp_run(args, out: TextIO) -> int:
    phi = _load_definition(args)
    L = phi.lattice
    result = engine.lfp_stages(phi)
    if args.trace:
        _print_trace(phi, result, out)
    print(f"I: {L.format_subset(result.closed)}", file=out)
    print(f"lfp: {L.name(L.join_gens(result.closed))}", file=out)
    return EXIT_OK


def cmd_lfp_compare(args, out: TextIO) -> int:
    g = parse_inputs(args.map, "map")
    L = g.lattice
    tarski_cap = _cap(args.limit, engine.TARSKI_LIMIT)
    if L.size > tarski_cap:
        raise SizeLimitExceeded("lattice for Tarski scan", L.size, tarski_cap)
    phi = aid.phi_of_gamma(g, _cap(args.limit, aid.MATERIALIZE_LIMIT))
    result = engine.lfp_stages(phi)
    if args.trace:
        _print_trace(phi, result, out)
    values = {
        "lfp_aid": L.join_gens(result.closed),
        "oracle_tarski": engine.oracle_tarski(g, tarski_cap),
        "oracle_kleene": engine.oracle_kleene(g),
    }
    for label, value in values.items():
        print(f"{label + ':':<15}{L.name(value)}", file=out)
    agree = len(set(values.values())) == 1
    print(f"verdict: {'AGREE' if agree else 'DISAGREE'}", file=out)
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_presentation(args, out: TextIO) -> int:
    L = parse_inputs(args.file, "lattice")
    pres = set_presentation(L, _cap(args.limit, MAX_SCAN_GENERATORS))
    for b in L.generators:
        listing = " | ".join(L.format_subset(w) for w in pres.covers[b])
        print(f"covers {L.name(b)}: {listing}", file=out)
    return EXIT_OK


def cmd_stdind_run(args, out: TextIO) -> int:
    phi = parse_inputs(args.file, "stdind")
    closure = std_lfp(phi)
    print("closure: " + _braces([a for a in phi.atoms if a in closure]), file=out)
    return EXIT_OK


def cmd_dataflow_analyze(args, out: TextIO) -> int:
    cfg = parse_inputs(args.file, "cfg")
    solution = analyze(cfg)
    for n in sorted(cfg.nodes):
        facts = sorted(solution.in_sets[n])
        print(f"in {n}: " + _braces([f"({m},{d})" for m, d in facts]), file=out)
    agree = solution == worklist_solve(cfg)
    print(f"worklist: {'AGREE' if agree else 'DISAGREE'}", file=out)
    return EXIT_OK if agree else EXIT_DISAGREE


COMMANDS: dict[str, Callable] = {
    "lattice-check": cmd_lattice_check,
    "lfp-run": cmd_lfp_run,
    "lfp-compare": cmd_lfp_compare,
    "presentation": cmd_presentation,
    "stdind-run": cmd_stdind_run,
    "dataflow-analyze": cmd_dataflow_analyze,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tarskifix", description="Least fixed points via abstract inductive definitions.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def limit_flag(p):
        p.add_argument("--limit", type=int, metavar="N", help="lower the scan thresholds to N")

    p = sub.add_parser("lattice-check", help="validate order, joins and generators")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="reject bad generators at load time")
    limit_flag(p)

    p = sub.add_parser("lfp-run", help="stage trace and least closed set")
    p.add_argument("--aid", metavar="FILE")
    p.add_argument("--map", metavar="FILE")
    p.add_argument("--trace", action=argparse.BooleanOptionalAction, default=True)
    limit_flag(p)

    p = sub.add_parser("lfp-compare", help="engine vs Tarski vs Kleene")
    p.add_argument("--map", metavar="FILE", required=True)
    p.add_argument("--trace", action=argparse.BooleanOptionalAction, default=False)
    limit_flag(p)

    p = sub.add_parser("presentation", help="minimal covers for each generator")
    p.add_argument("file")
    limit_flag(p)

    p = sub.add_parser("stdind-run", help="least closed set of a standard definition")
    p.add_argument("file")

    p = sub.add_parser("dataflow-analyze", help="reaching definitions")
    p.add_argument("file")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "limit", None) is not None and args.limit < 0:
            raise _UsageError("--limit must be nonnegative")
        return COMMANDS[args.verb](args, out)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=err)
        return EXIT_VALIDATION
    except SizeLimitExceeded as exc:
        print(f"size limit: {exc}", file=err)
        return EXIT_SIZE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
