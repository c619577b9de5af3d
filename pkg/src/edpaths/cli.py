"""Command-line entry point: ``edpaths {solve,oracle,verify,gen,compose,bench}``.

Exit status for ``solve`` and ``oracle``: 0 yes, 1 no, 2 unsupported case,
3 usage or I/O error. ``verify`` exits 0 for a valid pair and 1 otherwise.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path as FilePath

from .constraints import (
    Case, LengthConstraint, format_instance, format_solution, parse_instance,
    parse_solution, verify_solution,
)
from .derand import LimitsExceeded
from .gadgets import or_compose_many
from .generate import TERMINAL_RULES, PlantShape, gen_planted, gen_random
from .graph import GraphFormatError, InvalidPath
from .oracle import InstanceTooLargeForOracle, oracle_solve
from .partition import SolveConfig, Unsupported, prepare, randomized_search, solve
from .paths import GraphTooLargeForExactLongPath

EXIT_YES, EXIT_NO, EXIT_UNSUPPORTED, EXIT_ERROR = 0, 1, 2, 3


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return FilePath(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
        return
    try:
        FilePath(path).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}") from None


def _load_instance(path: str):
    try:
        return parse_instance(_read(path))
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _report_answer(sol, out, save: str | None) -> int:
    if isinstance(sol, Unsupported):
        out.write(f"{sol}\n")
        return EXIT_UNSUPPORTED
    if save is not None:
        _write(save, format_solution(sol), out)
    if sol is None:
        out.write("NO\n")
        return EXIT_NO
    out.write("YES\n" + format_solution(sol))
    return EXIT_YES


def cmd_solve(args, out) -> int:
    inst = _load_instance(args.instance)
    config = SolveConfig(delta=args.delta, seed=args.seed, mode=args.mode, threads=args.threads)
    return _report_answer(solve(inst, config), out, args.out)


def cmd_oracle(args, out) -> int:
    inst = _load_instance(args.instance)
    return _report_answer(oracle_solve(inst, max_n=args.max_n), out, args.out)


def cmd_verify(args, out) -> int:
    inst = _load_instance(args.instance)
    try:
        sol = parse_solution(_read(args.solution), inst.graph)
    except (ValueError, InvalidPath) as exc:
        raise CliError(f"{args.solution}: {exc}") from None
    if sol is None:
        out.write("NO: nothing to verify\n")
        return EXIT_NO
    verdict = verify_solution(inst, sol.p1, sol.p2)
    if verdict.valid:
        out.write("VALID\n")
        return EXIT_YES
    out.write("INVALID\n")
    for v in verdict.violations:
        out.write(f"{v}\n")
    return EXIT_NO


def cmd_gen(args, out) -> int:
    if args.kind == "random":
        inst = gen_random(
            args.n, args.m, args.terminals,
            LengthConstraint.parse(args.c1), LengthConstraint.parse(args.c2), args.seed,
        )
        _write(args.out, format_instance(inst), out)
        return 0
    shape = PlantShape(Case(args.case), args.k1, args.k2, args.extra_n, args.extra_m)
    inst, cert = gen_planted(shape, args.seed)
    _write(args.out, format_instance(inst), out)
    if args.cert is not None:
        _write(args.cert, format_solution(cert), out)
    return 0


def cmd_compose(args, out) -> int:
    instances = [_load_instance(p) for p in args.instances]
    composed, report = or_compose_many(instances, pad=not args.no_pad)
    _write(args.out, format_instance(composed), out)
    _write(args.report, report.as_text(), out)
    return 0


BENCH_CASES = ("ShortShort", "ShortExact", "ExactExact", "ShortUnbounded",
               "ExactUnbounded", "ShortLong", "ExactLong")


def cmd_bench(args, out) -> int:
    out.write("case\tn\tm\tk1\tk2\ttrials\twall_s\tanswer\n")
    for name in args.cases:
        for extra_n in args.sizes:
            shape = PlantShape(Case(name), args.k1, args.k2, extra_n, args.density * extra_n)
            inst, _ = gen_planted(shape, args.seed)
            config = SolveConfig(delta=args.delta, seed=args.seed)
            start = time.perf_counter()
            outcome = randomized_search(prepare(inst), config)
            wall = time.perf_counter() - start
            answer = "YES" if outcome.solution is not None else "NO"
            out.write(
                f"{name}\t{inst.graph.n}\t{inst.graph.m}\t{args.k1}\t{args.k2}\t"
                f"{outcome.trials_run}\t{wall:.4f}\t{answer}\n"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edpaths", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="random-partition solver")
    p.add_argument("instance")
    p.add_argument("--delta", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("random", "universal"), default="random")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", help="also write the solution file here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive solver for small instances")
    p.add_argument("instance")
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a solution file against an instance")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a random or planted instance")
    gsub = p.add_subparsers(dest="kind", required=True)
    r = gsub.add_parser("random")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--terminals", choices=TERMINAL_RULES, default="distinct")
    r.add_argument("--c1", default="le 2")
    r.add_argument("--c2", default="inf")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out")
    r.set_defaults(func=cmd_gen)
    q = gsub.add_parser("planted")
    q.add_argument("--case", choices=[c.value for c in Case], required=True)
    q.add_argument("--k1", type=int, required=True)
    q.add_argument("--k2", type=int, required=True)
    q.add_argument("--extra-n", type=int, default=0)
    q.add_argument("--extra-m", type=int, default=0)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out")
    q.add_argument("--cert", help="write the planted solution here")
    q.set_defaults(func=cmd_gen)

    p = sub.add_parser("compose", help="OR-compose (<=k1, <=k2) instances")
    p.add_argument("instances", nargs="+")
    p.add_argument("--out", required=True)
    p.add_argument("--report", default="-", help="key=value report (default: stdout)")
    p.add_argument("--no-pad", action="store_true")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("bench", help="time the solver on planted instances (TSV)")
    p.add_argument("--cases", nargs="+", choices=BENCH_CASES, default=list(BENCH_CASES))
    p.add_argument("--sizes", nargs="+", type=int, default=[100, 1000])
    p.add_argument("--density", type=int, default=2, help="decoy edges per extra vertex")
    p.add_argument("--k1", type=int, default=2)
    p.add_argument("--k2", type=int, default=2)
    p.add_argument("--delta", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    try:
        return args.func(args, out)
    except (CliError, ValueError, LimitsExceeded, InstanceTooLargeForOracle,
            GraphTooLargeForExactLongPath) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
