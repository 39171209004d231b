"""Command-line entry point: ``onestm run|trace|generate|verify``.

Exit codes: 0 halted / verification holds, 1 diverges, 2 unknown or fuel
exhausted, 3 usage or input error, 4 a verification found a counterexample.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import verify
from .builders import BaseOutOfRange, build_unary_vs_base, resolve_builtin
from .core import InvalidMachine, OneStateMachine, parse_machine, serialize_machine
from .halting import ALL_DETECTORS
from .simulator import Diverged, FuelExhausted, Halted, InputSymbolNotInAlphabet, RunOutcome, run, trace

EXIT_HALTS, EXIT_DIVERGES, EXIT_UNKNOWN, EXIT_USAGE, EXIT_COUNTEREXAMPLE = range(5)
DEFAULT_FUEL = 10**7
THM1_DEFAULT_FUEL = 10**5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _count(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="onestm", description="Simulate and verify one-state Turing machines.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in (("run", "decide whether a machine halts on an input"), ("trace", "print every configuration of a run")):
        p = sub.add_parser(name, help=help_text)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--builtin", metavar="NAME", help="mcc or unary-vs-base:<k>")
        src.add_argument("--file", type=Path, help="machine-definition file")
        p.add_argument("--input", required=True, help="input string (may be empty)")
        p.add_argument("--fuel", type=_count, default=DEFAULT_FUEL)

    gen = sub.add_parser("generate", help="emit the unary-vs-base-k comparator machine")
    gen.add_argument("--base", type=int, required=True)

    ver = sub.add_parser("verify", help="run a verification suite")
    suites = ver.add_subparsers(dest="suite", required=True, parser_class=_Parser)
    thm2 = suites.add_parser("thm2", help="comparator machine vs n >= 2^m - 1")
    thm2.add_argument("--nmax", type=_count, default=40)
    thm2.add_argument("--mmax", type=_count, default=5)
    thm2.add_argument("--fuel", type=_count, default=DEFAULT_FUEL)
    pump = suites.add_parser("pump", help="pumping certificate for u^(2^p-1) 0^p h")
    pump.add_argument("--p", type=_positive, default=3)
    pump.add_argument("--witness-max", type=_count, default=8)
    thm1 = suites.add_parser("thm1", help="halting on 1 forces halting on 1^k")
    thm1.add_argument("--gamma", type=int, choices=(2, 3), default=2)
    thm1.add_argument("--kmax", type=int, default=3)
    thm1.add_argument("--fuel", type=_count, default=THM1_DEFAULT_FUEL)
    return parser


def load_machine(args: argparse.Namespace) -> OneStateMachine:
    if args.builtin is not None:
        try:
            return resolve_builtin(args.builtin)
        except (KeyError, BaseOutOfRange) as exc:
            raise UsageError(exc.args[0]) from None
    try:
        text = args.file.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        return parse_machine(text)
    except InvalidMachine as exc:
        raise UsageError(f"{args.file}: invalid machine: {exc}") from None


def outcome_line(outcome: RunOutcome) -> tuple[str, int]:
    if isinstance(outcome, Halted):
        return f"HALTS steps={outcome.steps}", EXIT_HALTS
    if isinstance(outcome, Diverged):
        return f"DIVERGES reason={outcome.reason.name} at={outcome.at_step}", EXIT_DIVERGES
    assert isinstance(outcome, FuelExhausted)
    return f"UNKNOWN fuel={outcome.fuel}", EXIT_UNKNOWN


def _cmd_run(args: argparse.Namespace) -> int:
    m = load_machine(args)
    try:
        if args.command == "trace":
            result = trace(m, args.input, args.fuel)
            sys.stdout.write(result.text())
            outcome = result.outcome
        else:
            outcome = run(m, args.input, args.fuel, ALL_DETECTORS)
    except InputSymbolNotInAlphabet as exc:
        raise UsageError(str(exc)) from None
    line, code = outcome_line(outcome)
    print(line)
    return code


def _cmd_generate(args: argparse.Namespace) -> int:
    try:
        m = build_unary_vs_base(args.base)
    except BaseOutOfRange as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(serialize_machine(m))
    return EXIT_HALTS


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "thm2":
        report = verify.crosscheck_theorem2(args.nmax, args.mmax, args.fuel)
    elif args.suite == "pump":
        report = verify.verify_lemma_notcf(args.p, args.witness_max)
    else:
        if args.kmax < 2:
            raise UsageError("--kmax must be at least 2")
        report = verify.verify_theorem1(args.gamma, args.fuel, args.kmax)
    sys.stdout.write(report.summary())
    print(f"elapsed: {report.elapsed:.3f}s", file=sys.stderr)
    if report.failures:
        return EXIT_COUNTEREXAMPLE
    return EXIT_HALTS if report.holds else EXIT_UNKNOWN


COMMANDS = {"run": _cmd_run, "trace": _cmd_run, "generate": _cmd_generate, "verify": _cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"onestm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
