"""Desk-scale checkers for the comparator language and the one-state machine results.

Every checker returns a :class:`VerificationReport`.  Reports merge
associatively, so grids can be split across workers and recombined.
"""
from __future__ import annotations

import itertools
import json
import re
import string
import time
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

from .builders import build_mcc, well_formed_input
from .core import BLANK, OneStateMachine, RawRule, MachineDescription, validate
from .halting import Diverges, Halts, Unknown, decide_halting

_U0H = re.compile(r"(u*)(0*)h")


class U0hShape(NamedTuple):
    n: int
    m: int


def parse_u0h(s: str) -> Optional[U0hShape]:
    """``(n, m)`` when ``s`` is exactly ``u^n 0^m h``, else ``None``."""
    match = _U0H.fullmatch(s)
    if match is None:
        return None
    return U0hShape(len(match.group(1)), len(match.group(2)))


def comparator_holds(n: int, m: int, base: int = 2) -> bool:
    # exact integer arithmetic, any m
    return n >= base**m - 1


def in_lcc_prime(s: str) -> bool:
    shape = parse_u0h(s)
    return shape is not None and comparator_holds(shape.n, shape.m)


@dataclass(frozen=True)
class Case:
    key: tuple
    label: str
    detail: str = ""


@dataclass
class VerificationReport:
    checker: str
    parameters: dict
    passes: list[Case] = field(default_factory=list)
    failures: list[Case] = field(default_factory=list)
    unknowns: list[Case] = field(default_factory=list)
    elapsed: float = 0.0
    unknowns_fail: bool = True

    @property
    def total(self) -> int:
        return len(self.passes) + len(self.failures) + len(self.unknowns)

    @property
    def holds(self) -> bool:
        return not self.failures and not (self.unknowns_fail and self.unknowns)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        if (self.checker, self.parameters) != (other.checker, other.parameters):
            raise ValueError("can only merge reports of the same checker run")

        def join(a: list[Case], b: list[Case]) -> list[Case]:
            return sorted(a + b, key=lambda c: c.key)

        return VerificationReport(
            self.checker,
            self.parameters,
            join(self.passes, other.passes),
            join(self.failures, other.failures),
            join(self.unknowns, other.unknowns),
            self.elapsed + other.elapsed,
            self.unknowns_fail and other.unknowns_fail,
        )

    def summary(self) -> str:
        """Deterministic text form; timing is left to the caller."""
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        if self.failures:
            verdict = "FAILS"
        elif self.unknowns and self.unknowns_fail:
            verdict = "UNDECIDED"
        else:
            verdict = "HOLDS"
        lines = [
            f"checker: {self.checker}",
            f"parameters: {params}",
            f"cases: {self.total}",
            f"passes: {len(self.passes)}",
            f"failures: {len(self.failures)}",
            f"unknowns: {len(self.unknowns)}" + ("" if self.unknowns_fail else " (informational)"),
            f"verdict: {verdict}",
        ]
        witnesses = [("failure", c) for c in self.failures] + [("unknown", c) for c in self.unknowns]
        if witnesses:
            lines.append("--- witnesses ---")
            for kind, c in witnesses:
                lines.append(json.dumps({"kind": kind, "case": c.label, "detail": c.detail}, sort_keys=True))
        return "\n".join(lines) + "\n"


def crosscheck_theorem2(n_max: int, m_max: int, fuel: int, machine: Optional[OneStateMachine] = None) -> VerificationReport:
    """Compare the comparator machine's verdicts with ``n >= 2**m - 1`` over a grid."""
    start = time.perf_counter()
    m = machine or build_mcc()
    report = VerificationReport("theorem2-crosscheck", {"n_max": n_max, "m_max": m_max, "fuel": fuel})
    for n in range(n_max + 1):
        for k in range(m_max + 1):
            x = well_formed_input(n, k)
            expected = in_lcc_prime(x)
            verdict = decide_halting(m, x, fuel)
            case = Case((n, k), f"n={n} m={k}", _verdict_text(verdict))
            if isinstance(verdict, Unknown):
                report.unknowns.append(case)
            elif isinstance(verdict, Halts) == expected:
                report.passes.append(case)
            else:
                report.failures.append(case)
    report.elapsed = time.perf_counter() - start
    return report


def _verdict_text(v) -> str:
    if isinstance(v, Halts):
        return f"halts steps={v.steps}"
    if isinstance(v, Diverges):
        return f"diverges reason={v.reason.name}"
    return f"unknown fuel={v.fuel_spent}"


class Decomposition(NamedTuple):
    r: str
    v: str
    w: str
    x: str
    y: str

    def pump(self, n: int) -> str:
        return self.r + self.v * n + self.w + self.x * n + self.y


def enumerate_decompositions(s: str, p: int) -> Iterator[Decomposition]:
    """Every ``s = r v w x y`` with ``|vwx| <= p`` and ``|vx| >= 1``.

    Ordered lexicographically by ``(|r|, |v|, |w|, |x|)``.
    """
    if p < 1:
        raise ValueError("pumping length must be at least 1")
    size = len(s)
    for a in range(size + 1):
        for b in range(min(p, size - a) + 1):
            for c in range(min(p - b, size - a - b) + 1):
                for d in range(min(p - b - c, size - a - b - c) + 1):
                    if b + d == 0:
                        continue
                    i, j, k, l = a, a + b, a + b + c, a + b + c + d
                    yield Decomposition(s[:i], s[i:j], s[j:k], s[k:l], s[l:])


def find_pump_witness(d: Decomposition, n_max: int) -> Optional[int]:
    """Smallest ``n <= n_max`` whose pumped string leaves the comparator language."""
    for n in range(n_max + 1):
        if not in_lcc_prime(d.pump(n)):
            return n
    return None


def pump_string(p: int) -> str:
    return well_formed_input(2**p - 1, p)


def verify_lemma_notcf(p: int, n_max: int) -> VerificationReport:
    start = time.perf_counter()
    s = pump_string(p)
    report = VerificationReport("pumping-certificate", {"p": p, "witness_max": n_max})
    for d in enumerate_decompositions(s, p):
        key = (len(d.r), len(d.v), len(d.w), len(d.x))
        label = "|r|={} |v|={} |w|={} |x|={}".format(*key)
        n = find_pump_witness(d, n_max)
        if n is None:
            report.failures.append(Case(key, label, "no witness"))
        else:
            report.passes.append(Case(key, label, f"witness n={n}"))
    report.elapsed = time.perf_counter() - start
    return report


AUX_SYMBOLS = string.ascii_lowercase


def machine_tape_alphabet(gamma_size: int) -> list[str]:
    if gamma_size < 2 or gamma_size - 2 > len(AUX_SYMBOLS):
        raise ValueError(f"gamma_size out of range: {gamma_size}")
    return [BLANK, "1", *AUX_SYMBOLS[: gamma_size - 2]]


def enumerate_one_state_machines(gamma_size: int) -> Iterator[OneStateMachine]:
    """All ``(2g + 1)**g`` machines over ``{_, 1, a, ...}`` with input alphabet ``{1}``.

    Each symbol independently halts or takes one of the ``2g`` rules.
    """
    gamma = machine_tape_alphabet(gamma_size)
    options: list[Optional[tuple[str, str]]] = [None]
    options += [(w, mv) for w in gamma for mv in "LR"]
    for choice in itertools.product(options, repeat=len(gamma)):
        halting = [sym for sym, opt in zip(gamma, choice) if opt is None]
        rules = [RawRule(sym, opt[0], opt[1]) for sym, opt in zip(gamma, choice) if opt is not None]
        yield validate(MachineDescription(BLANK, ["1"], halting, rules, tape_alphabet=list(gamma)))


def verify_theorem1(gamma_size: int, fuel: int, k_max: int, *, start_index: int = 0, stop_index: Optional[int] = None) -> VerificationReport:
    """Check that halting on ``1`` forces halting on ``1^k`` for ``2 <= k <= k_max``.

    Unknown verdicts fail the report for two-symbol alphabets and are only
    counted for larger ones.  ``start_index``/``stop_index`` select a slice of
    the machine stream so the grid can be split.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    begin = time.perf_counter()
    report = VerificationReport(
        "theorem1-enumeration",
        {"gamma": gamma_size, "fuel": fuel, "k_max": k_max},
        unknowns_fail=gamma_size <= 2,
    )
    machines = itertools.islice(enumerate_one_state_machines(gamma_size), start_index, stop_index)
    for index, m in enumerate(machines, start=start_index):
        label = f"#{index} {_machine_text(m)}"
        first = decide_halting(m, "1", fuel)
        if isinstance(first, Unknown):
            report.unknowns.append(Case((index,), label, "input 1: unknown"))
            continue
        if isinstance(first, Diverges):
            report.passes.append(Case((index,), label, "diverges on 1"))
            continue
        bad, unknown = None, None
        for k in range(2, k_max + 1):
            verdict = decide_halting(m, "1" * k, fuel)
            if isinstance(verdict, Diverges):
                bad = f"halts on 1, diverges on 1^{k} ({verdict.reason.name})"
                break
            if isinstance(verdict, Unknown) and unknown is None:
                unknown = f"halts on 1, unknown on 1^{k}"
        if bad:
            report.failures.append(Case((index,), label, bad))
        elif unknown:
            report.unknowns.append(Case((index,), label, unknown))
        else:
            report.passes.append(Case((index,), label, "halts on 1 and all tested 1^k"))
    report.elapsed = time.perf_counter() - begin
    return report


def _machine_text(m: OneStateMachine) -> str:
    parts = []
    for sym in m.tape_alphabet:
        rule = m.transitions.get(sym)
        parts.append(f"{sym}:H" if rule is None else f"{sym}:{rule.write}{rule.move.name}")
    return " ".join(parts)
