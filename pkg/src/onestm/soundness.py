"""Random-machine soundness checks for the halting decider.

The reference runner here shares no code with :mod:`onestm.simulator`: it
works on integer-coded symbols over a flat array tape, compiled with numba,
so long confirmation runs stay cheap.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import numba
import numpy as np

from .core import BLANK, MachineDescription, OneStateMachine, RawRule, validate
from .halting import Diverges, Halts, Unknown, decide_halting

SYMBOL_POOL = ["1", "a", "b"]


@numba.njit(cache=True)
def _reference_steps(writes, moves, halting, tape, head, fuel):
    for t in range(fuel + 1):
        s = tape[head]
        if halting[s]:
            return t
        if t == fuel:
            return -1
        tape[head] = writes[s]
        head += moves[s]
    return -1


def reference_run(m: OneStateMachine, input: str, fuel: int) -> Optional[int]:
    """Number of steps to halt within ``fuel``, or ``None``.  No divergence detection."""
    symbols = [m.blank] + [s for s in m.tape_alphabet if s != m.blank]
    code = {s: i for i, s in enumerate(symbols)}
    size = len(symbols)
    writes = np.zeros(size, dtype=np.int8)
    moves = np.zeros(size, dtype=np.int64)
    halting = np.zeros(size, dtype=np.bool_)
    for s, i in code.items():
        rule = m.transitions.get(s)
        if rule is None:
            halting[i] = True
        else:
            writes[i] = code[rule.write]
            moves[i] = rule.move.value
    origin = fuel + 1
    tape = np.zeros(2 * fuel + len(input) + 3, dtype=np.int8)
    for i, ch in enumerate(input):
        tape[origin + i] = code[ch]
    steps = _reference_steps(writes, moves, halting, tape, origin, fuel)
    return None if steps < 0 else int(steps)


def random_machine(rng: random.Random, max_gamma: int = 4) -> OneStateMachine:
    """Uniform over halting/rule choices per symbol, with a random non-empty input alphabet."""
    g = rng.randint(2, max_gamma)
    gamma = [BLANK] + SYMBOL_POOL[: g - 1]
    nonblank = gamma[1:]
    sigma = rng.sample(nonblank, rng.randint(1, len(nonblank)))
    halting, rules = [], []
    for sym in gamma:
        choice = rng.randrange(2 * g + 1)
        if choice == 2 * g:
            halting.append(sym)
        else:
            rules.append(RawRule(sym, gamma[choice // 2], "LR"[choice % 2]))
    return validate(MachineDescription(BLANK, sorted(sigma), halting, rules, tape_alphabet=gamma))


def random_input(rng: random.Random, m: OneStateMachine, max_len: int = 6) -> str:
    return "".join(rng.choice(m.input_alphabet) for _ in range(rng.randint(0, max_len)))


@dataclass
class SoundnessReport:
    samples: int = 0
    halts: int = 0
    unknowns: int = 0
    diverges: Counter = field(default_factory=Counter)
    violations: list[str] = field(default_factory=list)

    def summary(self) -> str:
        reasons = " ".join(f"{k}={v}" for k, v in sorted(self.diverges.items()))
        return (
            f"samples={self.samples} halts={self.halts} diverges={sum(self.diverges.values())} "
            f"({reasons}) unknowns={self.unknowns} violations={len(self.violations)}"
        )


def check_case(m: OneStateMachine, x: str, fuel: int, report: SoundnessReport, confirm_factor: int = 10) -> None:
    verdict = decide_halting(m, x, fuel)
    plain = reference_run(m, x, confirm_factor * fuel)
    report.samples += 1
    where = f"{m!r} on {x!r}"
    if isinstance(verdict, Halts):
        report.halts += 1
        if plain != verdict.steps:
            report.violations.append(f"{where}: decided Halts({verdict.steps}), reference {plain}")
    elif isinstance(verdict, Diverges):
        report.diverges[verdict.reason.name] += 1
        if plain is not None:
            report.violations.append(f"{where}: decided {verdict.reason}, reference halts at {plain}")
    else:
        assert isinstance(verdict, Unknown)
        report.unknowns += 1
        if plain is not None and plain <= fuel:
            report.violations.append(f"{where}: Unknown although reference halts at {plain}")


def soundness_suite(samples: int = 10_000, fuel: int = 10_000, seed: int = 0, max_gamma: int = 4, max_len: int = 6) -> SoundnessReport:
    rng = random.Random(seed)
    report = SoundnessReport()
    for _ in range(samples):
        m = random_machine(rng, max_gamma)
        check_case(m, random_input(rng, m, max_len), fuel, report)
    return report
