"""Step-exact execution of one-state machines and Figure-style trace rendering."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Optional, Union

from .core import BLANK, OneStateMachine

if TYPE_CHECKING:
    from .halting import Detector, DivergenceReason


class InputSymbolNotInAlphabet(ValueError):
    def __init__(self, symbol: str, position: int):
        self.symbol = symbol
        self.position = position
        super().__init__(f"input symbol {symbol!r} at position {position} is not in the input alphabet")


class SteppingHaltedConfiguration(RuntimeError):
    pass


class Tape:
    """Cells over the tight interval ``[lo, hi]``; everything outside is blank.

    An empty tape has ``cells == []`` and ``lo`` meaningless.
    """

    __slots__ = ("cells", "lo", "blank")

    def __init__(self, cells: Iterable[str] = (), lo: int = 0, blank: str = BLANK):
        self.cells = list(cells)
        self.lo = lo
        self.blank = blank
        self._tighten()

    @property
    def hi(self) -> int:
        return self.lo + len(self.cells) - 1

    def is_empty(self) -> bool:
        return not self.cells

    def __getitem__(self, pos: int) -> str:
        i = pos - self.lo
        if 0 <= i < len(self.cells):
            return self.cells[i]
        return self.blank

    def __setitem__(self, pos: int, sym: str) -> None:
        cells = self.cells
        if not cells:
            if sym != self.blank:
                cells.append(sym)
                self.lo = pos
            return
        i = pos - self.lo
        if 0 <= i < len(cells):
            cells[i] = sym
            if sym == self.blank and (i == 0 or i == len(cells) - 1):
                self._tighten()
        elif sym != self.blank:
            if i < 0:
                cells[:0] = [sym] + [self.blank] * (-i - 1)
                self.lo = pos
            else:
                cells.extend([self.blank] * (i - len(cells)))
                cells.append(sym)

    def _tighten(self) -> None:
        cells, blank = self.cells, self.blank
        while cells and cells[-1] == blank:
            cells.pop()
        k = 0
        while k < len(cells) and cells[k] == blank:
            k += 1
        if k:
            del cells[:k]
            self.lo += k

    def is_tight(self) -> bool:
        return not self.cells or (self.cells[0] != self.blank and self.cells[-1] != self.blank)

    def content(self) -> str:
        return "".join(self.cells)

    def window(self, a: int, b: int) -> str:
        """Contents of cells ``a..b`` inclusive."""
        return "".join(self[p] for p in range(a, b + 1))

    def copy(self) -> "Tape":
        t = Tape.__new__(Tape)
        t.cells, t.lo, t.blank = list(self.cells), self.lo, self.blank
        return t

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tape):
            return NotImplemented
        if not self.cells and not other.cells:
            return True
        return self.lo == other.lo and self.cells == other.cells

    def __repr__(self) -> str:
        return f"Tape({self.content()!r}, lo={self.lo})"


@dataclass
class Configuration:
    tape: Tape
    head: int = 0
    steps: int = 0
    # hull of the input placement, head positions and non-blank writes; drives rendering
    span_lo: int = 0
    span_hi: int = 0
    halted: bool = False

    @property
    def symbol(self) -> str:
        return self.tape[self.head]

    def copy(self) -> "Configuration":
        return Configuration(self.tape.copy(), self.head, self.steps, self.span_lo, self.span_hi, self.halted)


@dataclass(frozen=True)
class Continue:
    config: Configuration


@dataclass(frozen=True)
class Halt:
    config: Configuration


StepResult = Union[Continue, Halt]


@dataclass(frozen=True)
class Halted:
    steps: int


@dataclass(frozen=True)
class Diverged:
    reason: "DivergenceReason"
    at_step: int


@dataclass(frozen=True)
class FuelExhausted:
    fuel: int


RunOutcome = Union[Halted, Diverged, FuelExhausted]


def init(m: OneStateMachine, input: str) -> Configuration:
    allowed = set(m.input_alphabet)
    for pos, ch in enumerate(input):
        if ch not in allowed:
            raise InputSymbolNotInAlphabet(ch, pos)
    span_hi = max(len(input) - 1, 0)
    return Configuration(Tape(input, 0, m.blank), head=0, steps=0, span_lo=0, span_hi=span_hi)


def step(m: OneStateMachine, c: Configuration) -> StepResult:
    """Advance ``c`` in place by one transition.

    Returns ``Halt(c)`` untouched when the head reads a halting symbol; a
    configuration in that state must not be stepped again.
    """
    sym = c.tape[c.head]
    rule = m.transitions.get(sym)
    if rule is None:
        if c.halted:
            raise SteppingHaltedConfiguration(f"configuration at step {c.steps} has already halted")
        c.halted = True
        return Halt(c)
    c.tape[c.head] = rule.write
    if rule.write != m.blank:
        if c.head < c.span_lo:
            c.span_lo = c.head
        elif c.head > c.span_hi:
            c.span_hi = c.head
    c.head += rule.move.value
    if c.head < c.span_lo:
        c.span_lo = c.head
    elif c.head > c.span_hi:
        c.span_hi = c.head
    c.steps += 1
    return Continue(c)


def run(
    m: OneStateMachine,
    input: str,
    fuel: int,
    detectors: Optional[Iterable["Detector"]] = None,
) -> RunOutcome:
    """Run ``m`` on ``input`` for at most ``fuel`` transitions.

    Enabled detectors are consulted on every configuration before stepping;
    the first to fire ends the run with :class:`Diverged`.
    """
    return _drive(m, input, fuel, detectors, None)


def _drive(m, input, fuel, detectors, sink) -> RunOutcome:
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    from .halting import DetectorBank

    c = init(m, input)
    bank = DetectorBank(m, detectors or ())
    transitions = m.transitions
    while True:
        if sink is not None:
            sink.append(render(c))
        if c.tape[c.head] not in transitions:
            return Halted(c.steps)
        reason = bank.check(c)
        if reason is not None:
            return Diverged(reason, c.steps)
        if c.steps >= fuel:
            return FuelExhausted(fuel)
        step(m, c)


def render(c: Configuration) -> str:
    """One trace line: each cell as `` x ``, the head cell as ``[x]``, blank as ``_``."""
    lo = min(c.span_lo, c.head) - 1
    hi = max(c.span_hi, c.head) + 1
    tape, head = c.tape, c.head
    parts = []
    for pos in range(lo, hi + 1):
        sym = tape[pos]
        parts.append(f"[{sym}]" if pos == head else f" {sym} ")
    return "".join(parts).rstrip()


@dataclass
class Trace:
    lines: list[str] = field(default_factory=list)
    outcome: Optional[RunOutcome] = None

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


def trace(
    m: OneStateMachine,
    input: str,
    fuel: int,
    detectors: Optional[Iterable["Detector"]] = None,
) -> Trace:
    """Render every configuration from step 0 to the final one.

    All divergence detectors are enabled unless ``detectors`` says otherwise.
    """
    if detectors is None:
        from .halting import ALL_DETECTORS

        detectors = ALL_DETECTORS
    lines: list[str] = []
    outcome = _drive(m, input, fuel, detectors, lines)
    return Trace(lines, outcome)
