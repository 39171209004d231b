"""Sound divergence detectors and a three-valued halting decider.

Each detector, when it fires, is a proof that the run never halts; none of
them is complete, so a run that outlives its fuel yields :class:`Unknown`.

Blank escape
    The head sits on a blank outside the written region and the blank rule
    carries it further out.  Every cell in that direction is blank, so the
    same rule fires forever.

Exact cycle
    A configuration repeats, up to translation, so the deterministic run
    repeats too.  Configurations are keyed by the tight tape content and the
    head offset from its left end.  The history is reset whenever the head
    reaches a new cell: a genuine bounded cycle stops growing the visited
    region after its first lap and is caught on the second.

Translated cycle
    Records are kept for each side, one whenever the head first reaches a new
    extreme cell ``p`` beyond which the tape is blank.  Take two records on the
    left side at steps ``t1 < t2``, positions ``p2 < p1``, and let ``w`` be the
    furthest the head strays right of ``p1`` during ``[t1, t2]``.  Between the
    records the head stays inside ``[p2, p1 + w]`` and the run depends only on
    that stretch, which at ``t1`` is blank left of ``p1`` followed by the
    window ``[p1, p1 + w]``.  If at ``t2`` the window ``[p2, p2 + w]`` holds the
    same symbols, the situation at ``t2`` is the one at ``t1`` moved by
    ``p2 - p1``, so the same segment of run replays shifted, reproducing the
    window again, forever.  The right side is the mirror image.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .core import Move, OneStateMachine
from .simulator import Configuration, Diverged, FuelExhausted, Halted, run


class Detector(enum.Enum):
    BLANK_ESCAPE = "blank-escape"
    EXACT_CYCLE = "exact-cycle"
    TRANSLATED_CYCLE = "translated-cycle"


ALL_DETECTORS = frozenset(Detector)


@dataclass(frozen=True)
class BlankEscape:
    name = "blank-escape"


@dataclass(frozen=True)
class ExactCycle:
    first_seen_step: int
    repeat_step: int
    name = "exact-cycle"


@dataclass(frozen=True)
class TranslatedCycle:
    record_step_1: int
    record_step_2: int
    shift: int
    name = "translated-cycle"


DivergenceReason = Union[BlankEscape, ExactCycle, TranslatedCycle]


@dataclass(frozen=True)
class Halts:
    steps: int


@dataclass(frozen=True)
class Diverges:
    reason: DivergenceReason


@dataclass(frozen=True)
class Unknown:
    fuel_spent: int


HaltingVerdict = Union[Halts, Diverges, Unknown]


def detect_blank_escape(m: OneStateMachine, c: Configuration) -> bool:
    blank = m.blank
    rule = m.transitions.get(blank)
    if rule is None:
        return False
    tape, head = c.tape, c.head
    if tape.is_empty():
        return True
    if head < tape.lo:
        return rule.move is Move.L
    if head > tape.hi:
        return rule.move is Move.R
    return False


def canonical(c: Configuration) -> tuple[str, int]:
    """Translation-invariant key: tight content and head offset from its left end."""
    tape = c.tape
    if tape.is_empty():
        return ("", 0)
    return (tape.content(), c.head - tape.lo)


def detect_exact_cycle(history, c: Configuration) -> bool:
    return canonical(c) in history


class CycleHistory:
    """Canonical configurations seen since the head last reached a new cell."""

    def __init__(self, limit: int = 1 << 18):
        self.limit = limit
        self.seen: dict[tuple[str, int], int] = {}
        self._lo: Optional[int] = None
        self._hi: Optional[int] = None

    def observe(self, c: Configuration) -> Optional[ExactCycle]:
        head = c.head
        if self._lo is None or head < self._lo or head > self._hi:
            self.seen.clear()
            self._lo = head if self._lo is None else min(self._lo, head)
            self._hi = head if self._hi is None else max(self._hi, head)
        key = canonical(c)
        first = self.seen.get(key)
        if first is not None:
            return ExactCycle(first, c.steps)
        # cycles longer than the limit may be missed, never misreported
        if len(self.seen) >= self.limit:
            self.seen.clear()
        self.seen[key] = c.steps
        return None


@dataclass
class _Record:
    step: int
    pos: int
    content: str
    lo: int
    # furthest inward head position from this record up to the next stored one
    reach: int = 0

    def window(self, a: int, b: int, blank: str) -> str:
        i, j = a - self.lo, b - self.lo
        n = len(self.content)
        left = blank * max(0, min(j + 1, 0) - i)
        mid = self.content[max(i, 0):max(min(j + 1, n), 0)]
        right = blank * max(0, j + 1 - max(i, n))
        return left + mid + right


class _Side:
    def __init__(self, sign: int, lookback: int):
        # sign -1 tracks the left edge, +1 the right edge
        self.sign = sign
        self.extreme: Optional[int] = None
        self.records: deque[_Record] = deque(maxlen=lookback)
        self.reach: Optional[int] = None

    def observe(self, c: Configuration, blank: str) -> Optional[TranslatedCycle]:
        s, head, tape = self.sign, c.head, c.tape
        inward = -s * head
        if self.reach is not None and inward > self.reach:
            self.reach = inward
        if self.extreme is not None and s * head <= s * self.extreme:
            return None
        self.extreme = head
        # beyond a valid record the tape must be blank
        if not tape.is_empty() and s * (tape.hi if s > 0 else tape.lo) > s * head:
            return None
        if self.records:
            self.records[-1].reach = self.reach
        found = self._match(c, blank)
        self.records.append(_Record(c.steps, head, tape.content(), tape.lo))
        self.reach = inward
        return found

    def _match(self, c: Configuration, blank: str) -> Optional[TranslatedCycle]:
        s, p2, tape = self.sign, c.head, c.tape
        reach = None
        for rec in reversed(self.records):
            reach = rec.reach if reach is None else max(reach, rec.reach)
            w = reach + s * rec.pos  # inward excursion measured from rec.pos
            if s < 0:
                old = rec.window(rec.pos, rec.pos + w, blank)
                new = tape.window(p2, p2 + w)
            else:
                old = rec.window(rec.pos - w, rec.pos, blank)
                new = tape.window(p2 - w, p2)
            if old == new:
                return TranslatedCycle(rec.step, c.steps, p2 - rec.pos)
        return None


class RecordBook:
    """Record-breaking snapshots on both sides of the tape."""

    def __init__(self, blank: str, lookback: int = 64):
        self.blank = blank
        self.left = _Side(-1, lookback)
        self.right = _Side(1, lookback)

    def observe(self, c: Configuration) -> Optional[TranslatedCycle]:
        found = self.left.observe(c, self.blank)
        found_right = self.right.observe(c, self.blank)
        return found or found_right


def detect_translated_cycle(records: RecordBook, c: Configuration) -> bool:
    """Feed ``c`` to ``records``; true when it closes a translated cycle.

    ``records`` must have seen every earlier configuration of the run.
    """
    return records.observe(c) is not None


class DetectorBank:
    """Per-run detector state, checked in a fixed order on every configuration."""

    def __init__(self, m: OneStateMachine, detectors: Iterable[Detector]):
        enabled = set(detectors)
        self.m = m
        self.blank_escape = Detector.BLANK_ESCAPE in enabled
        self.history = CycleHistory() if Detector.EXACT_CYCLE in enabled else None
        self.records = RecordBook(m.blank) if Detector.TRANSLATED_CYCLE in enabled else None

    def check(self, c: Configuration) -> Optional[DivergenceReason]:
        if self.blank_escape and detect_blank_escape(self.m, c):
            return BlankEscape()
        if self.history is not None:
            found = self.history.observe(c)
            if found is not None:
                return found
        if self.records is not None:
            return self.records.observe(c)
        return None


def decide_halting(m: OneStateMachine, input: str, fuel: int) -> HaltingVerdict:
    outcome = run(m, input, fuel, ALL_DETECTORS)
    if isinstance(outcome, Halted):
        return Halts(outcome.steps)
    if isinstance(outcome, Diverged):
        return Diverges(outcome.reason)
    assert isinstance(outcome, FuelExhausted)
    return Unknown(outcome.fuel)
