"""Domain types for one-state Turing machines and the machine-definition file format.

A one-state machine has no state register: its behaviour is the tape alphabet,
the set of halting symbols and a transition table mapping every non-halting
symbol to ``(write, move)``.  The blank is always written ``_``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

BLANK = "_"


class Move(enum.Enum):
    L = -1
    R = 1

    @property
    def delta(self) -> int:
        return self.value


@dataclass(frozen=True)
class Rule:
    write: str
    move: Move


class ErrorKind(enum.Enum):
    BLANK_IN_INPUT = "BlankInInput"
    BLANK_MISSING = "BlankMissing"
    INPUT_NOT_IN_TAPE = "InputNotInTape"
    HALTING_NOT_IN_TAPE = "HaltingNotInTape"
    MISSING_TRANSITION = "MissingTransition"
    TRANSITION_ON_HALTING_SYMBOL = "TransitionOnHaltingSymbol"
    WRITE_SYMBOL_UNKNOWN = "WriteSymbolUnknown"
    DUPLICATE_RULE = "DuplicateRule"
    BAD_SYMBOL_LITERAL = "BadSymbolLiteral"


@dataclass(frozen=True)
class MachineValidationError:
    kind: ErrorKind
    symbol: Optional[str] = None
    line: Optional[int] = None
    detail: str = ""

    def __str__(self) -> str:
        where = f"line {self.line}: " if self.line is not None else ""
        sym = f" {self.symbol!r}" if self.symbol is not None else ""
        extra = f" ({self.detail})" if self.detail else ""
        return f"{where}{self.kind.value}{sym}{extra}"


class InvalidMachine(ValueError):
    """Raised by :func:`validate` and :func:`parse_machine`; carries every error found."""

    def __init__(self, errors: Sequence[MachineValidationError]):
        self.errors = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))

    def kinds(self) -> set[ErrorKind]:
        return {e.kind for e in self.errors}


@dataclass
class RawRule:
    read: str
    write: str
    move: str
    line: Optional[int] = None


@dataclass
class MachineDescription:
    """Unchecked machine description, as written by hand or read from a file.

    ``tape_alphabet`` may be omitted, in which case it is inferred as the blank,
    the input and halting symbols, and every symbol mentioned by a rule.
    """

    blank: Optional[str] = BLANK
    input_alphabet: list[str] = field(default_factory=list)
    halting: list[str] = field(default_factory=list)
    rules: list[RawRule] = field(default_factory=list)
    tape_alphabet: Optional[list[str]] = None
    blank_line: Optional[int] = None
    input_line: Optional[int] = None
    halt_line: Optional[int] = None


class OneStateMachine:
    """A validated one-state Turing machine.

    Build through :func:`validate` (or :meth:`create`); the constructor trusts
    its arguments.  Equality ignores declaration order, while serialization
    keeps it so that files round-trip byte for byte.
    """

    __slots__ = ("blank", "input_alphabet", "halting", "transitions", "tape_alphabet", "_key")

    def __init__(
        self,
        blank: str,
        input_alphabet: tuple[str, ...],
        halting: tuple[str, ...],
        transitions: Mapping[str, Rule],
        tape_alphabet: tuple[str, ...],
    ):
        self.blank = blank
        self.input_alphabet = input_alphabet
        self.halting = halting
        self.transitions = dict(transitions)
        self.tape_alphabet = tape_alphabet
        self._key = (
            blank,
            frozenset(input_alphabet),
            frozenset(halting),
            frozenset(self.transitions.items()),
            frozenset(tape_alphabet),
        )

    @classmethod
    def create(
        cls,
        input_alphabet: Iterable[str],
        halting: Iterable[str],
        rules: Iterable[tuple[str, str, str]],
        *,
        blank: str = BLANK,
        tape_alphabet: Optional[Iterable[str]] = None,
    ) -> "OneStateMachine":
        desc = MachineDescription(
            blank=blank,
            input_alphabet=list(input_alphabet),
            halting=list(halting),
            rules=[RawRule(r, w, mv) for r, w, mv in rules],
            tape_alphabet=None if tape_alphabet is None else list(tape_alphabet),
        )
        return validate(desc)

    def is_halting(self, symbol: str) -> bool:
        return symbol in self.halting

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OneStateMachine):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        rules = " ".join(f"{s}{r.write}{r.move.name}" for s, r in self.transitions.items())
        return f"OneStateMachine(input={''.join(self.input_alphabet)!r}, halt={''.join(self.halting)!r}, rules={rules!r})"


def _bad_literal(sym: object) -> bool:
    return not (isinstance(sym, str) and len(sym) == 1 and sym.isprintable() and not sym.isspace())


def _unique(items: Iterable[str]) -> list[str]:
    return list(dict.fromkeys(items))


def validate(desc: MachineDescription) -> OneStateMachine:
    """Check every machine invariant, accumulating all violations.

    Returns the machine, or raises :class:`InvalidMachine` listing each error.
    """
    errors: list[MachineValidationError] = []

    def err(kind: ErrorKind, symbol: Optional[str] = None, line: Optional[int] = None, detail: str = "") -> None:
        errors.append(MachineValidationError(kind, symbol, line, detail))

    blank = desc.blank
    if blank is None:
        err(ErrorKind.BLANK_MISSING, detail="no blank declared")
    elif blank != BLANK:
        err(ErrorKind.BAD_SYMBOL_LITERAL, blank, desc.blank_line, "blank must be '_'")
        blank = None

    for sym in desc.input_alphabet:
        if _bad_literal(sym):
            err(ErrorKind.BAD_SYMBOL_LITERAL, sym, desc.input_line)
    for sym in desc.halting:
        if _bad_literal(sym):
            err(ErrorKind.BAD_SYMBOL_LITERAL, sym, desc.halt_line)
    if desc.tape_alphabet is not None:
        for sym in desc.tape_alphabet:
            if _bad_literal(sym):
                err(ErrorKind.BAD_SYMBOL_LITERAL, sym)

    if BLANK in desc.input_alphabet:
        err(ErrorKind.BLANK_IN_INPUT, BLANK, desc.input_line)

    transitions: dict[str, Rule] = {}
    mentioned: list[str] = []
    for raw in desc.rules:
        ok = True
        for sym in (raw.read, raw.write):
            if _bad_literal(sym):
                err(ErrorKind.BAD_SYMBOL_LITERAL, sym, raw.line)
                ok = False
        if raw.move not in ("L", "R"):
            err(ErrorKind.BAD_SYMBOL_LITERAL, raw.move, raw.line, "move must be L or R")
            ok = False
        if not ok:
            continue
        if raw.read in transitions:
            err(ErrorKind.DUPLICATE_RULE, raw.read, raw.line)
            continue
        transitions[raw.read] = Rule(raw.write, Move[raw.move])
        mentioned += [raw.read, raw.write]

    good_input = [s for s in desc.input_alphabet if not _bad_literal(s)]
    good_halt = [s for s in desc.halting if not _bad_literal(s)]

    if desc.tape_alphabet is None:
        gamma = _unique(([blank] if blank else []) + good_input + good_halt + mentioned)
    else:
        gamma = _unique(s for s in desc.tape_alphabet if not _bad_literal(s))
        if blank is not None and blank not in gamma:
            err(ErrorKind.BLANK_MISSING, blank, detail="blank not in tape alphabet")
        for sym in good_input:
            if sym not in gamma:
                err(ErrorKind.INPUT_NOT_IN_TAPE, sym, desc.input_line)
        for sym in good_halt:
            if sym not in gamma:
                err(ErrorKind.HALTING_NOT_IN_TAPE, sym, desc.halt_line)
        for raw in desc.rules:
            if raw.read in transitions and raw.read not in gamma:
                err(ErrorKind.WRITE_SYMBOL_UNKNOWN, raw.read, raw.line, "read symbol not in tape alphabet")
        for sym, rule in transitions.items():
            if rule.write not in gamma:
                line = next((r.line for r in desc.rules if r.read == sym), None)
                err(ErrorKind.WRITE_SYMBOL_UNKNOWN, rule.write, line)

    halting = _unique(good_halt)
    for raw in desc.rules:
        if raw.read in halting and raw.read in transitions:
            err(ErrorKind.TRANSITION_ON_HALTING_SYMBOL, raw.read, raw.line)
    for sym in gamma:
        if sym not in halting and sym not in transitions:
            err(ErrorKind.MISSING_TRANSITION, sym)

    if errors:
        raise InvalidMachine(errors)
    assert blank is not None
    return OneStateMachine(
        blank=blank,
        input_alphabet=tuple(_unique(good_input)),
        halting=tuple(halting),
        transitions=transitions,
        tape_alphabet=tuple(gamma),
    )


def parse_description(text: str) -> tuple[MachineDescription, list[MachineValidationError]]:
    """Split a machine-definition document into a raw description plus syntax errors."""
    desc = MachineDescription(blank=None)
    errors: list[MachineValidationError] = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *args = line.split()
        if keyword == "blank":
            if desc.blank is not None:
                errors.append(MachineValidationError(ErrorKind.BAD_SYMBOL_LITERAL, None, lineno, "second blank declaration"))
            elif len(args) != 1:
                errors.append(MachineValidationError(ErrorKind.BAD_SYMBOL_LITERAL, " ".join(args), lineno, "blank takes one symbol"))
            else:
                desc.blank, desc.blank_line = args[0], lineno
        elif keyword == "input":
            desc.input_alphabet += args
            desc.input_line = lineno
        elif keyword == "halt":
            desc.halting += args
            desc.halt_line = lineno
        elif keyword == "rule":
            if len(args) != 3:
                errors.append(MachineValidationError(ErrorKind.BAD_SYMBOL_LITERAL, " ".join(args), lineno, "rule takes <read> <write> <L|R>"))
            else:
                desc.rules.append(RawRule(args[0], args[1], args[2], lineno))
        else:
            errors.append(MachineValidationError(ErrorKind.BAD_SYMBOL_LITERAL, keyword, lineno, "unknown directive"))
    return desc, errors


def parse_machine(text: str) -> OneStateMachine:
    desc, errors = parse_description(text)
    try:
        machine = validate(desc)
    except InvalidMachine as exc:
        raise InvalidMachine(errors + exc.errors) from None
    if errors:
        raise InvalidMachine(errors)
    return machine


def serialize_machine(m: OneStateMachine) -> str:
    """Render ``m`` in the canonical, byte-stable file form."""
    lines = [f"blank {m.blank}", " ".join(["input", *m.input_alphabet])]
    # an empty halting set is written by omission
    if m.halting:
        lines.append(" ".join(["halt", *m.halting]))
    lines += [f"rule {sym} {rule.write} {rule.move.name}" for sym, rule in m.transitions.items()]
    return "\n".join(lines) + "\n"
