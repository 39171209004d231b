"""One-state Turing machines: simulation, divergence detection and theorem checkers."""
from .builders import build_mcc, build_unary_vs_base, well_formed_input
from .core import BLANK, InvalidMachine, Move, OneStateMachine, Rule, parse_machine, serialize_machine, validate
from .halting import Diverges, Halts, Unknown, decide_halting
from .simulator import Configuration, init, render, run, step, trace

__all__ = [
    "BLANK",
    "Configuration",
    "Diverges",
    "Halts",
    "InvalidMachine",
    "Move",
    "OneStateMachine",
    "Rule",
    "Unknown",
    "build_mcc",
    "build_unary_vs_base",
    "decide_halting",
    "init",
    "parse_machine",
    "render",
    "run",
    "serialize_machine",
    "step",
    "trace",
    "validate",
    "well_formed_input",
]
