"""The unary-vs-binary comparator machine and its base-k generalisation."""
from __future__ import annotations

from .core import OneStateMachine

MIN_BASE, MAX_BASE = 2, 10


class BaseOutOfRange(ValueError):
    pass


def build_unary_vs_base(k: int) -> OneStateMachine:
    """Compare a unary counter ``u^n`` against a base-``k`` counter of ``m`` digits.

    The machine halts on ``u^n 0^m h`` exactly when ``n >= k**m - 1`` (checked
    empirically by :mod:`onestm.verify`).  Digits are the characters ``'0'``
    up to ``str(k - 1)``; a full digit becomes the carry marker ``Z``.
    """
    if not isinstance(k, int) or not MIN_BASE <= k <= MAX_BASE:
        raise BaseOutOfRange(f"base must be an integer in [{MIN_BASE}, {MAX_BASE}], got {k!r}")
    rules = [("u", "U", "R"), _digit_rule(0, k), ("U", "C", "R")]
    rules += [_digit_rule(d, k) for d in range(1, k)]
    rules += [("Z", "0", "L"), ("C", "B", "L"), ("B", "C", "R"), ("_", "_", "L")]
    return OneStateMachine.create(input_alphabet=["u", "0", "h"], halting=["h"], rules=rules)


def _digit_rule(d: int, k: int) -> tuple[str, str, str]:
    if d < k - 1:
        return (str(d), str(d + 1), "L")
    return (str(d), "Z", "R")


def build_mcc() -> OneStateMachine:
    """The eight-rule unary/binary comparator, rules in table order."""
    return OneStateMachine.create(
        input_alphabet=["u", "0", "h"],
        halting=["h"],
        rules=[
            ("u", "U", "R"),
            ("0", "1", "L"),
            ("U", "C", "R"),
            ("1", "Z", "R"),
            ("Z", "0", "L"),
            ("C", "B", "L"),
            ("B", "C", "R"),
            ("_", "_", "L"),
        ],
    )


def well_formed_input(n: int, m: int) -> str:
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    return "u" * n + "0" * m + "h"


def resolve_builtin(name: str) -> OneStateMachine:
    """Look up ``mcc`` or ``unary-vs-base:<k>``."""
    if name == "mcc":
        return build_mcc()
    prefix = "unary-vs-base:"
    if name.startswith(prefix):
        try:
            k = int(name[len(prefix):])
        except ValueError:
            raise BaseOutOfRange(f"bad base in {name!r}") from None
        return build_unary_vs_base(k)
    raise KeyError(f"unknown builtin machine {name!r}")
