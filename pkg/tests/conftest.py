from pathlib import Path

import hypothesis.strategies as st
import pytest

from onestm.core import BLANK, MachineDescription, RawRule, validate

GOLDEN = Path(__file__).parent / "golden"

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN / name).read_text(encoding="utf-8")

    return read


@pytest.fixture
def record_criterion():
    def record(line: str) -> None:
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def machines(draw, max_gamma: int = 4):
    """Valid one-state machines over ``_`` plus up to three other symbols."""
    g = draw(st.integers(2, max_gamma))
    gamma = [BLANK] + ["1", "a", "b"][: g - 1]
    sigma = draw(st.lists(st.sampled_from(gamma[1:]), min_size=1, unique=True))
    halting, rules = [], []
    for sym in gamma:
        choice = draw(st.one_of(st.none(), st.tuples(st.sampled_from(gamma), st.sampled_from("LR"))))
        if choice is None:
            halting.append(sym)
        else:
            rules.append(RawRule(sym, *choice))
    rules = draw(st.permutations(rules))
    return validate(MachineDescription(BLANK, sigma, halting, list(rules), tape_alphabet=gamma))


@st.composite
def machines_with_input(draw, max_gamma: int = 4, max_len: int = 6):
    m = draw(machines(max_gamma))
    x = draw(st.text(alphabet=st.sampled_from(m.input_alphabet), max_size=max_len))
    return m, x
