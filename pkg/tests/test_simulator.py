import pytest
from hypothesis import given, settings, strategies as st

from onestm.builders import build_mcc
from onestm.core import OneStateMachine
from onestm.halting import ALL_DETECTORS, BlankEscape
from onestm.simulator import (
    Continue,
    Diverged,
    FuelExhausted,
    Halt,
    Halted,
    InputSymbolNotInAlphabet,
    SteppingHaltedConfiguration,
    Tape,
    init,
    render,
    run,
    step,
    trace,
)

from .conftest import machines_with_input

MCC = build_mcc()


def advance(m, c, n):
    for _ in range(n):
        assert isinstance(step(m, c), Continue)
    return c


def test_init_places_input_at_zero():
    c = init(MCC, "uuuu00h")
    assert c.tape.lo == 0 and c.tape.content() == "uuuu00h"
    assert (c.head, c.steps) == (0, 0)


def test_init_empty_input():
    c = init(MCC, "")
    assert c.tape.is_empty() and c.head == 0 and c.symbol == "_"


def test_init_rejects_foreign_symbol():
    with pytest.raises(InputSymbolNotInAlphabet) as info:
        init(MCC, "ux")
    assert (info.value.symbol, info.value.position) == ("x", 1)


def test_first_step_of_figure(golden):
    lines = golden("figure1.txt").splitlines()
    c = init(MCC, "uuuu00h")
    assert render(c) == lines[0]
    step(MCC, c)
    assert c.tape[0] == "U" and c.head == 1 and c.steps == 1
    assert render(c) == lines[1]


def test_last_steps_of_figure(golden):
    lines = golden("figure1.txt").splitlines()
    c = advance(MCC, init(MCC, "uuuu00h"), 19)
    assert render(c) == lines[19] and c.head == 5 and c.symbol == "1"
    step(MCC, c)
    assert render(c) == lines[20] and c.tape[5] == "Z" and c.symbol == "h"
    result = step(MCC, c)
    assert isinstance(result, Halt) and result.config.steps == 20
    with pytest.raises(SteppingHaltedConfiguration):
        step(MCC, c)


def test_blank_rule_moves_left():
    c = init(MCC, "")
    c.head = -1
    step(MCC, c)
    assert c.head == -2 and c.tape.is_empty()


def test_every_figure_line(golden):
    c = init(MCC, "uuuu00h")
    for expected in golden("figure1.txt").splitlines():
        assert render(c) == expected
        if isinstance(step(MCC, c), Halt):
            break
    assert c.steps == 20


def test_run_figure_input():
    assert run(MCC, "uuuu00h", 10**6, ALL_DETECTORS) == Halted(20)


def test_run_diverging_input_step_index():
    # independent oracle: first configuration with the head on a blank left of the input
    c = init(MCC, "uu00h")
    while c.head >= 0:
        step(MCC, c)
    assert run(MCC, "uu00h", 10**6, ALL_DETECTORS) == Diverged(BlankEscape(), c.steps)
    assert c.steps == 13


def test_run_immediate_halt():
    assert run(MCC, "h", 10**6, ALL_DETECTORS) == Halted(0)
    assert run(MCC, "h", 0) == Halted(0)


def test_run_without_detectors_exhausts_fuel():
    assert run(MCC, "uu00h", 500) == FuelExhausted(500)


def test_render_examples(golden):
    assert render(init(MCC, "uuuu00h")) == " _ [u] u  u  u  0  0  h  _"
    c = advance(MCC, init(MCC, "uuuu00h"), 9)
    assert render(c) == " _  U  U  U [C] 0  1  h  _"
    assert render(init(MCC, "")) == " _ [_] _"


def test_trace_figure(golden):
    t = trace(MCC, "uuuu00h", 10**6)
    assert t.text() == golden("figure1.txt")
    assert len(t.lines) == 21 and t.outcome == Halted(20)


def test_trace_immediate_halt():
    t = trace(MCC, "h", 10**6)
    assert t.lines == [" _ [h] _"] and t.outcome == Halted(0)


def test_trace_line_count_matches_steps():
    t = trace(MCC, "u0h", 10**6)
    assert isinstance(t.outcome, Halted)
    assert len(t.lines) == t.outcome.steps + 1


def test_trace_window_grows_on_outward_walk():
    t = trace(MCC, "uu00h", 20, detectors=())
    widths = [len(line.rstrip()) for line in t.lines]
    assert t.outcome == FuelExhausted(20)
    assert len(t.lines) == 21
    assert t.lines[-1].startswith(" _ [_]")
    assert widths[-1] > widths[0]


def test_tape_write_keeps_interval_tight():
    tape = Tape("ab", 0)
    tape[3] = "c"
    assert (tape.lo, tape.content()) == (0, "ab_c")
    tape[3] = "_"
    assert (tape.lo, tape.hi, tape.content()) == (0, 1, "ab")
    tape[0] = "_"
    assert (tape.lo, tape.content()) == (1, "b")
    tape[1] = "_"
    assert tape.is_empty()
    tape[-4] = "z"
    assert (tape.lo, tape.content()) == (-4, "z")
    tape[-6] = "y"
    assert (tape.lo, tape.content()) == (-6, "y_z")
    assert tape == Tape("__y_z__", -8)


@settings(max_examples=150, deadline=None)
@given(machines_with_input(), st.integers(0, 300))
def test_step_properties(mx, fuel):
    m, x = mx
    c = init(m, x)
    lines = [render(c)]
    previous_window = (c.span_lo, c.span_hi)
    while c.steps < fuel:
        before = c.steps
        if isinstance(step(m, c), Halt):
            break
        assert c.steps == before + 1
        assert c.tape.is_tight()
        window = (min(c.span_lo, c.head), max(c.span_hi, c.head))
        assert window[0] <= previous_window[0] and window[1] >= previous_window[1]
        previous_window = window
        lines.append(render(c))
    t = trace(m, x, fuel, detectors=())
    assert t.lines == lines
    assert len(t.lines) == (t.outcome.steps if isinstance(t.outcome, Halted) else fuel) + 1
    assert trace(m, x, fuel, detectors=()).text() == t.text()


@settings(max_examples=150, deadline=None)
@given(machines_with_input(), st.integers(0, 200), st.integers(0, 400))
def test_monotone_fuel(mx, f1, extra):
    m, x = mx
    first = run(m, x, f1, ALL_DETECTORS)
    if not isinstance(first, FuelExhausted):
        assert run(m, x, f1 + extra, ALL_DETECTORS) == first
    plain = run(m, x, f1)
    if isinstance(plain, Halted):
        assert run(m, x, f1 + extra) == plain


def test_machine_writing_past_input_extends_render_window():
    m = OneStateMachine.create("a", [], [("a", "a", "R"), ("_", "b", "L"), ("b", "b", "L")])
    t = trace(m, "a", 4, detectors=())
    assert t.lines[0] == " _ [a] _"
    assert t.lines[1] == " _  a [_] _"
    assert t.lines[2] == " _ [a] b  _"
