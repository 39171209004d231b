#!/usr/bin/env python3
"""Print the comparator machine's full trace on an input (default: uuuu00h)."""
import argparse

from onestm.builders import build_mcc
from onestm.cli import outcome_line
from onestm.simulator import trace

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("input", nargs="?", default="uuuu00h")
    ap.add_argument("--fuel", type=int, default=10**6)
    args = ap.parse_args()
    t = trace(build_mcc(), args.input, args.fuel)
    print(t.text(), end="")
    print(outcome_line(t.outcome)[0])
