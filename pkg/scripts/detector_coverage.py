#!/usr/bin/env python3
"""How often do the three detectors leave a small machine undecided?

Runs every machine of the enumeration family on every input over {1} up to a
length bound and tallies verdicts; undecided (machine, input) pairs are listed.
"""
import argparse
import itertools
from collections import Counter

from onestm.halting import Diverges, Halts, decide_halting
from onestm.verify import enumerate_one_state_machines

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gamma", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-len", type=int, default=4)
    ap.add_argument("--fuel", type=int, default=20_000)
    args = ap.parse_args()
    for g in args.gamma:
        tally, undecided = Counter(), []
        for index, m in enumerate(enumerate_one_state_machines(g)):
            for length in range(args.max_len + 1):
                x = "1" * length
                v = decide_halting(m, x, args.fuel)
                if isinstance(v, Halts):
                    tally["halts"] += 1
                elif isinstance(v, Diverges):
                    tally[v.reason.name] += 1
                else:
                    tally["unknown"] += 1
                    undecided.append((index, m, x))
        print(f"|G|={g}: " + " ".join(f"{k}={v}" for k, v in sorted(tally.items())))
        for index, m, x in undecided:
            print(f"  undecided #{index} {m!r} on {x!r}")
