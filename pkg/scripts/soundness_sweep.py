#!/usr/bin/env python3
"""Random-machine soundness sweep: decided verdicts vs a long detector-free reference run."""
import argparse
import time

from onestm.soundness import soundness_suite

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10_000)
    ap.add_argument("--fuel", type=int, default=10_000)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--max-gamma", type=int, default=4)
    args = ap.parse_args()
    for seed in args.seeds:
        start = time.perf_counter()
        report = soundness_suite(args.samples, args.fuel, seed, args.max_gamma)
        print(f"seed={seed} {report.summary()} ({time.perf_counter() - start:.1f} s)")
        for line in report.violations:
            print("  VIOLATION", line)
