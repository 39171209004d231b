#!/usr/bin/env python3
"""Run every verification suite at desk scale and print the reports."""
import argparse
import time

from onestm.builders import build_unary_vs_base, well_formed_input
from onestm.halting import Halts, Unknown, decide_halting
from onestm.verify import comparator_holds, crosscheck_theorem2, verify_lemma_notcf, verify_theorem1


def base_k_grid(k_values, m_max, fuel):
    for k in k_values:
        m = build_unary_vs_base(k)
        bad, unknown, total = 0, 0, 0
        for digits in range(m_max + 1):
            for n in range(k**m_max + 1):
                v = decide_halting(m, well_formed_input(n, digits), fuel)
                total += 1
                unknown += isinstance(v, Unknown)
                bad += not isinstance(v, Unknown) and isinstance(v, Halts) != comparator_holds(n, digits, k)
        print(f"base {k}: {total} cases, {bad} mismatches with n >= {k}^m - 1, {unknown} unknown")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=40)
    ap.add_argument("--mmax", type=int, default=5)
    ap.add_argument("--pmax", type=int, default=5)
    args = ap.parse_args()
    start = time.perf_counter()
    print(crosscheck_theorem2(args.nmax, args.mmax, 10**7).summary())
    for p in range(1, args.pmax + 1):
        print(verify_lemma_notcf(p, 8).summary())
    for g in (2, 3):
        print(verify_theorem1(g, 10**5, 5).summary())
    base_k_grid(range(2, 6), 3, 10**7)
    print(f"total {time.perf_counter() - start:.1f} s")
