#!/usr/bin/env python3
"""Reduce a batch of random symmetric matrices and summarize the move costs.

Usage: random_reduction_demo.py [count] [max_size] [seed]
"""

import random
import sys

from kinkeq import Kink, NEG_SEMIDEFINITE, Unkink, inertia, reduce, verify_trace
from kinkeq.exact import SymMatrix


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 100
    max_size = int(sys.argv[2]) if len(sys.argv) > 2 else 5
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 0
    rng = random.Random(seed)

    total_kinks = total_unkinks = slack = 0
    for _ in range(count):
        n = rng.randint(1, max_size)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-4, 4)
        G = SymMatrix.from_rows(rows)
        n_plus = inertia(G).n_plus
        trace = reduce(G, NEG_SEMIDEFINITE)
        assert verify_trace(trace).valid
        kinks = sum(1 for m in trace.moves if isinstance(m, Kink))
        unkinks = sum(1 for m in trace.moves if isinstance(m, Unkink))
        total_kinks += kinks
        total_unkinks += unkinks
        slack += 4 * n_plus - kinks

    print(f"{count} matrices reduced to negative-semidefinite form")
    print(f"total negative kinks: {total_kinks} (unused budget: {slack})")
    print(f"total positive unkinks: {total_unkinks}")


if __name__ == "__main__":
    main()
