#!/usr/bin/env python3
"""Show that the 6x6 obstructed matrix is positive-definite and
kink-equivalent to a negative-definite matrix, yet admits no integer Gram
factorization CC^T — the search exhausts its finite canonical space and
returns NONE.
"""

import time

from kinkeq import NEG_DEFINITE, cct_search, determinant, inertia, reduce, verify_trace
from kinkeq.formats import serialize_matrix
from kinkeq.worked_examples import OBSTRUCTED_GRAM_MATRIX


def main():
    G = OBSTRUCTED_GRAM_MATRIX
    print("matrix:")
    print(serialize_matrix(G))
    sig = inertia(G)
    print(f"inertia: ({sig.n_plus}, {sig.n_minus}, {sig.n_zero})   det: {determinant(G)}")

    t0 = time.time()
    factor = cct_search(G)
    print(f"Gram factor search: {'NONE' if factor is None else factor.matrix} "
          f"({time.time() - t0:.2f}s)")

    t0 = time.time()
    trace = reduce(G, NEG_DEFINITE)
    report = verify_trace(trace)
    print(
        f"reduction to negative-definite: end size {trace.end.n}, "
        f"|det| {abs(determinant(trace.end))}, verified {report.valid} "
        f"({time.time() - t0:.2f}s)"
    )


if __name__ == "__main__":
    main()
