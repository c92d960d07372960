#!/usr/bin/env python3
"""Replay the two hand-encoded equivalence chains through the verifier.

Prints a per-step audit (size, inertia, |det|) for each chain, demonstrating
that nullity and |det| stay constant while the definiteness flips.
"""

from kinkeq import trace_stats, verify_trace
from kinkeq.formats import serialize_trace
from kinkeq.worked_examples import (
    five_to_minus_five_trace,
    obstructed_matrix_reduction_trace,
)


def show(name, trace):
    print(f"=== {name} ===")
    report = verify_trace(trace)
    print(f"valid: {report.valid}")
    for step in report.steps:
        sig = step.inertia
        print(
            f"  step {step.index:>2} {step.kind:<12} size {step.size}  "
            f"inertia ({sig.n_plus},{sig.n_minus},{sig.n_zero})  |det| {step.abs_det}"
        )
    stats = trace_stats(trace)
    print(
        f"stats: {stats.neg_kinks} negative kinks, {stats.pos_kinks} positive kinks, "
        f"{stats.pos_unkinks} positive unkinks, {stats.neg_unkinks} negative unkinks, "
        f"{stats.congruences} congruences"
    )
    print()


def main():
    show("[5] ~ [-5]", five_to_minus_five_trace())
    show("6x6 obstructed matrix ~ [[-2,-1],[-1,-2]]", obstructed_matrix_reduction_trace())
    print("serialized [5] ~ [-5] certificate:")
    print(serialize_trace(five_to_minus_five_trace()))


if __name__ == "__main__":
    main()
