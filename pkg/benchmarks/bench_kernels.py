#!/usr/bin/env python3
"""Benchmark the compiled kernel extension against its pure-Python twin.

Covers the three hot loops on representative workloads:

  echelon    the n = 5 tangent-space system (146 x 125 sparse integer
             rows) and a dense random 80 x 60 matrix whose elimination
             drives real coefficient growth
  tight      the brute-force tightness oracle over 60 seeded n = 3
             supports at the full (3n)^2 window
  balanced   invariant-monomial existence inside the 13-triple staircase
             support at degree cap 9 (a full exhaust: no monomial exists)

Run:  python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import importlib
import random
import sys
import time
from itertools import product

import bordersub._kernels_py as pure
from bordersub.stabilizer import _tangent_rows
from bordersub.tensors import Tensor3, build_W, sample_coefficients, unit_tensor


def load_compiled():
    try:
        return importlib.import_module("bordersub._kernels")
    except ImportError:
        return None


def bench(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def workloads():
    W5 = build_W(5, "W")
    T5 = unit_tensor(5) + Tensor3(5, sample_coefficients(W5, "bench"))
    tangent = _tangent_rows(5, T5, W5)
    rng = random.Random("bench:dense")
    dense = [[rng.randint(-9, 9) for _ in range(60)] for _ in range(80)]
    cube3 = list(product((1, 2, 3), repeat=3))
    supports = []
    for s in range(60):
        rng = random.Random(f"bench:{s}")
        supports.append(sorted(rng.sample(cube3, rng.randint(1, 10))))
    w3 = build_W(3, "W").sorted_triples()

    def echelon(rows):
        def make(mod):
            return lambda: len(mod.echelon_rows(rows))

        return make

    def tight(mod):
        def run():
            return sum(mod.tight_search(3, S, 81) is not None for S in supports)

        return run

    def balanced(mod):
        return lambda: mod.balanced_exists(3, w3, 9)

    return [
        (f"echelon tangent system ({len(tangent)}x{len(tangent[0])})", echelon(tangent)),
        ("echelon dense random (80x60)", echelon(dense)),
        (f"tight oracle ({len(supports)} supports, window 81)", tight),
        ("balanced exhaust (W(3), degree 9)", balanced),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = ap.parse_args()

    compiled = load_compiled()
    if compiled is None:
        print("compiled extension not available; showing pure-Python times only", file=sys.stderr)

    print(f"{'kernel':<44} {'pure':>12} {'compiled':>12} {'speedup':>8}")
    for name, make in workloads():
        t_pure, r_pure = bench(make(pure), args.repeat)
        if compiled is not None:
            t_comp, r_comp = bench(make(compiled), args.repeat)
            if r_pure != r_comp:
                raise SystemExit(f"backend disagreement in {name}: {r_pure} vs {r_comp}")
            print(f"{name:<44} {t_pure * 1e3:>10.2f}ms {t_comp * 1e3:>10.2f}ms {t_pure / t_comp:>7.1f}x")
        else:
            print(f"{name:<44} {t_pure * 1e3:>10.2f}ms {'-':>12} {'-':>8}")


if __name__ == "__main__":
    main()
