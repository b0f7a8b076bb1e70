"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--order 256] [--repeat 5]

Prints the best-of-``repeat`` wall time per kernel and backend, and the
speedup of the compiled backend where it is available.
"""

import argparse
import timeit

import numpy as np

from minda_radii import kernels


def cases(order: int, rng):
    a = rng.standard_normal(order + 1) + 1j * rng.standard_normal(order + 1)
    b = a.copy()
    b[0] = 1.0
    k = a.copy()
    k[0] = 0.0
    w = np.zeros(order + 1, dtype=complex)
    w[1:3] = [0.5, 0.25]
    theta = 2 * np.pi * np.arange(4096) / 4096
    vx, vy = np.cos(theta), np.sin(theta)
    px, py = rng.uniform(-1.2, 1.2, 2048), rng.uniform(-1.2, 1.2, 2048)
    return {
        "cauchy_product": lambda m: kernels.cauchy_product(a, a, impl=m),
        "exp_recurrence": lambda m: kernels.exp_recurrence(k, impl=m),
        "div_recurrence": lambda m: kernels.div_recurrence(a, b, impl=m),
        "compose": lambda m: kernels.compose(a, w, impl=m),
        "even_odd_contains": lambda m: kernels.even_odd_contains(px, py, vx, vy, impl=m),
        "min_segment_distance": lambda m: kernels.min_segment_distance(px, py, vx, vy, impl=m),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=256)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    rng = np.random.default_rng(0)
    print(f"order={args.order} backends={', '.join(backends)}")
    print(f"{'kernel':22s}" + "".join(f"{name:>14s}" for name in backends) + f"{'speedup':>10s}")
    for name, fn in cases(args.order, rng).items():
        times = {}
        for bname, mod in backends.items():
            fn(mod)  # warm up
            times[bname] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = f"{name:22s}" + "".join(f"{times[b] * 1e3:12.3f}ms" for b in backends)
        if "compiled" in times:
            row += f"{times['python'] / times['compiled']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
