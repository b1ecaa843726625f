"""Compare the compiled and pure-Python kernel backends.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 9 --size 256
"""

import argparse
import random
import statistics
import time
from fractions import Fraction

from polyval import _kernels_py as pure

try:
    from polyval import _speedups as fast
except ImportError:
    fast = None


def bench(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def make_workloads(size, rng):
    dense_a = [rng.randint(-99, 99) for _ in range(size)]
    dense_b = [rng.randint(-99, 99) for _ in range(size)]
    mod = [rng.randint(-9, 9) for _ in range(size // 2)] + [1]
    sparse_a = [(rng.randint(0, 8 * size), Fraction(rng.randint(1, 50), rng.randint(1, 9)))
                for _ in range(size)]
    sparse_b = [(rng.randint(0, 8 * size), Fraction(rng.randint(1, 50), rng.randint(1, 9)))
                for _ in range(size)]
    return {
        "poly_mul": (dense_a, dense_b),
        "poly_rem": (pure.poly_mul(dense_a, dense_b), mod),
        "series_mul": (sparse_a, sparse_b),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=192, help="workload size knob")
    ap.add_argument("--repeat", type=int, default=5, help="timed repetitions")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    work = make_workloads(args.size, rng)

    backends = [("python", pure)]
    if fast is not None:
        backends.append(("cython", fast))
    else:
        print("compiled backend not importable; timing pure python only")

    print(f"size={args.size} repeat={args.repeat} seed={args.seed}")
    header = f"{'kernel':<12}" + "".join(f"{name:>14}" for name, _ in backends)
    if fast is not None:
        header += f"{'speedup':>10}"
    print(header)
    for kernel in ("poly_mul", "poly_rem", "series_mul"):
        row = f"{kernel:<12}"
        best = {}
        for name, mod_ in backends:
            fn = getattr(mod_, kernel)
            b, _ = bench(fn, work[kernel], args.repeat)
            best[name] = b
            row += f"{b * 1e3:>12.2f}ms"
        if fast is not None:
            row += f"{best['python'] / best['cython']:>9.1f}x"
        print(row)

    # cross-check: both backends must agree on the benchmark inputs
    if fast is not None:
        for kernel in ("poly_mul", "poly_rem", "series_mul"):
            assert getattr(fast, kernel)(*work[kernel]) == getattr(pure, kernel)(
                *work[kernel]
            ), f"backend mismatch in {kernel}"
        print("cross-check: outputs identical across backends")


if __name__ == "__main__":
    main()
