"""Timing comparison of the two partial-sum implementations.

Runs the phi and psi series for several term counts through the numba
kernels and the chunked-numpy fallback, printing per-call time and the
speedup.  Usage:

    python3 benchmarks/bench_backends.py [--terms 10000,100000,1000000]
                                         [--repeats 5] [--t 1.0]
"""
import argparse
import time

from stirling_remainder import _series_numpy


def best_of(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(
        description="Benchmark the series-sum backends.")
    parser.add_argument("--terms", default="10000,100000,1000000",
                        help="Comma-separated term counts.")
    parser.add_argument("--repeats", type=int, default=5,
                        help="Timing repeats; the best is reported.")
    parser.add_argument("--t", type=float, default=1.0,
                        help="Kernel argument.")
    args = parser.parse_args()
    counts = [int(s) for s in args.terms.split(",") if s]

    try:
        from stirling_remainder import _series_numba
    except ImportError:
        _series_numba = None
        print("numba unavailable; timing the numpy path only\n")

    impls = {"numpy": _series_numpy}
    if _series_numba is not None:
        impls["numba"] = _series_numba
        # trigger JIT compilation outside the timed region
        _series_numba.phi_series_sum(args.t, 10)
        _series_numba.psi_series_sum(args.t, 10)

    header = f"{'kernel':<6} {'terms':>9} " + "".join(
        f"{name + ' (ms)':>14}" for name in impls)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for kernel in ("phi", "psi"):
        for n in counts:
            row = f"{kernel:<6} {n:>9} "
            timings = {}
            for name, mod in impls.items():
                fn = getattr(mod, f"{kernel}_series_sum")
                timings[name] = best_of(lambda: fn(args.t, n), args.repeats)
                row += f"{timings[name] * 1e3:>14.3f}"
            if len(timings) == 2:
                row += f"{timings['numpy'] / timings['numba']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
