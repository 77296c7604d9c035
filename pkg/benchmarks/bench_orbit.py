"""Compare the numba and numpy orbit backends on a grid of moduli and genera.

Usage:
    python3 benchmarks/bench_orbit.py [--quick] [--repeats N]

The numba kernel is warmed up (and JIT-compiled) before timing, so the table
reflects steady-state throughput.  Falls back to a numpy-only table when numba
is not importable.
"""

import argparse
import time

from liftcover import (
    available_backends,
    expected_orbit_size,
    orbit_primitive_classes,
    orbit_primitive_vectors,
)

FULL_GRID = (
    (4, 2, "classes"),
    (8, 2, "classes"),
    (12, 2, "classes"),
    (8, 2, "vectors"),
    (12, 2, "vectors"),
    (8, 3, "classes"),
    (9, 3, "classes"),
    (12, 3, "classes"),
    (12, 3, "vectors"),
)

QUICK_GRID = (
    (4, 2, "classes"),
    (8, 2, "classes"),
    (8, 2, "vectors"),
    (8, 3, "classes"),
)


def run_once(k, g, mode, backend):
    runner = orbit_primitive_classes if mode == "classes" else orbit_primitive_vectors
    start = time.perf_counter()
    result = runner(k, g, backend=backend)
    elapsed = time.perf_counter() - start
    return elapsed, result.orbit_size


def best_of(k, g, mode, backend, repeats):
    best = None
    size = None
    for _ in range(repeats):
        elapsed, size = run_once(k, g, mode, backend)
        best = elapsed if best is None else min(best, elapsed)
    return best, size


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="small grid only")
    parser.add_argument("--repeats", type=int, default=3, help="best-of repeats")
    args = parser.parse_args()

    backends = available_backends()
    grid = QUICK_GRID if args.quick else FULL_GRID

    if "numba" in backends:
        print("warming up the numba kernel ...")
        run_once(2, 1, "classes", "numba")
        run_once(2, 1, "vectors", "numba")

    header = f"{'k':>4} {'g':>2} {'mode':>8} {'orbit':>8}"
    for backend in backends:
        header += f" {backend + ' (ms)':>12}"
    if len(backends) == 2:
        header += f" {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for k, g, mode in grid:
        times = {}
        size = expected_orbit_size(k, g, mode)
        for backend in backends:
            best, got = best_of(k, g, mode, backend, args.repeats)
            times[backend] = best
            if got != size:
                raise SystemExit(
                    f"orbit mismatch at k={k} g={g} {mode}: {got} != {size}"
                )
        line = f"{k:>4} {g:>2} {mode:>8} {size:>8}"
        for backend in backends:
            line += f" {times[backend] * 1000:>12.2f}"
        if len(backends) == 2:
            line += f" {times['numpy'] / times['numba']:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
