"""Time the numba and numpy kernel backends on the oracle's hot loops.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from arctan_dioph import _kernels

CASES = {
    "scan_x k=25 l=10 (cross_check bound)": ("scan_x", (25, 10, 26, 25 + 10 * 626, 25 * 10 + 626)),
    "scan_x k=300 l=7 (x up to 6.3e5)": ("scan_x", (300, 7, 301, 300 + 7 * 90001, 10**12)),
    "scan_x k=1000 l=3 (x up to 3e6)": ("scan_x", (1000, 3, 1001, 1000 + 3 * 1000001, 10**12)),
    "divisor_count_table 1e5": ("divisor_count_table", (10**5,)),
    "divisor_count_table 1e6": ("divisor_count_table", (10**6,)),
    "divisor_count_scan n=1e7": ("divisor_count_scan", (10**7,)),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    impls = [impl for impl in (_kernels.numba_impl(), _kernels.numpy_impl) if impl is not None]
    for impl in impls:  # compile / load cache outside the timed region
        impl.scan_x(1, 1, 2, 3, 10)
        impl.divisor_count_table(4)
        impl.divisor_count_scan(4)

    header = f"{'case':42s}" + "".join(f"{impl.name + ' (ms)':>14s}" for impl in impls)
    print(header)
    print("-" * len(header))
    for label, (name, argv) in CASES.items():
        cells = []
        for impl in impls:
            fn = getattr(impl, name)
            best = min(timeit.repeat(lambda: fn(*argv), number=1, repeat=args.repeat))
            cells.append(f"{best * 1e3:14.2f}")
        print(f"{label:42s}" + "".join(cells))


if __name__ == "__main__":
    main()
