"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--n 16] [--delta-max 300]
"""

import argparse
import time

from sigmatrees import _pykernels

try:
    from sigmatrees import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def sweep(mod, delta_max):
    for d in range(4, delta_max + 1):
        mod.slack_pattern_witnesses(d)
        mod.minima_scan(d)
        mod.pair_floor_witnesses(d)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--delta-max", type=int, default=300)
    args = ap.parse_args()

    impls = [("python", _pykernels)] + ([("compiled", _ckernels)] if _ckernels else [])
    print(f"{'kernel':<28}{'backend':<10}{'seconds':>10}")
    base = {}
    for name, mod in impls:
        t, (count, best, _) = timed(mod.scan_sigma, args.n, 0, args.n)
        base.setdefault("scan", t)
        print(f"{f'scan_sigma n={args.n}':<28}{name:<10}{t:>10.3f}  trees={count} sigma_max={best}"
              f"  x{base['scan'] / t:.1f}")
    for name, mod in impls:
        t, _ = timed(sweep, mod, args.delta_max)
        base.setdefault("sweep", t)
        print(f"{f'slack sweeps 4..{args.delta_max}':<28}{name:<10}{t:>10.3f}  x{base['sweep'] / t:.1f}")
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`")


if __name__ == "__main__":
    main()
