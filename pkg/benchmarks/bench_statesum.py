"""Compare the numba and numpy state-enumeration kernels (plus the linear
tangle path) on P(1,1,n) and a few mixed pretzels.

    python benchmarks/bench_statesum.py --sizes 8 12 16 20 --repeat 3
"""
import argparse
import time

import numpy as np

from pretzelpoly import _kernels
from pretzelpoly.bracket import bracket_from_histogram, bracket_tangle_eval
from pretzelpoly.diagram import build_diagram


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16, 18])
    ap.add_argument("--extra", nargs="*", default=["2,3,7", "-2,3,3,4", "4,-4,4,-4"])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    specs = [(1, 1, c - 2) for c in args.sizes] + [tuple(int(x) for x in s.split(",")) for s in args.extra]
    backends = _kernels.available_backends()
    if "numba" in backends:
        d = build_diagram((1, 1, 1))
        _kernels.numba_histogram(d.wire, d.a_vertical(), 0, 8)  # compile / load cache

    header = f"{'spec':>14} {'states':>9}" + "".join(f" {b + ' s':>11}" for b in backends) + f" {'speedup':>8} {'tangle s':>10}"
    print(header)
    for spec in specs:
        d = build_diagram(spec)
        n = d.n_crossings
        av = d.a_vertical()
        times, hists = {}, {}
        for b in backends:
            times[b], hists[b] = timed(lambda: _kernels.circle_histogram(d.wire, av, 0, 1 << n, backend=b), args.repeat)
        ref = next(iter(hists.values()))
        assert all(np.array_equal(h, ref) for h in hists.values()), "backends disagree"
        t_tangle, tangle = timed(lambda: bracket_tangle_eval(spec).polynomial, args.repeat)
        assert tangle == bracket_from_histogram(ref, n)
        speed = f"{times['numpy'] / times['numba']:8.1f}" if "numba" in times else f"{'-':>8}"
        label = ",".join(map(str, spec))
        print(f"{label:>14} {1 << n:>9}" + "".join(f" {times[b]:>11.4f}" for b in backends)
              + f" {speed} {t_tangle:>10.5f}")


if __name__ == "__main__":
    main()
