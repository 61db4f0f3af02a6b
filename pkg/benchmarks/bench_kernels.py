"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each workload runs once per backend to warm up (numba compiles or loads its
cache), then `repeat` more times; the best time is reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from wreathhopf.abelian import AbelianSpec
from wreathhopf.finite import _kernels
from wreathhopf.finite.automorphisms import aut_brute
from wreathhopf.finite.groups import natural_action, regular_action, symmetric_group
from wreathhopf.finite.module import FiniteWreath


def workloads():
    W = FiniteWreath(natural_action(symmetric_group(3)), AbelianSpec((3,)))
    reg = regular_action(W.group)
    gi = np.ascontiguousarray(reg.images[reg.group.generators])
    rng = np.random.default_rng(0)
    M = rng.integers(0, 27, size=(120, 80)).astype(np.int64)
    return {
        "aut_brute Z/3 wr S3 (|G|=162)": lambda: aut_brute(W.group),
        "pair_orbits regular action of |G|=162": lambda: _kernels.K.pair_orbits(gi),
        "local_smith 120x80 over Z/27": lambda: _kernels.K.local_smith(M, 3, 3),
    }


def best_time(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = _kernels.backends()
    if len(backends) < 2:
        print("numba is not installed; only the numpy backend is available")
    jobs = workloads()
    print(f"{'workload':42s}" + "".join(f"{b.name:>12s}" for b in backends) + "     speedup")
    for label, fn in jobs.items():
        row = []
        for b in backends:
            _kernels.K = b
            row.append(best_time(fn, args.repeat))
        speed = f"{row[0] / row[-1]:10.1f}x" if len(row) > 1 else ""
        print(f"{label:42s}" + "".join(f"{t:11.4f}s" for t in row) + speed)


if __name__ == "__main__":
    main()
