#!/usr/bin/env python3
"""Throughput comparison of the compiled core against the NumPy fallback.

Run from the repository root:

    python benchmarks/bench_cores.py

Each workload is representative of a hot path: the vertical-line contour
quadrature and the spectral L^2 integrals are dominated by batched zeta and
gamma evaluations; kernel sampling is dominated by the divisor sieve and the
weighted exponential sums.
"""

import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from salemkit.core import implementations  # noqa: E402


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    impls = implementations()
    if "fast" not in impls:
        print("compiled core unavailable; build it with: python setup.py build_ext --inplace")
    rng = np.random.default_rng(1)

    sig = rng.uniform(-0.5, 2.0, 20000)
    tim = rng.uniform(-60.0, 60.0, 20000)
    zpts = rng.uniform(0.5, 15.0, 20000) + 1j * rng.uniform(-60.0, 60.0, 20000)
    xs = rng.uniform(0.01, 5.0, 2000)

    workloads = {}
    for name, mod in impls.items():
        div = mod.divisor_powers(200000, 0.5)
        workloads[name] = {
            "zeta batch (20k pts, |t|<=60)": lambda m=mod: m.zeta_em_many(sig, tim, 12, 1.3, 6),
            "gamma batch (20k pts)": lambda m=mod: m.gamma_many(zpts),
            "divisor sieve (n=200k)": lambda m=mod: m.divisor_powers(200000, 0.5),
            "dirichlet sums (2k abscissae)": lambda m=mod, d=div: m.dirichlet_exp_sum_many(
                d, xs, 1e-15
            ),
        }

    names = list(next(iter(workloads.values())).keys())
    width = max(len(n) for n in names)
    header = f"{'workload':<{width}}" + "".join(f"  {k:>12}" for k in workloads)
    if len(workloads) == 2:
        header += f"  {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for wname in names:
        times = {k: timeit(workloads[k][wname]) for k in workloads}
        row = f"{wname:<{width}}" + "".join(f"  {times[k]*1e3:>10.2f}ms" for k in times)
        if len(times) == 2:
            row += f"  {times['pure'] / times['fast']:>8.1f}x"
        print(row)

    # agreement spot check between the two cores
    if len(impls) == 2:
        za = impls["pure"].zeta_em_many(sig[:500], tim[:500], 12, 1.3, 6)
        zb = impls["fast"].zeta_em_many(sig[:500], tim[:500], 12, 1.3, 6)
        print(f"\nmax relative zeta disagreement: {np.max(np.abs(za - zb) / np.abs(za)):.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
