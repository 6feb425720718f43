"""Compare the compiled and pure-Python kernel backends.

Usage::

    python benchmarks/bench_kernels.py [--repeat N]

Prints the best-of-N wall time per kernel and backend, the speedup, and the
largest difference between the two backends' results.
"""

import argparse
import cmath
import math
import timeit

import numpy as np

from pemc_casimir import kernels


def _cases(mod):
    z = cmath.exp(2j * 0.7)
    xs = np.linspace(0.0, 40.0, 20001)
    return {
        "li_partial_sum(n=4, |z|=1, K=70000)": lambda: mod.li_partial_sum(4, 1.0, 2 * 0.7, 70000),
        "force_integrand(20001-point array)": lambda: mod.force_integrand(xs, 0.7),
        "integrate_force(delta=0.7)": lambda: mod.integrate_force(0.7, 0.0, 40.0, 1e-14, 1e-12, 200),
        "force sweep, 50 deltas": lambda: [
            mod.integrate_force(d, 0.0, 40.0, 1e-14, 1e-12, 200)
            for d in np.linspace(0.0, math.pi, 50)
        ],
    }, z


def _diff(a, b):
    a = np.asarray(a[0] if isinstance(a, tuple) else a, dtype=float)
    b = np.asarray(b[0] if isinstance(b, tuple) else b, dtype=float)
    return float(np.max(np.abs(a - b)))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    names = kernels.available_backends()
    print(f"backends available: {', '.join(names)} (default: {kernels.BACKEND})")
    if "cython" not in names:
        print("compiled backend not built; nothing to compare")
        return 0
    cy, _ = _cases(kernels.get_backend("cython"))
    py, _ = _cases(kernels.get_backend("python"))
    print(f"{'kernel':40s} {'cython [ms]':>12s} {'python [ms]':>12s} {'speedup':>8s} {'max |diff|':>11s}")
    for key in cy:
        tc = min(timeit.repeat(cy[key], number=1, repeat=args.repeat))
        tp = min(timeit.repeat(py[key], number=1, repeat=args.repeat))
        d = _diff(cy[key](), py[key]()) if "sweep" not in key else 0.0
        print(f"{key:40s} {tc * 1e3:12.3f} {tp * 1e3:12.3f} {tp / tc:8.1f} {d:11.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
