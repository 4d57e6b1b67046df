"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import itertools
import timeit

from qschubert import _pykernels
from qschubert.partitions import GrassmannianContext, box_partitions, enumerate_partitions

try:
    from qschubert import _speedups
except ImportError:
    _speedups = None


def product_sweep(mod, ctx):
    """The inner loop of a product-level sweep: LR expansion then cores."""
    parts = box_partitions(ctx)
    total = 0
    for lam, mu in itertools.product(parts, repeat=2):
        for rho in mod.lr_mult(lam, mu, ctx.k, len(lam) + len(mu)):
            total += mod.core_sign(rho, ctx.n)[1]
    return total


def workloads():
    ctx = GrassmannianContext(3, 4)
    shapes = list(enumerate_partitions(14, 14, 14))
    return {
        "lr_mult (4,3,2,1)*(3,2,2,1)": lambda m: m.lr_mult((4, 3, 2, 1), (3, 2, 2, 1), 99, 99),
        "lr_coef (6,5,4,3,2,1)/(3,2,1) by (5,4,3,2,1)": lambda m: m.lr_coef((6, 5, 4, 3, 2, 1), (3, 2, 1), (5, 4, 3, 2, 1)),
        "core_sign, |rho| <= 14, n = 5": lambda m: [m.core_sign(p, 5) for p in shapes],
        "product sweep in 3x4": lambda m: product_sweep(m, ctx),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _speedups is None:
        print("compiled extension not built; only the Python kernels are timed")
    print(f"{'workload':45} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in workloads().items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _speedups is None:
            print(f"{name:45} {py:10.4f}")
            continue
        assert fn(_pykernels) == fn(_speedups), name
        cy = min(timeit.repeat(lambda: fn(_speedups), number=1, repeat=args.repeat))
        print(f"{name:45} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
