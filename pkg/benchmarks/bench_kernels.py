"""Compare the compiled and pure-Python kernels on the enumeration and
filter workloads.

    python3 benchmarks/bench_kernels.py [--size 6] [--repeat 3]

Each row is the best of ``--repeat`` runs. Both backends must return the
same result, otherwise the script exits with status 1.
"""

import argparse
import os
import sys
import timeit

from reslat import _pykernels
from reslat.enumeration import enumerate_lattices, enumerate_residuated

try:
    from reslat import _ckernels
except ImportError:
    _ckernels = None


def _workloads(size):
    os.environ.setdefault("RESLAT_SIZE_CAP", str(size))
    lattices = enumerate_lattices(size)
    algebras = [L for n in range(2, size) for L in enumerate_residuated(n)]

    def monoids(k):
        return [
            sorted(k.search_monoids(L.n, L.leq, L.join, L.meet, L.bottom, L.top))
            for L in lattices
        ]

    def filters(k):
        return [list(k.filter_masks(A.n, A.leq, A.prod)) for A in algebras]

    def residuals(k):
        return [k.residual_table(A.n, A.leq, A.prod) for A in algebras]

    return [
        (f"search_monoids, {len(lattices)} lattices of size {size}", monoids),
        (f"filter_masks, {len(algebras)} algebras of size < {size}", filters),
        (f"residual_table, {len(algebras)} algebras of size < {size}", residuals),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run: python3 setup.py build_ext --inplace")
        return 1

    print(f"{'workload':<48} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for label, work in _workloads(args.size):
        if work(_pykernels) != work(_ckernels):
            print(f"{label}: backends disagree")
            return 1
        py = min(timeit.repeat(lambda: work(_pykernels), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: work(_ckernels), number=1, repeat=args.repeat))
        print(f"{label:<48} {py:>9.4f} {cy:>9.4f} {py / cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
