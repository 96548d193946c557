"""Compiled vs pure-Python homomorphism search.

Each case enumerates every map ``S -> A`` with the same compiled search
problem, once per backend, and checks that both return identical solution
arrays.  Usage: ``python benchmarks/bench_kernel.py [--repeat N]``.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from skellim import kernel
from skellim.category import FiniteCategory, cyclic_group
from skellim.generate import random_lattice
from skellim.homs import MapSearch
from skellim.simplicial.constructions import boundary, horn, product, std_simplex
from skellim.simplicial.nerve import nerve


def boolean_lattice(k: int) -> FiniteCategory:
    names = [format(m, f"0{k}b") for m in range(2**k)]
    return FiniteCategory.from_poset(names, lambda a, b: int(a, 2) & ~int(b, 2) == 0, name=f"B{k}")


def cases():
    L = nerve(random_lattice(3, 10))
    B = nerve(boolean_lattice(3))
    G = nerve(cyclic_group(3), bound=4)
    yield "Delta^2 -> N(lattice)", std_simplex(2), L
    yield "Delta^1 x Delta^1 -> N(lattice)", product(std_simplex(1), std_simplex(1)), L
    yield "Delta^3 -> N(lattice)", std_simplex(3), L
    yield "Delta^1 x Delta^2 -> N(B3)", product(std_simplex(1), std_simplex(2)), B
    yield "horn(3,1) -> N(Z/3)", horn(3, 1), G
    yield "boundary(3) -> N(Z/3)", boundary(3), G


def _time(search: MapSearch, repeat: int):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = search.raw_array()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    try:
        kernel.use("cython")
    except ImportError:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'case':36} {'maps':>8} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for name, S, A in cases():
        search = MapSearch(S, A)
        kernel.use("cython")
        tc, rc = _time(search, args.repeat)
        kernel.use("python")
        tp, rp = _time(search, args.repeat)
        if not np.array_equal(np.asarray(rc), np.asarray(rp)):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:36} {len(rc):>8} {tc:>10.4f} {tp:>10.4f} {tp / max(tc, 1e-9):>7.1f}x")
    kernel.use("cython")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
