"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--bound 100000000] [--repeat 3]

Times a full segmented sieve and a batch of prime-counting chains with each
backend and checks that both produce identical output.
"""
import argparse
import time
from math import isqrt

import numpy as np

from hoprimes import sieve_core
from hoprimes._kernels import _pykernels

try:
    from hoprimes._kernels import _ckernels
except ImportError:
    _ckernels = None


def full_sieve(k, bound):
    base = k.simple_sieve(isqrt(bound))
    parts, lo = [], 0
    while lo <= bound:
        hi = min(lo + sieve_core.SEGMENT_SPAN, bound + 1)
        parts.append(k.segment_primes(lo, hi, base))
        lo = hi
    return np.concatenate(parts)


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=10**8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    sieves, chains = {}, {}
    print(f"{'kernel':<28}{'backend':<10}{'seconds':>10}")
    for name, k in backends:
        dt, sieves[name] = best_of(lambda: full_sieve(k, args.bound), args.repeat)
        print(f"{f'sieve to {args.bound:.0e}':<28}{name:<10}{dt:>10.3f}")
    primes = sieves["python"]
    sample = primes[: min(len(primes), 2_000_000)]
    for name, k in backends:
        dt, chains[name] = best_of(lambda: k.chain_orders(primes, sample), args.repeat)
        print(f"{f'chain orders x{len(sample)}':<28}{name:<10}{dt:>10.3f}")
    if len(backends) == 2:
        assert np.array_equal(sieves["python"], sieves["cython"])
        assert np.array_equal(chains["python"], chains["cython"])
        print("outputs identical")
    else:
        print("compiled kernels not built; fallback only")


if __name__ == "__main__":
    main()
