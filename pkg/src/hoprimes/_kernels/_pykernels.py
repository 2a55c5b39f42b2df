"""Reference kernels in plain Python (plus numpy for array hand-off).

Used when the compiled extension is unavailable or ``HOPRIMES_PURE=1``.
Both kernel modules expose the same three functions with identical results.
"""
from __future__ import annotations

from itertools import compress

import numpy as np


def simple_sieve(bound):
    """All primes <= bound from a single, unsegmented sieve."""
    if bound < 2:
        return np.empty(0, dtype=np.int64)
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= bound:
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, bound + 1, p)))
        p += 1
    return np.fromiter(compress(range(bound + 1), flags), dtype=np.int64)


def segment_primes(lo, hi, base):
    """Primes in the half-open range [lo, hi).

    ``base`` must contain every odd prime <= sqrt(hi - 1), ascending; a
    leading 2 is ignored. Only odd candidates are held in memory.
    """
    out = []
    if lo <= 2 < hi:
        out.append(2)
    if lo < 3:
        lo = 3
    if lo % 2 == 0:
        lo += 1
    if lo >= hi:
        return np.array(out, dtype=np.int64)
    n = (hi - lo + 1) // 2  # odd numbers lo, lo+2, ..., < hi
    flags = bytearray([1]) * n
    for p in base.tolist():
        if p == 2:
            continue
        pp = p * p
        if pp >= hi:
            break
        start = max(pp, (lo + p - 1) // p * p)
        if start % 2 == 0:
            start += p
        first = (start - lo) // 2
        if first < n:
            flags[first::p] = bytes(len(range(first, n, p)))
    out.extend(compress(range(lo, lo + 2 * n, 2), flags))
    return np.array(out, dtype=np.int64)


def chain_orders(primes, values):
    """Order of primeness of each value by walking m -> pi(m) while m is prime.

    ``primes`` must cover max(values). Non-primes get order 0.
    """
    m = np.asarray(values, dtype=np.int64).copy()
    orders = np.zeros(m.shape, dtype=np.int8)
    live = np.ones(m.shape, dtype=bool)
    while live.any():
        idx = np.searchsorted(primes, m[live], side="right")
        hit = idx > 0
        hit[hit] = primes[idx[hit] - 1] == m[live][hit]
        live_pos = np.flatnonzero(live)
        orders[live_pos[hit]] += 1
        m[live_pos] = idx
        live[live_pos[~hit]] = False
    return orders
