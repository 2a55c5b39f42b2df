"""Alternating-sum prime classes.

Class i is P^(i) - P^(i+1) + P^(i+2) - ..., where "+" is union and "-" is set
difference.  Three constructions are provided: bulk set alternation, the
row-by-row lateral sum, and the order-parity rule (order >= i and order
congruent to i mod 2) used as an oracle.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError
from .higher_order import order_k_upto
from .sieve_core import PrimeSource, default_source

METHODS = ("bulk", "lateral", "parity-oracle", "n-sieve")


@dataclass(frozen=True)
class SievedClass:
    class_index: int
    terms: tuple[int, ...]
    method: str
    certified_bound: int

    def __len__(self):
        return len(self.terms)

    def __contains__(self, p):
        j = bisect_left(self.terms, p)
        return j < len(self.terms) and self.terms[j] == p


def _check(i, bound):
    if i < 1:
        raise ArgumentError(f"class index must be >= 1, got {i}")
    if bound < 2:
        raise ArgumentError(f"bound must be >= 2, got {bound}")


def order_sets(start: int, bound: int, *, source: PrimeSource | None = None) -> list[np.ndarray]:
    """P^(start), P^(start+1), ... truncated at bound, up to the first empty one."""
    sets = []
    k = start
    while True:
        s = order_k_upto(k, bound, source=source)
        if s.size == 0:
            return sets
        sets.append(s)
        k += 1


def alternate(sets, *, right_nested: bool = False) -> np.ndarray:
    """Evaluate S1 - S2 + S3 - ... on finite sets.

    Left to right by default; ``right_nested`` evaluates
    S1 - (S2 - (S3 - ...)) instead, which agrees for nested chains.
    """
    if not sets:
        return np.empty(0, dtype=np.int64)
    if right_nested:
        acc = sets[-1]
        for s in reversed(sets[:-1]):
            acc = np.setdiff1d(s, acc)
        return acc
    acc = sets[0]
    for n, s in enumerate(sets[1:], start=1):
        acc = np.setdiff1d(acc, s) if n % 2 else np.union1d(acc, s)
    return acc


def bulk_alternating(i: int, bound: int, *, source: PrimeSource | None = None) -> SievedClass:
    _check(i, bound)
    terms = alternate(order_sets(i, bound, source=source))
    return SievedClass(i, tuple(int(t) for t in terms), "bulk", bound)


def _lateral_rows(r_max, source):
    """Rightmost column of the lateral table for rows 1..r_max.

    Columns are the forward-generated P^(n); row r picks up +p_r or -p_r
    for every column containing p_r, stopping at the first that does not.
    """
    src = source or default_source()
    p_top = src.nth_prime(r_max)
    primes = src.primes_upto(p_top)[:r_max]
    columns = [set(c.tolist()) for c in order_sets(1, p_top, source=src)]
    rows = []
    for p in primes.tolist():
        total, sign = 0, 1
        for col in columns:
            if p not in col:
                break
            total += sign * p
            sign = -sign
        rows.append(total)
    return rows


def lateral_row_sum(r: int, *, source: PrimeSource | None = None) -> int:
    """Row r of the lateral table: p_r if it survives the alternation, else 0."""
    if r < 1:
        raise ArgumentError(f"row index must be >= 1, got {r}")
    src = source or default_source()
    p = src.nth_prime(r)
    total, sign, n = 0, 1, 1
    while p in set(order_k_upto(n, p, source=src).tolist()):
        total += sign * p
        sign = -sign
        n += 1
    return total


def lateral_rows(r_max: int, *, source: PrimeSource | None = None) -> list[int]:
    """Rows 1..r_max of the lateral table (zeros included)."""
    if r_max < 1:
        return []
    return _lateral_rows(r_max, source)


def lateral_class(bound: int, *, source: PrimeSource | None = None) -> SievedClass:
    """Class 1 assembled from the nonzero lateral rows with p_r <= bound."""
    _check(1, bound)
    src = source or default_source()
    rows = lateral_rows(src.prime_pi(bound), source=src)
    return SievedClass(1, tuple(v for v in rows if v), "lateral", bound)


def class_by_parity(i: int, bound: int, *, source: PrimeSource | None = None) -> SievedClass:
    """Primes <= bound whose order is >= i and has the same parity as i."""
    _check(i, bound)
    src = source or default_source()
    primes = src.primes_upto(bound)
    orders = src.orders(primes).astype(np.int64)
    keep = (orders >= i) & ((orders - i) % 2 == 0)
    return SievedClass(i, tuple(int(t) for t in primes[keep]), "parity-oracle", bound)
