"""Higher-order primes P^(k) and the order of primeness.

P^(1) is the primes and P^(k) = {p_n : n in P^(k-1)}, so the n-th element
of P^(k) is nth_prime applied k times to n.  The order of primeness of a
prime is computed by the opposite walk, m -> prime_pi(m) while m stays prime,
and serves as the independent check on forward generation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import ArgumentError, ResourceLimitError
from .sieve_core import PrimeSource, default_source

MAX_ORDER = 12


@dataclass(frozen=True)
class OrderKSequence:
    order: int
    terms: tuple[int, ...]
    source_bound: int

    def __len__(self):
        return len(self.terms)


def _check_order(k, max_order):
    if k < 1:
        raise ArgumentError(f"order must be >= 1, got {k}")
    if k > max_order:
        raise ResourceLimitError(f"order {k} exceeds the cap of {max_order}")


def order_k_sequence(
    k: int, count: int, *, source: PrimeSource | None = None, max_order: int = MAX_ORDER
) -> OrderKSequence:
    """First ``count`` elements of P^(k).

    Every nested index is resolved inside the table (auto-extending it);
    if that is impossible the call raises instead of truncating.
    """
    _check_order(k, max_order)
    if count < 1:
        raise ArgumentError(f"count must be >= 1, got {count}")
    src = source or default_source()
    terms = np.arange(1, count + 1, dtype=np.int64)
    for _ in range(k):
        terms = src.nth_primes(terms)
    return OrderKSequence(k, tuple(int(t) for t in terms), src.table.bound)


def order_k_upto(k: int, bound: int, *, source: PrimeSource | None = None) -> np.ndarray:
    """P^(k) truncated at ``bound``, ascending.

    Uses p_n <= bound  <=>  n <= prime_pi(bound), so each order only needs
    the previous order's terms up to pi(bound).
    """
    if k < 0:
        raise ArgumentError(f"order must be >= 0, got {k}")
    src = source or default_source()
    if k == 0:
        return np.arange(1, bound + 1, dtype=np.int64)
    primes = src.primes_upto(bound)
    terms = primes
    for _ in range(k - 1):
        terms = primes[terms[terms <= primes.shape[0]] - 1]
        if terms.size == 0:
            break
    return terms


def iter_order_k(k: int, *, source: PrimeSource | None = None) -> Iterator[int]:
    """Lazily yield P^(k) (k = 0 yields the naturals 1, 2, 3, ...)."""
    if k < 0:
        raise ArgumentError(f"order must be >= 0, got {k}")
    src = source or default_source()
    n = 1
    while True:
        v = n
        for _ in range(k):
            v = src.nth_prime(v)
        yield v
        n += 1


def order_of_primeness(p: int, *, source: PrimeSource | None = None) -> int:
    """Largest k with p in P^(k), by repeated prime counting."""
    src = source or default_source()
    if not src.is_prime(p):
        raise ArgumentError(f"{p} is not prime")
    k, m = 0, p
    while src.is_prime(m):
        k += 1
        m = src.prime_pi(m)
    return k


def membership(p: int, k: int, *, source: PrimeSource | None = None) -> bool:
    if k < 1:
        raise ArgumentError(f"order must be >= 1, got {k}")
    return order_of_primeness(p, source=source) >= k
