"""Prime tables, nth prime, prime counting and primality.

All indexing is 1-based: ``nth_prime(1) == 2``.

A :class:`PrimeSource` owns the current :class:`PrimeTable` and grows it by
doubling when a query needs more primes. Module-level functions delegate to
a shared default source.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from . import _kernels
from .errors import ArgumentError, ResourceLimitError

DEFAULT_CEILING = 2**32 - 1
SEGMENT_SPAN = 1 << 22  # integers per sieve segment
_INITIAL_BOUND = 1 << 16

# Deterministic Miller-Rabin witness set for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_EXTRA = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


@dataclass(frozen=True)
class PrimeTable:
    """Every prime up to ``bound`` (inclusive), as a read-only int64 array."""

    bound: int
    primes: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.primes.setflags(write=False)

    @property
    def count(self) -> int:
        return int(self.primes.shape[0])

    def __len__(self):
        return self.count

    def __contains__(self, x):
        return self.is_prime(x)

    def nth_prime(self, n: int) -> int:
        if n < 1:
            raise ArgumentError(f"prime index must be >= 1, got {n}")
        if n > self.count:
            raise ResourceLimitError(f"table to {self.bound} holds only {self.count} primes, need {n}")
        return int(self.primes[n - 1])

    def prime_pi(self, x: int) -> int:
        if x > self.bound:
            raise ResourceLimitError(f"prime_pi({x}) exceeds table bound {self.bound}")
        return int(np.searchsorted(self.primes, x, side="right")) if x >= 2 else 0

    def is_prime(self, x: int) -> bool:
        if x > self.bound:
            raise ResourceLimitError(f"{x} exceeds table bound {self.bound}")
        i = np.searchsorted(self.primes, x)
        return bool(i < self.count and self.primes[i] == x)


def _check_ceiling(bound, ceiling):
    if bound > ceiling:
        raise ResourceLimitError(f"sieve bound {bound} exceeds the configured maximum {ceiling}")


def _sieve_range(lo, hi):
    """Primes in [lo, hi] by segments of SEGMENT_SPAN integers."""
    if hi < max(lo, 2):
        return np.empty(0, dtype=np.int64)
    base = _kernels.simple_sieve(isqrt(hi))
    parts = []
    start = lo
    while start <= hi:
        stop = min(start + SEGMENT_SPAN, hi + 1)
        parts.append(_kernels.segment_primes(start, stop, base))
        start = stop
    return np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)


def sieve_upto(bound: int, *, ceiling: int = DEFAULT_CEILING) -> PrimeTable:
    """Sieve every prime <= bound.

    Memory during sieving is one segment plus the output; raises
    :class:`ResourceLimitError` if ``bound`` is above ``ceiling``.
    """
    if bound < 0:
        raise ArgumentError(f"bound must be >= 0, got {bound}")
    _check_ceiling(bound, ceiling)
    return PrimeTable(bound, _sieve_range(0, bound))


def _miller_rabin(n):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_LIMIT else _MR_BASES + _MR_EXTRA
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime_direct(x: int) -> bool:
    """Primality without a table: trial division by small primes, then
    Miller-Rabin with a witness set that is exact below 3.3e24."""
    if x < 2:
        return False
    for p in _MR_BASES:
        if x % p == 0:
            return x == p
    return _miller_rabin(x)


class PrimeSource:
    """Auto-extending prime table.

    Readers always see a complete immutable :class:`PrimeTable`; extension
    sieves only the new range and swaps the table under a lock.
    """

    def __init__(self, ceiling: int = DEFAULT_CEILING, initial_bound: int = _INITIAL_BOUND):
        self.ceiling = ceiling
        self._lock = threading.Lock()
        self._table = sieve_upto(min(initial_bound, ceiling), ceiling=ceiling)

    @property
    def table(self) -> PrimeTable:
        return self._table

    def ensure_bound(self, bound: int) -> PrimeTable:
        """Make the table cover every integer <= bound."""
        table = self._table
        if bound <= table.bound:
            return table
        _check_ceiling(bound, self.ceiling)
        with self._lock:
            table = self._table
            if bound > table.bound:
                new_bound = table.bound
                while new_bound < bound:
                    new_bound = min(max(2 * new_bound, 2), self.ceiling)
                tail = _sieve_range(table.bound + 1, new_bound)
                table = PrimeTable(new_bound, np.concatenate([table.primes, tail]))
                self._table = table
        return table

    def ensure_count(self, n: int) -> PrimeTable:
        """Make the table hold at least ``n`` primes, doubling the bound."""
        table = self._table
        while table.count < n:
            if table.bound >= self.ceiling:
                raise ResourceLimitError(
                    f"prime #{n} lies beyond the configured maximum bound {self.ceiling}"
                )
            table = self.ensure_bound(min(2 * table.bound, self.ceiling))
        return table

    def nth_prime(self, n: int) -> int:
        if n < 1:
            raise ArgumentError(f"prime index must be >= 1, got {n}")
        return self.ensure_count(n).nth_prime(n)

    def nth_primes(self, indices) -> np.ndarray:
        """Vectorised nth_prime over an array of 1-based indices."""
        idx = np.asarray(indices, dtype=np.int64)
        if idx.size == 0:
            return np.empty(0, dtype=np.int64)
        if idx.min() < 1:
            raise ArgumentError("prime indices must be >= 1")
        table = self.ensure_count(int(idx.max()))
        return table.primes[idx - 1]

    def prime_pi(self, x: int) -> int:
        if x < 0:
            raise ArgumentError(f"x must be >= 0, got {x}")
        return self.ensure_bound(x).prime_pi(x)

    def is_prime(self, x: int) -> bool:
        if x < 0:
            raise ArgumentError(f"x must be >= 0, got {x}")
        table = self._table
        if x <= table.bound:
            return table.is_prime(x)
        return is_prime_direct(x)

    def primes_upto(self, bound: int) -> np.ndarray:
        table = self.ensure_bound(bound)
        return table.primes[: table.prime_pi(bound)]

    def orders(self, values) -> np.ndarray:
        """Order of primeness for each value (0 for non-primes)."""
        vals = np.asarray(values, dtype=np.int64)
        if vals.size == 0:
            return np.zeros(0, dtype=np.int8)
        table = self.ensure_bound(int(vals.max()))
        return _kernels.chain_orders(table.primes, vals)


_default = PrimeSource()


def default_source() -> PrimeSource:
    return _default


def configure(ceiling: int = DEFAULT_CEILING) -> PrimeSource:
    """Replace the shared source, e.g. to change the sieve ceiling."""
    global _default
    _default = PrimeSource(ceiling=ceiling)
    return _default


def nth_prime(n: int) -> int:
    return _default.nth_prime(n)


def prime_pi(x: int) -> int:
    return _default.prime_pi(x)


def is_prime(x: int) -> bool:
    return _default.is_prime(x)
