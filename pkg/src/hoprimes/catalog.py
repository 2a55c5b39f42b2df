"""The nine OEIS sequences this package can regenerate."""
from __future__ import annotations

from typing import NamedTuple

from .alt_sum import class_by_parity
from .higher_order import order_k_sequence
from .sieve_core import PrimeSource, default_source


class CatalogEntry(NamedTuple):
    sequence_id: str
    kind: str  # "order" (P^(k)) or "class" (alternating-sum class i)
    param: int
    title: str


CATALOG = {
    e.sequence_id: e
    for e in [
        CatalogEntry("A000040", "order", 1, "primes P^(1)"),
        CatalogEntry("A006450", "order", 2, "prime-indexed primes P^(2)"),
        CatalogEntry("A038580", "order", 3, "third-order primes P^(3)"),
        CatalogEntry("A049090", "order", 4, "fourth-order primes P^(4)"),
        CatalogEntry("A049203", "order", 5, "fifth-order primes P^(5)"),
        CatalogEntry("A333242", "class", 1, "class 1 (sieve of N)"),
        CatalogEntry("A262275", "class", 2, "class 2 (sieve of P)"),
        CatalogEntry("A333243", "class", 3, "class 3 (sieve of P^(2))"),
        CatalogEntry("A333244", "class", 4, "class 4 (sieve of P^(3))"),
    ]
}


def class_terms(i: int, count: int, *, source: PrimeSource | None = None) -> tuple[int, ...]:
    """First ``count`` terms of class i, doubling the bound until enough appear."""
    src = source or default_source()
    bound = max(64, 2 * src.nth_prime(max(count, 1)))
    while True:
        terms = class_by_parity(i, bound, source=src).terms
        if len(terms) >= count:
            return terms[:count]
        bound *= 2


def generate(sequence_id: str, count: int, *, source: PrimeSource | None = None) -> tuple[int, ...]:
    entry = CATALOG[sequence_id]
    if entry.kind == "order":
        return order_k_sequence(entry.param, count, source=source).terms
    return class_terms(entry.param, count, source=source)
