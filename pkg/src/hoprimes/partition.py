"""Finite verification of the partition results.

* :func:`greedy_index_construction` builds the index set from first
  principles: repeatedly take the smallest unused element q of P^(i) and pair
  it with p_q.
* :func:`verify_partition` checks P^(i) = class i (disjoint union) class i+1
  over a bound using the order-parity classes.
* :func:`decompose_order` checks P^(k) = sieve(P^(k-1)) + sieve(P^(k)) using
  the N-sieve.
* :func:`ring_of` places a number in its Venn ring: ring 1 is every non-prime
  (1 included), ring k+1 the primes of order exactly k.

Verdicts carry the first violating value rather than raising.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .alt_sum import class_by_parity
from .errors import ArgumentError
from .higher_order import iter_order_k, order_k_upto, order_of_primeness
from .n_sieve import SieveSource, run_sieve
from .sieve_core import PrimeSource, default_source


class Verdict(NamedTuple):
    passed: bool
    violation: int | None = None
    reason: str = ""

    def __str__(self):
        if self.passed:
            return "pass"
        return f"fail at {self.violation}: {self.reason}"


PASS = Verdict(True)


@dataclass(frozen=True)
class PartitionWitness:
    class_index: int
    index_prefix: tuple[int, ...]
    indexed_prefix: tuple[int, ...]
    checked_bound: int
    verdict: Verdict

    def report(self) -> str:
        """Stable plain-text report; field order is fixed."""
        return "\n".join(
            [
                f"class_index: {self.class_index}",
                f"checked_bound: {self.checked_bound}",
                f"index_count: {len(self.index_prefix)}",
                f"indexed_count: {len(self.indexed_prefix)}",
                f"index_prefix: {_head(self.index_prefix)}",
                f"indexed_prefix: {_head(self.indexed_prefix)}",
                f"verdict: {self.verdict}",
            ]
        ) + "\n"


def _head(terms, n=20):
    shown = ",".join(map(str, terms[:n]))
    return shown + (",..." if len(terms) > n else "")


class ConstructionError(AssertionError):
    """The greedy construction met a state the uniqueness argument forbids."""


def greedy_index_construction(
    i: int, n: int, *, source: PrimeSource | None = None
) -> PartitionWitness:
    if i < 1 or n < 1:
        raise ArgumentError("class index and count must be >= 1")
    src = source or default_source()
    index: list[int] = []
    indexed: list[int] = []
    taken: set[int] = set()
    previous = 0
    for q in iter_order_k(i, source=src):
        if len(index) == n:
            break
        # candidates arrive strictly increasing, so the minimum is unique
        if q <= previous:
            raise ConstructionError(f"candidate {q} does not exceed {previous}")
        previous = q
        if q in taken:
            continue
        pq = src.nth_prime(q)
        if not q < pq:
            raise ConstructionError(f"index {q} does not lag its partner {pq}")
        index.append(q)
        indexed.append(pq)
        taken.add(pq)

    bound = index[-1]
    verdict = PASS
    overlap = sorted(set(index) & set(indexed))
    if overlap:
        verdict = Verdict(False, overlap[0], "value is both an index and indexed")
    else:
        covered = set(index) | set(indexed)
        for p in order_k_upto(i, bound, source=src).tolist():
            if p not in covered:
                verdict = Verdict(False, p, "element of P^(i) left uncovered")
                break
    return PartitionWitness(i, tuple(index), tuple(indexed), bound, verdict)


def _first_partition_violation(whole, lower, upper):
    """Smallest value breaking whole == lower (disjoint union) upper."""
    w, a, b = set(whole), set(lower), set(upper)
    bad = []
    both = a & b
    if both:
        bad.append((min(both), "value lies in both classes"))
    neither = w - a - b
    if neither:
        bad.append((min(neither), "value lies in neither class"))
    stray = (a | b) - w
    if stray:
        bad.append((min(stray), "class member outside the order sequence"))
    if not bad:
        return PASS
    v, why = min(bad)
    return Verdict(False, v, why)


def verify_partition(i: int, bound: int, *, source: PrimeSource | None = None) -> PartitionWitness:
    """Check P^(i) up to bound is split exactly into classes i and i+1, and
    that class i+1 is class i used as prime indices."""
    if i < 1:
        raise ArgumentError(f"class index must be >= 1, got {i}")
    if bound < 2:
        raise ArgumentError(f"bound must be >= 2, got {bound}")
    src = source or default_source()
    whole = order_k_upto(i, bound, source=src).tolist()
    lower = class_by_parity(i, bound, source=src).terms
    upper = class_by_parity(i + 1, bound, source=src).terms
    verdict = _first_partition_violation(whole, lower, upper)
    if verdict.passed:
        pairs = src.nth_primes(np.array(lower[: len(upper) + 1], dtype=np.int64)).tolist()
        pairs = [p for p in pairs if p <= bound]
        if tuple(pairs) != upper:
            j = next((j for j, (x, y) in enumerate(zip(pairs, upper)) if x != y), min(len(pairs), len(upper)))
            culprit = upper[j] if j < len(upper) else pairs[j]
            verdict = Verdict(False, culprit, "class i+1 is not class i used as indices")
    return PartitionWitness(i, lower, upper, bound, verdict)


class RingAssignment(NamedTuple):
    value: int
    ring: int


def ring_of(value: int, *, source: PrimeSource | None = None) -> RingAssignment:
    if value < 1:
        raise ArgumentError(f"value must be >= 1, got {value}")
    src = source or default_source()
    if not src.is_prime(value):
        return RingAssignment(value, 1)
    return RingAssignment(value, order_of_primeness(value, source=src) + 1)


def ring_census(bound: int, *, source: PrimeSource | None = None) -> dict[int, int]:
    """Population of each ring over 1..bound."""
    src = source or default_source()
    orders = src.orders(np.arange(1, bound + 1, dtype=np.int64))
    counts = Counter((orders.astype(np.int64) + 1).tolist())
    return dict(sorted(counts.items()))


def ring_classes(ring: int) -> tuple[int, ...]:
    """Classes containing ring ``ring`` (>= 2): the order k = ring - 1 and every
    smaller index of the same parity, e.g. ring 6 -> (5, 3, 1)."""
    if ring < 2:
        return ()
    return tuple(range(ring - 1, 0, -2))


def ring_table(bound: int, *, source: PrimeSource | None = None) -> str:
    """Textual ring table for 1..bound."""
    census = ring_census(bound, source=source)
    lines = [f"# rings over 1..{bound}"]
    for ring, count in census.items():
        if ring == 1:
            desc = "N - P"
        else:
            k = ring - 1
            inside = " ⊂ ".join(f"class {c}" for c in ring_classes(ring))
            desc = f"P^({k}) - P^({k + 1}) ⊂ {inside}"
        lines.append(f"ring {ring}\t{count}\t{desc}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DecompositionReport:
    order: int
    bound: int
    lower_class: tuple[int, ...]
    upper_class: tuple[int, ...]
    verdict: Verdict
    counts: tuple[int, int] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "counts", (len(self.lower_class), len(self.upper_class)))

    def report(self) -> str:
        k = self.order
        return "\n".join(
            [
                f"order: {k}",
                f"bound: {self.bound}",
                f"class_{k}_count: {self.counts[0]}",
                f"class_{k + 1}_count: {self.counts[1]}",
                f"class_{k}: {_head(self.lower_class)}",
                f"class_{k + 1}: {_head(self.upper_class)}",
                f"verdict: {self.verdict}",
            ]
        ) + "\n"


def decompose_order(k: int, bound: int, *, source: PrimeSource | None = None) -> DecompositionReport:
    """P^(k) up to bound against sieve(P^(k-1)) and sieve(P^(k)) (sieve(P^(0)) = sieve(N))."""
    if k < 1:
        raise ArgumentError(f"order must be >= 1, got {k}")
    if bound < 2:
        raise ArgumentError(f"bound must be >= 2, got {bound}")
    src = source or default_source()
    whole = order_k_upto(k, bound, source=src).tolist()
    if not whole:
        return DecompositionReport(k, bound, (), (), PASS)
    lower = run_sieve(SieveSource(k - 1), bound, source_primes=src).circled_set
    upper = run_sieve(SieveSource(k), bound, source_primes=src).circled_set if bound >= whole[0] else ()
    return DecompositionReport(k, bound, lower, upper, _first_partition_violation(whole, lower, upper))
