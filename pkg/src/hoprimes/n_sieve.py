"""The N-sieve.

Walk a source sequence (the naturals, or P^(k)) in increasing order; each
value not yet eliminated is used as a prime index and p_v is eliminated
("circled").  The circled values form the sieved sequence: the naturals give
class 1, P^(k) gives class k+1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import takewhile
from typing import Iterable, NamedTuple

from .errors import ArgumentError
from .higher_order import iter_order_k
from .sieve_core import PrimeSource, default_source

COMBINING_CIRCLE = "⃝"


@dataclass(frozen=True)
class SieveSource:
    """The naturals when ``order == 0``, otherwise P^(order)."""

    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ArgumentError(f"source order must be >= 0, got {self.order}")

    @property
    def label(self) -> str:
        return "N" if self.order == 0 else f"P^({self.order})"

    @property
    def first(self) -> int:
        return next(iter_order_k(self.order))

    def values(self, source: PrimeSource | None = None):
        return iter_order_k(self.order, source=source)


NATURALS = SieveSource(0)


class Step(NamedTuple):
    visited: int
    circled: int
    beyond_horizon: bool


@dataclass(frozen=True)
class SieveTrace:
    """Immutable record of one sieve walk.

    ``circled_set`` holds the circled values <= ``determined_bound``.  A
    value can only be circled from a smaller visited value, so once the
    walk has passed every source value <= horizon nothing at or below the
    horizon can change: the determined bound equals the horizon and the
    undetermined tail is empty.
    """

    source: SieveSource
    horizon: int
    steps: tuple[Step, ...]
    source_values: tuple[int, ...]
    determined_bound: int

    @property
    def circled_set(self) -> tuple[int, ...]:
        return tuple(sorted(s.circled for s in self.steps if s.circled <= self.determined_bound))

    @property
    def visited(self) -> tuple[int, ...]:
        return tuple(s.visited for s in self.steps)

    @property
    def undetermined(self) -> tuple[int, ...]:
        return tuple(v for v in self.source_values if v > self.determined_bound)

    def export(self, include_beyond: bool = False) -> str:
        """Line-oriented step log: header comments then ``visited<TAB>circled``.

        Steps circling past the horizon are left out unless
        ``include_beyond``; the header records how many were omitted.
        """
        shown = [s for s in self.steps if include_beyond or not s.beyond_horizon]
        lines = [f"# source={self.source.label}", f"# horizon={self.horizon}"]
        if len(shown) < len(self.steps):
            lines.append(f"# omitted_beyond_horizon={len(self.steps) - len(shown)}")
        lines.extend(f"{s.visited}\t{s.circled}" for s in shown)
        return "\n".join(lines) + "\n"


def run_sieve(source: SieveSource, horizon: int, *, source_primes: PrimeSource | None = None) -> SieveTrace:
    src = source_primes or default_source()
    if horizon < source.first:
        raise ArgumentError(f"horizon {horizon} is below the first source value {source.first}")
    values = tuple(takewhile(lambda v: v <= horizon, source.values(src)))
    circled: set[int] = set()
    steps = []
    for v in values:
        if v in circled:
            continue
        c = src.nth_prime(v)
        circled.add(c)
        steps.append(Step(v, c, c > horizon))
    return SieveTrace(source, horizon, tuple(steps), values, horizon)


class Sievability(NamedTuple):
    ok: bool
    counterexample: tuple[int, int] | None
    checked: int


def validate_sievable(
    seq: Iterable[int], prefix_len: int, *, source: PrimeSource | None = None
) -> Sievability:
    """Check that sieving ``seq`` only ever circles members of ``seq``.

    Walks the prefix like :func:`run_sieve`; the first visited value v with
    p_v not in ``seq`` is returned as ``(v, p_v)``.  Steps whose target lies
    past the end of the given prefix cannot be judged and stop the walk, so
    ``checked`` may be less than ``prefix_len``.
    """
    if prefix_len < 1:
        raise ArgumentError(f"prefix_len must be >= 1, got {prefix_len}")
    src = source or default_source()
    terms = list(seq)
    if not terms:
        raise ArgumentError("sequence is empty")
    members = set(terms)
    top = terms[-1]
    circled: set[int] = set()
    checked = 0
    for v in terms:
        if checked >= prefix_len:
            break
        if v in circled:
            continue
        c = src.nth_prime(v)
        if c > top:
            break
        checked += 1
        if c not in members:
            return Sievability(False, (v, c), checked)
        circled.add(c)
    return Sievability(True, None, checked)


def _unicode_mark(text):
    return "".join(ch + COMBINING_CIRCLE for ch in text)


def render_trace(
    trace: SieveTrace | None,
    columns: int = 20,
    *,
    marker: tuple[str, str] = ("(", ")"),
    unicode: bool = False,
) -> str:
    """Grid of the source values with circled entries marked.

    Cells are separated by one space; rows hold ``columns`` cells and end
    without trailing whitespace.
    """
    if columns < 1:
        raise ArgumentError(f"columns must be >= 1, got {columns}")
    if trace is None or not trace.source_values:
        return ""
    circled = set(trace.circled_set)
    open_, close = marker
    cells = []
    for v in trace.source_values:
        if v in circled:
            cells.append(_unicode_mark(str(v)) if unicode else f"{open_}{v}{close}")
        else:
            cells.append(str(v))
    rows = [" ".join(cells[j : j + columns]) for j in range(0, len(cells), columns)]
    return "\n".join(rows)
