"""OEIS b-file fetching, caching and comparison.

A b-file is plain text: one ``index value`` pair per line, ``#`` comments.
Fetched files are cached one per sequence (``bNNNNNN.txt``) under the cache
directory, written atomically and guarded by a per-sequence file lock.
Vendored copies of the cited sequences ship in ``hoprimes/data/bfiles`` and
are the last resort in offline mode.
"""
from __future__ import annotations

import logging
import os
import re
import tempfile
import time
import urllib.error
import urllib.request
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Callable, NamedTuple, Sequence

from filelock import FileLock

from .errors import HOPrimesError

log = logging.getLogger(__name__)

CACHE_ENV = "HOPRIMES_CACHE_DIR"
BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"
DEFAULT_TTL = 30 * 24 * 3600.0
_ID_RE = re.compile(r"A\d{6}")


class OEISError(HOPrimesError):
    pass


class BFileParseError(OEISError):
    def __init__(self, line_no: int, line: str, why: str):
        super().__init__(f"line {line_no}: {why}: {line!r}")
        self.line_no = line_no


class SequenceNotFound(OEISError):
    pass


class NetworkUnavailable(OEISError):
    pass


def check_id(sequence_id: str) -> str:
    if not _ID_RE.fullmatch(sequence_id):
        raise ValueError(f"not an OEIS identifier: {sequence_id!r}")
    return sequence_id


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    entries: tuple[tuple[int, int], ...]
    fetched_at: datetime
    origin: str  # "network" | "cache" | "vendored-fixture"

    @property
    def offset(self) -> int:
        return self.entries[0][0]

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.entries]


def parse_bfile(text: str) -> tuple[tuple[int, int], ...]:
    """Parse b-file text into (index, value) pairs.

    Comments and blank lines are skipped. Anything else that is not two
    integers, with indexes consecutive from the first one and positive
    values, is a :class:`BFileParseError`.
    """
    entries = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(line_no, raw, "expected 'index value'")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(line_no, raw, "non-integer field") from None
        if entries and idx != entries[-1][0] + 1:
            raise BFileParseError(line_no, raw, f"index {idx} does not follow {entries[-1][0]}")
        if val < 1:
            raise BFileParseError(line_no, raw, "value is not a positive integer")
        entries.append((idx, val))
    if not entries:
        raise BFileParseError(0, "", "no data lines")
    return tuple(entries)


def serialize_bfile(entries: Sequence[tuple[int, int]]) -> str:
    return "".join(f"{i} {v}\n" for i, v in entries)


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "hoprimes" / "bfiles"


def _fixture_text(sequence_id: str) -> str | None:
    name = f"b{sequence_id[1:]}.txt"
    res = resources.files("hoprimes") / "data" / "bfiles" / name
    return res.read_text(encoding="utf-8") if res.is_file() else None


def _urllib_get(url: str, timeout: float) -> str:
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read().decode("utf-8")


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


class OEISClient:
    def __init__(
        self,
        cache_dir: str | os.PathLike | None = None,
        *,
        ttl: float = DEFAULT_TTL,
        offline: bool = False,
        timeout: float = 20.0,
        http_get: Callable[[str, float], str] | None = None,
    ):
        self.cache_dir = Path(cache_dir) if cache_dir else default_cache_dir()
        self.ttl = ttl
        self.offline = offline
        self.timeout = timeout
        self._get = http_get or _urllib_get

    def cache_path(self, sequence_id: str) -> Path:
        return self.cache_dir / f"b{sequence_id[1:]}.txt"

    def _from_cache(self, path, sequence_id):
        mtime = datetime.fromtimestamp(path.stat().st_mtime, tz=timezone.utc)
        return BFile(sequence_id, parse_bfile(path.read_text(encoding="utf-8")), mtime, "cache")

    def _is_fresh(self, path):
        return time.time() - path.stat().st_mtime <= self.ttl

    def fetch_bfile(self, sequence_id: str) -> BFile:
        check_id(sequence_id)
        path = self.cache_path(sequence_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        with FileLock(str(path) + ".lock"):
            if path.exists() and (self.offline or self._is_fresh(path)):
                return self._from_cache(path, sequence_id)
            if self.offline:
                text = _fixture_text(sequence_id)
                if text is None:
                    raise NetworkUnavailable(f"{sequence_id}: offline and not cached")
                return BFile(sequence_id, parse_bfile(text), datetime.now(timezone.utc), "vendored-fixture")
            url = BFILE_URL.format(id=sequence_id, digits=sequence_id[1:])
            try:
                text = self._get(url, self.timeout)
            except urllib.error.HTTPError as exc:
                if exc.code == 404:
                    raise SequenceNotFound(sequence_id) from exc
                raise NetworkUnavailable(f"{url}: HTTP {exc.code}") from exc
            except (urllib.error.URLError, OSError) as exc:
                if path.exists():
                    log.warning("%s unreachable, using stale cache", url)
                    return self._from_cache(path, sequence_id)
                raise NetworkUnavailable(f"{url}: {exc}") from exc
            entries = parse_bfile(text)
            _atomic_write(path, text)
            return BFile(sequence_id, entries, datetime.now(timezone.utc), "network")


class Mismatch(NamedTuple):
    index: int
    expected: int
    actual: int


@dataclass(frozen=True)
class DiffReport:
    sequence_id: str
    compared_length: int
    first_mismatch: Mismatch | None

    @property
    def verdict(self) -> str:
        return "pass" if self.first_mismatch is None and self.compared_length >= 1 else "fail"

    def __str__(self):
        line = f"{self.sequence_id}\t{self.verdict}\tcompared={self.compared_length}"
        if self.first_mismatch is not None:
            m = self.first_mismatch
            line += f"\tmismatch at index {m.index}: expected {m.expected}, actual {m.actual}"
        return line


def compare_entries(sequence_id: str, bfile: BFile, generated: Sequence[int]) -> DiffReport:
    n = min(len(bfile.entries), len(generated))
    for (idx, expected), actual in zip(bfile.entries[:n], generated[:n]):
        if expected != actual:
            return DiffReport(sequence_id, n, Mismatch(idx, expected, int(actual)))
    return DiffReport(sequence_id, n, None)


def compare_prefix(sequence_id: str, generated: Sequence[int], client: OEISClient | None = None) -> DiffReport:
    if len(generated) == 0:
        raise ValueError("generated sequence is empty")
    client = client or OEISClient()
    return compare_entries(sequence_id, client.fetch_bfile(sequence_id), generated)
