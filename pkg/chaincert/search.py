"""
Exhaustive search for long rooted chains over ranges of roots, and range-wide
verification of the certified length bounds.
"""

from __future__ import annotations

import csv
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, TextIO

from tqdm import tqdm

from .arith import gcd
from .certificate import Certificate, verify_certificate
from .certify import tighten
from .chain import LinearMap, rooted_chain
from .config import DEFAULT_JOBS, DEFAULT_MAX_STEPS
from .errors import InvalidTask, NoCandidate, RangeAllTruncated
from .sequence import threshold_M
from .witnesses import eligible_primes

logger = logging.getLogger(__name__)

CSV_HEADER = ("root", "length", "first_element", "last_element", "truncated")

# Sub-ranges per worker; more than one keeps workers busy when roots differ in cost
CHUNKS_PER_JOB = 4


@dataclass(frozen=True)
class SearchTask:
    map: LinearMap
    lo: int
    hi: int
    min_length: int = 0
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if self.lo < 1:
            raise InvalidTask(f"roots start at 1 (got lo={self.lo})")
        if self.lo > self.hi:
            raise InvalidTask(f"empty range: lo={self.lo} > hi={self.hi}")
        if self.min_length < 0:
            raise InvalidTask(f"min_length must be >= 0 (got {self.min_length})")
        if self.max_steps < self.min_length + 1:
            raise InvalidTask(
                f"max_steps={self.max_steps} must exceed min_length={self.min_length}"
            )


@dataclass(frozen=True)
class RecordRow:
    root: int
    length: int
    first_element: int | None
    last_element: int | None
    truncated: bool

    def csv_fields(self) -> list[str]:
        return [
            str(self.root),
            str(self.length),
            "" if self.first_element is None else str(self.first_element),
            "" if self.last_element is None else str(self.last_element),
            "true" if self.truncated else "false",
        ]


def _search_chunk(
    a: int, b: int, lo: int, hi: int, min_length: int, max_steps: int
) -> list[RecordRow]:
    """Rows for roots lo..hi; runs inside worker processes."""
    f = LinearMap(a, b)
    rows = []
    for z in range(lo, hi + 1):
        if gcd(z, b) > 1:
            # Every iterate is composite; no primality test needed
            if min_length == 0:
                rows.append(RecordRow(z, 0, None, None, False))
            continue
        chain = rooted_chain(f, z, max_steps)
        if chain.length >= min_length:
            rows.append(
                RecordRow(
                    z,
                    chain.length,
                    chain.first_element,
                    chain.last_element,
                    chain.truncated,
                )
            )
    return rows


def partition(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split lo..hi into at most `parts` contiguous, ascending sub-ranges."""
    total = hi - lo + 1
    parts = max(1, min(parts, total))
    size, extra = divmod(total, parts)
    ranges = []
    start = lo
    for index in range(parts):
        end = start + size - 1 + (1 if index < extra else 0)
        ranges.append((start, end))
        start = end + 1
    return ranges


def search_range(
    task: SearchTask, jobs: int = DEFAULT_JOBS, progress: bool = False
) -> list[RecordRow]:
    """
    One row per root in [lo, hi] whose chain reaches min_length, ascending by
    root. The result does not depend on the number of jobs.
    """
    if jobs < 1:
        raise InvalidTask(f"jobs must be >= 1 (got {jobs})")

    f = task.map
    chunks = partition(task.lo, task.hi, jobs * CHUNKS_PER_JOB)
    arguments = [
        (f.a, f.b, lo, hi, task.min_length, task.max_steps) for lo, hi in chunks
    ]
    bar = tqdm(
        total=task.hi - task.lo + 1,
        desc=f"search {f}",
        unit="root",
        file=sys.stderr,
        disable=not progress,
    )

    rows: list[RecordRow] = []
    with bar:
        if jobs == 1:
            results = (_search_chunk(*args) for args in arguments)
            for (lo, hi), chunk_rows in zip(chunks, results):
                rows.extend(chunk_rows)
                bar.update(hi - lo + 1)
        else:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                # map() yields in submission order, which is ascending by root
                results = executor.map(_search_chunk, *zip(*arguments))
                for (lo, hi), chunk_rows in zip(chunks, results):
                    rows.extend(chunk_rows)
                    bar.update(hi - lo + 1)

    logger.info(
        "searched %s over %d..%d: %d rows with length >= %d",
        f,
        task.lo,
        task.hi,
        len(rows),
        task.min_length,
    )
    return rows


def longest_in_range(
    task: SearchTask, jobs: int = DEFAULT_JOBS, progress: bool = False
) -> list[RecordRow]:
    """All rows reaching the longest non-truncated length in the range."""
    everything = SearchTask(task.map, task.lo, task.hi, 0, task.max_steps)
    rows = [row for row in search_range(everything, jobs, progress) if not row.truncated]
    if not rows:
        raise RangeAllTruncated(
            f"every chain in {task.lo}..{task.hi} reached max_steps={task.max_steps}"
        )
    longest = max(row.length for row in rows)
    return [row for row in rows if row.length == longest]


def write_csv(rows: Iterable[RecordRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())


# Range verification


class BoundStatus(str, Enum):
    CERTIFIED = "certified"
    SHARED_FACTOR = "shared_factor"
    NO_CANDIDATE = "no_candidate"
    INVALID = "invalid"
    BOUND_EXCEEDED = "bound_exceeded"
    CHAIN_MISMATCH = "chain_mismatch"


FAILURES = (
    BoundStatus.NO_CANDIDATE,
    BoundStatus.INVALID,
    BoundStatus.BOUND_EXCEEDED,
    BoundStatus.CHAIN_MISMATCH,
)


@dataclass(frozen=True)
class BoundRow:
    root: int
    status: BoundStatus
    certificate: Certificate | None = None
    # "theorem1" when z has a prime factor not dividing a, "theorem2" when z > M
    theorem: str | None = None
    chain_length: int | None = None


@dataclass(frozen=True)
class BoundReport:
    map: LinearMap
    lo: int
    hi: int
    rows: tuple[BoundRow, ...]

    @property
    def failures(self) -> list[BoundRow]:
        return [row for row in self.rows if row.status in FAILURES]

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_root(f: LinearMap, z: int, threshold: int, max_steps: int) -> BoundRow:
    if gcd(z, f.b) > 1:
        return BoundRow(z, BoundStatus.SHARED_FACTOR, chain_length=0)

    try:
        certificate = tighten(f, z)
    except NoCandidate:
        return BoundRow(z, BoundStatus.NO_CANDIDATE)

    verdict = verify_certificate(certificate)
    if not verdict:
        logger.error("certificate for z=%d failed verification: %s", z, verdict.reason)
        return BoundRow(z, BoundStatus.INVALID, certificate)

    # A root divisor p gives a witness of at most p <= z; an s-term divisor
    # above the threshold gives one strictly below z.
    theorem = None
    within = True
    if eligible_primes(z, f.a):
        theorem = "theorem1"
        within = certificate.witness_index <= z
    elif z > threshold:
        theorem = "theorem2"
        within = certificate.witness_index < z
    if not within:
        return BoundRow(z, BoundStatus.BOUND_EXCEEDED, certificate, theorem)

    chain = rooted_chain(f, z, max_steps)
    if not chain.truncated and chain.length >= certificate.witness_index:
        logger.error(
            "chain from z=%d has length %d, certificate claims < %d",
            z,
            chain.length,
            certificate.witness_index,
        )
        return BoundRow(z, BoundStatus.CHAIN_MISMATCH, certificate, theorem, chain.length)

    return BoundRow(z, BoundStatus.CERTIFIED, certificate, theorem, chain.length)


def verify_bound_range(
    f: LinearMap, lo: int, hi: int, max_steps: int = DEFAULT_MAX_STEPS
) -> BoundReport:
    """Certify every root in lo..hi and cross-check against the iterated chain."""
    if lo < 2:
        raise InvalidTask(f"bound verification starts at z=2 (got lo={lo})")
    if lo > hi:
        raise InvalidTask(f"empty range: lo={lo} > hi={hi}")

    threshold = threshold_M(f)
    rows = tuple(_check_root(f, z, threshold, max_steps) for z in range(lo, hi + 1))
    report = BoundReport(f, lo, hi, rows)
    logger.info(
        "verified %s over %d..%d (M=%d): %d roots, %d failures",
        f,
        lo,
        hi,
        threshold,
        len(rows),
        len(report.failures),
    )
    return report
