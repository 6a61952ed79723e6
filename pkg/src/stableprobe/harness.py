"""Churn workloads: fill a table, then alternate deletion and fresh insertion.

Probe costs are computed exactly from the slot array at each measurement
point (no timing, no sampling).
"""

from __future__ import annotations

import csv
import enum
import io
import os
from dataclasses import dataclass, field
from typing import IO, Iterable, List, Optional, Union

import numpy as np

from .baselines import VariantId
from .hashing import TabulatedHash

CSV_HEADER = ("deletions", "avg_successful", "avg_unsuccessful", "tombstones", "elements")
SATURATION_MARK = "# saturated"


class Policy(enum.Enum):
    FIFO = "fifo"
    RANDOM = "random"


@dataclass(frozen=True)
class WorkloadConfig:
    m: int
    alpha: float
    policy: Policy = Policy.FIFO
    rounds: Optional[int] = None
    measure_every: Optional[int] = None
    seed: int = 0
    variant: VariantId = VariantId.MINIMAL

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        n = self.n
        if n < 1 or n > self.m - 1:
            raise ValueError(f"round(alpha*m) = {n} must lie in [1, m-1]")
        if self.rounds is not None and self.rounds < 0:
            raise ValueError("rounds must be non-negative")
        if self.measure_every is not None and self.measure_every < 1:
            raise ValueError("measure_every must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    @property
    def n(self) -> int:
        return round(self.alpha * self.m)

    @property
    def total_rounds(self) -> int:
        return 10 * self.n if self.rounds is None else self.rounds

    @property
    def cadence(self) -> int:
        if self.measure_every is not None:
            return self.measure_every
        return max(1, self.total_rounds // 20)


@dataclass
class MetricsRecord:
    deletions: int
    avg_successful: float
    avg_unsuccessful: float
    tombstones: int
    elements: int
    saturated: bool = field(default=False)


def probe_costs(slots: np.ndarray, hashes: np.ndarray) -> tuple:
    """Exact average successful and unsuccessful probe counts of a slot array."""
    m = slots.size
    pos = np.flatnonzero(slots >= 0)
    if pos.size:
        disp = (pos - hashes[slots[pos]]) % m
        successful = (int(disp.sum()) + pos.size) / pos.size
    else:
        successful = float("nan")
    empties = np.flatnonzero(slots == -1)
    if empties.size == 0:
        return successful, float("nan")
    starts = np.arange(m)
    idx = np.searchsorted(empties, starts)
    nxt = np.where(idx < empties.size, empties[np.minimum(idx, empties.size - 1)], empties[0] + m)
    unsuccessful = (int((nxt - starts).sum()) + m) / m
    return successful, unsuccessful


_VARIANT_CODES = {VariantId.MINIMAL: 0, VariantId.NAIVE: 1, VariantId.SHIFT: 2}


def victim_stream(config: WorkloadConfig):
    """Yield arrays of victim positions into the live-key array, one per segment.

    Only used for the random policy; FIFO victims are implicit.
    """
    rng = np.random.default_rng(np.random.SeedSequence(config.seed, spawn_key=(1,)))
    n = config.n

    def take(count: int) -> np.ndarray:
        return rng.integers(0, n, size=count, dtype=np.int64)

    return take


class Workload:
    """Stateful churn run on compiled arrays; :func:`run_workload` drives it."""

    def __init__(self, config: WorkloadConfig):
        from . import _kernels

        self._k = _kernels
        self.config = config
        n = config.n
        self.hashes = TabulatedHash(config.m, config.seed).table(n + config.total_rounds)
        self.slots = _kernels.new_slots(config.m)
        self.counts = np.array([0, 0, config.m], dtype=np.int64)
        placed = _kernels.fill(self.slots, self.hashes, self.counts, n)
        if placed != n:
            raise RuntimeError(f"initial fill stopped after {placed} of {n} keys")
        self.live = np.arange(n, dtype=np.int64)
        self.next_key = n
        self.deletions = 0
        self.saturated = False
        self._take = victim_stream(config) if config.policy is Policy.RANDOM else None
        self._variant = _VARIANT_CODES[config.variant]

    def advance(self, rounds: int) -> int:
        """Perform up to ``rounds`` rounds; return how many completed."""
        if self.saturated or rounds <= 0:
            return 0
        if self._take is None:
            victims = np.empty(rounds, dtype=np.int64)
            offset = self.deletions % self.config.n
        else:
            victims = self._take(rounds)
            offset = -1
        done, status = self._k.churn(
            self.slots, self.hashes, self.counts, self._variant,
            self.live, victims, offset, self.next_key,
        )
        self.next_key += done
        self.deletions += done
        if status == self._k.SATURATED:
            self.saturated = True
            self.deletions += 1  # the deletion of the failed round happened
        return done

    def measure(self) -> MetricsRecord:
        succ, unsucc = probe_costs(self.slots, self.hashes)
        return MetricsRecord(
            deletions=self.deletions,
            avg_successful=succ,
            avg_unsuccessful=unsucc,
            tombstones=int(self.counts[1]),
            elements=int(self.counts[0]),
            saturated=self.saturated,
        )


def run_workload(config: WorkloadConfig) -> List[MetricsRecord]:
    """Fill to ``round(alpha*m)`` keys, then churn, measuring every ``cadence`` rounds.

    The first record describes the freshly filled table. A run that cannot
    place a fresh key (only possible without tombstone cleanup) stops early
    and its last record has ``saturated=True``.
    """
    w = Workload(config)
    records = [w.measure()]
    remaining = config.total_rounds
    while remaining > 0 and not w.saturated:
        step = min(config.cadence, remaining)
        w.advance(step)
        remaining -= step
        records.append(w.measure())
    return records


Destination = Union[str, os.PathLike, IO[str]]


def emit_csv(records: Iterable[MetricsRecord], destination: Destination) -> None:
    """Write records as CSV; a saturated run ends with a ``# saturated`` line."""
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "w", newline="") as fh:
            _write(records, fh)
    else:
        _write(records, destination)


def _write(records: Iterable[MetricsRecord], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    saturated = False
    for r in records:
        w.writerow((r.deletions, repr(float(r.avg_successful)),
                    repr(float(r.avg_unsuccessful)), r.tombstones, r.elements))
        saturated = r.saturated
    if saturated:
        fh.write(SATURATION_MARK + "\n")


def read_csv(source: Destination) -> List[MetricsRecord]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, newline="") as fh:
            text = fh.read()
    else:
        text = source.read()
    lines = text.splitlines()
    if not lines or tuple(lines[0].split(",")) != CSV_HEADER:
        raise ValueError("missing or malformed CSV header")
    records = []
    for row in csv.reader(io.StringIO("\n".join(lines[1:]))):
        if not row:
            continue
        if row[0] == SATURATION_MARK:
            records[-1].saturated = True
            continue
        records.append(MetricsRecord(int(row[0]), float(row[1]), float(row[2]),
                                     int(row[3]), int(row[4])))
    return records
