"""Brute-force ground truth for :class:`~stableprobe.table.Table` states.

Everything here re-derives facts from the raw slot array and the table's hash
function. Nothing reuses the table's cached home positions or counters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .table import EMPTY, TOMBSTONE, Table


class ViolationKind(enum.Enum):
    UNJUSTIFIED_TOMBSTONE = "UnjustifiedTombstone"
    SEARCH_INVARIANT_BREACH = "SearchInvariantBreach"
    COUNTER_MISMATCH = "CounterMismatch"
    # raised by the randomized checker in stableprobe.stress
    MODEL_MISMATCH = "ModelMismatch"
    HANDLE_MOVED = "HandleMoved"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    index: int
    detail: str

    def __str__(self) -> str:
        return f"{self.kind.value}\t{self.index}\t{self.detail}"


def _run_bounds(keys, k: int) -> Tuple[int, int]:
    """Return (run_start, run_end) around non-empty slot ``k``.

    ``run_end`` is the index of the empty slot closing the run.
    """
    m = len(keys)
    start = k
    for _ in range(m):
        prev = (start - 1) % m
        if keys[prev] is EMPTY:
            break
        start = prev
    end = (k + 1) % m
    for _ in range(m):
        if keys[end] is EMPTY:
            break
        end = (end + 1) % m
    return start, end


def tombstone_justified(table: Table, k: int) -> bool:
    """True iff some element right of tombstone ``k`` in its run hashes at or left of ``k``."""
    keys = table.raw_keys()
    if keys[k] is not TOMBSTONE:
        raise ValueError(f"slot {k} is not a tombstone")
    m = table.capacity
    start, end = _run_bounds(keys, k)
    k_off = (k - start) % m
    p = (k + 1) % m
    while p != end:
        e = keys[p]
        if e is not TOMBSTONE and (table.hash(e) - start) % m <= k_off:
            return True
        p = (p + 1) % m
    return False


def check_invariants(table: Table) -> List[Violation]:
    """Full scan for search-invariant breaches, unneeded tombstones and bad counters.

    An empty list means the table is valid and its tombstones are minimal.
    """
    keys = table.raw_keys()
    m = table.capacity
    h = table.hash
    out: List[Violation] = []

    n_tomb = keys.count(TOMBSTONE)
    n_empty = keys.count(EMPTY)
    n_occ = m - n_tomb - n_empty
    expected = (table.element_count, table.tombstone_count, table.empty_count)
    if (n_occ, n_tomb, n_empty) != expected:
        out.append(Violation(
            ViolationKind.COUNTER_MISMATCH, 0,
            f"counters {expected} but slots hold {(n_occ, n_tomb, n_empty)}",
        ))
    if n_empty == 0:
        out.append(Violation(ViolationKind.COUNTER_MISMATCH, 0, "no empty slot left"))
        return out

    # Rotate so the array ends with an empty slot; then no run wraps and
    # position p in `order` is slot (p + shift) % m.
    shift = keys.index(EMPTY) + 1
    order = keys[shift:] + keys[:shift]
    homes = [0] * m
    start = 0
    for p, e in enumerate(order):
        if e is EMPTY:
            start = p + 1
        elif e is not TOMBSTONE:
            home = h(e)
            rel = (home - shift - start) % m
            if rel > p - start:
                out.append(Violation(
                    ViolationKind.SEARCH_INVARIANT_BREACH, (p + shift) % m,
                    f"key {e!r} hashes to {home} but an empty slot lies between",
                ))
            homes[p] = start + rel

    lowest = m
    for p in range(m - 1, -1, -1):
        e = order[p]
        if e is EMPTY:
            lowest = m
        elif e is TOMBSTONE:
            if lowest > p:
                out.append(Violation(
                    ViolationKind.UNJUSTIFIED_TOMBSTONE, (p + shift) % m,
                    "no element to the right in this run hashes at or left of it",
                ))
        elif homes[p] < lowest:
            lowest = homes[p]
    out.sort(key=lambda v: (v.index, v.kind.value))
    return out


def exact_probe_costs(table: Table) -> Tuple[Optional[Fraction], Optional[Fraction]]:
    """Average probes for successful and unsuccessful searches, as exact fractions.

    Successful cost averages over stored elements; unsuccessful cost averages
    over all ``m`` start positions. Either is None when undefined.
    """
    keys = table.raw_keys()
    m = table.capacity
    total = count = 0
    for i, e in enumerate(keys):
        if e is not EMPTY and e is not TOMBSTONE:
            total += (i - table.hash(e)) % m + 1
            count += 1
    successful = Fraction(total, count) if count else None

    if EMPTY not in keys:
        return successful, None
    total = 0
    for s in range(m):
        d = 0
        while keys[(s + d) % m] is not EMPTY:
            d += 1
        total += d + 1
    return successful, Fraction(total, m)


def format_violations(violations) -> str:
    return "".join(f"{v}\n" for v in violations)
