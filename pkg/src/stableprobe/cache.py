"""LRU cache whose recency list is threaded through table slots.

Each table value is a :class:`CacheEntry` carrying the slot indices of its
neighbours in the recency list. This only works because the table never
moves an element: a slot index stays the element's address for as long as
it is cached.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Any, Callable, List, Optional

from .baselines import VariantId, remover
from .table import HashFunction, SlotRef, Table, TableFullError, mixed_hash

# Tombstones can occupy most non-element slots under churn; at load 0.7 a
# small table regularly drops to its last empty slot. Half load plus a few
# spare slots keeps a wide margin at every size.
DEFAULT_MAX_LOAD = 0.5
SPARE_SLOTS = 4


@dataclass
class CacheEntry:
    value: Any
    prev: Optional[int] = None  # towards the head (more recent)
    next: Optional[int] = None  # towards the tail (less recent)


class StableRefCache:
    """Fixed-capacity LRU cache stored directly in a linear-probing table.

    Args:
        capacity: maximum number of cached entries.
        table_capacity: slot count of the backing table; by default
            ``2 * capacity + 4``.
        hash: factory ``m -> hash function``; defaults to :func:`mixed_hash`.
        variant: deletion strategy used for evictions. Anything other than
            ``MINIMAL`` or ``NAIVE`` may move elements and break the links.
    """

    def __init__(
        self,
        capacity: int,
        table_capacity: Optional[int] = None,
        hash: Optional[Callable[[int], HashFunction]] = None,
        variant: VariantId = VariantId.MINIMAL,
    ):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        if table_capacity is None:
            table_capacity = math.ceil(capacity / DEFAULT_MAX_LOAD) + SPARE_SLOTS
        if capacity > table_capacity - 1:
            raise ValueError("capacity must leave at least one empty table slot")
        self.capacity = capacity
        self.table = Table(table_capacity, (hash or mixed_hash)(table_capacity))
        self._remove = remover(variant)
        self.head: Optional[int] = None
        self.tail: Optional[int] = None

    def __len__(self) -> int:
        return len(self.table)

    def __contains__(self, key) -> bool:
        return key in self.table

    def _entry(self, index: int) -> CacheEntry:
        return self.table.read(SlotRef(index))[1]

    def _unlink(self, index: int, entry: CacheEntry) -> None:
        if entry.prev is None:
            self.head = entry.next
        else:
            self._entry(entry.prev).next = entry.next
        if entry.next is None:
            self.tail = entry.prev
        else:
            self._entry(entry.next).prev = entry.prev
        entry.prev = entry.next = None

    def _push_front(self, index: int, entry: CacheEntry) -> None:
        entry.prev = None
        entry.next = self.head
        if self.head is not None:
            self._entry(self.head).prev = index
        self.head = index
        if self.tail is None:
            self.tail = index

    def get(self, key, default=None):
        ref, _ = self.table.find(key)
        if ref is None:
            return default
        entry = self._entry(ref.index)
        if self.head != ref.index:
            self._unlink(ref.index, entry)
            self._push_front(ref.index, entry)
        return entry.value

    def put(self, key, value) -> Optional[Any]:
        """Cache ``key``; return the evicted key, if any."""
        ref, _ = self.table.find(key)
        if ref is not None:
            entry = self._entry(ref.index)
            entry.value = value
            if self.head != ref.index:
                self._unlink(ref.index, entry)
                self._push_front(ref.index, entry)
            return None
        evicted = None
        if len(self.table) >= self.capacity:
            tail = self.tail
            evicted, entry = self.table.read(SlotRef(tail))
            self._unlink(tail, entry)
            self._remove(self.table, evicted)
        entry = CacheEntry(value)
        try:
            ref, _ = self.table.insert(key, entry)
        except TableFullError as exc:
            raise RuntimeError("cache table unexpectedly full") from exc
        self._push_front(ref.index, entry)
        return evicted

    def keys(self) -> List[Any]:
        """Keys from most to least recently used."""
        out = []
        i = self.head
        while i is not None and len(out) <= len(self.table):
            key, entry = self.table.read(SlotRef(i))
            out.append(key)
            i = entry.next
        return out

    def check_links(self) -> List[str]:
        """Return every inconsistency between the recency list and the table."""
        problems = []
        table = self.table
        n = len(table)
        if (self.head is None) != (n == 0) or (self.tail is None) != (n == 0):
            problems.append(f"head/tail {self.head}/{self.tail} with {n} entries")
        seen = []
        prev = None
        i = self.head
        while i is not None:
            if len(seen) > n:
                problems.append("cycle in forward list")
                break
            key_entry = table.slot(i)
            if key_entry.value is None or not isinstance(key_entry.value, CacheEntry):
                problems.append(f"link to slot {i}, which holds no entry")
                break
            entry = key_entry.value
            if entry.prev != prev:
                problems.append(f"slot {i}: prev is {entry.prev}, expected {prev}")
            if table.find(key_entry.key)[0] != SlotRef(i):
                problems.append(f"slot {i}: key {key_entry.key!r} is not found there")
            seen.append(key_entry.key)
            prev = i
            i = entry.next
        if prev != self.tail:
            problems.append(f"forward walk ends at {prev}, tail is {self.tail}")
        if set(seen) != {k for k, _ in table.items()} or len(seen) != n:
            problems.append("list keys differ from table keys")
        return problems


class ReferenceLRU:
    """Plain dict plus an explicit recency list (most recent last)."""

    def __init__(self, capacity: int):
        self.capacity = capacity
        self.data: dict = {}
        self.order: list = []

    def get(self, key, default=None):
        if key not in self.data:
            return default
        self.order.remove(key)
        self.order.append(key)
        return self.data[key]

    def put(self, key, value):
        evicted = None
        if key in self.data:
            self.order.remove(key)
        elif len(self.data) >= self.capacity:
            evicted = self.order.pop(0)
            del self.data[evicted]
        self.data[key] = value
        self.order.append(key)
        return evicted

    def keys(self) -> list:
        return self.order[::-1]


def lru_trace_check(capacity: int, ops: int, seed: int,
                    variant: VariantId = VariantId.MINIMAL) -> List[str]:
    """Drive the cache and :class:`ReferenceLRU` with the same random trace.

    Returns the problems found (empty on success); stops at the first
    failing operation.
    """
    rng = random.Random(seed)
    cache = StableRefCache(capacity, variant=variant)
    ref = ReferenceLRU(capacity)
    universe = 2 * capacity
    for step in range(ops):
        key = rng.randrange(universe)
        try:
            if rng.random() < 0.5:
                value = rng.getrandbits(32)
                got, want = cache.put(key, value), ref.put(key, value)
                what = f"put({key}) evicted"
            else:
                got, want = cache.get(key), ref.get(key)
                what = f"get({key})"
            problems = []
            if got != want:
                problems.append(f"step {step}: {what} {got!r}, reference {want!r}")
            problems += [f"step {step}: {p}" for p in cache.check_links()]
            if not problems and cache.keys() != ref.keys():
                problems.append(f"step {step}: recency order differs from reference")
        except (LookupError, RuntimeError) as exc:
            problems = [f"step {step}: {type(exc).__name__}: {exc}"]
        if problems:
            return problems
    return []
