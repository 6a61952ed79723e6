"""Fixed-capacity linear probing with stable slots.

Elements never move once written, so a :class:`SlotRef` obtained from
:meth:`Table.insert` or :meth:`Table.find` stays valid until its key is
removed. Deletion leaves a tombstone only when some element further right in
the same run still needs it to be reachable; every other tombstone between
the removed key's home and its slot is turned back into an empty slot.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterator, Optional, Tuple

HashFunction = Callable[[Any], int]

_MASK64 = 0xFFFFFFFFFFFFFFFF


class SlotState(enum.Enum):
    EMPTY = "empty"
    TOMBSTONE = "tombstone"
    OCCUPIED = "occupied"


class _Marker:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name


# Sentinels stored in the key array. Compared by identity only.
EMPTY = _Marker("EMPTY")
TOMBSTONE = _Marker("TOMBSTONE")


class InvalidCapacityError(ValueError):
    pass


class TableFullError(RuntimeError):
    """Raised when an insert would consume the last empty slot."""


class StaleHandleError(LookupError):
    """Raised when a SlotRef points at a slot that no longer holds an element."""


@dataclass(frozen=True)
class Slot:
    state: SlotState
    key: Any = None
    value: Any = None


@dataclass(frozen=True)
class SlotRef:
    index: int


class Outcome(enum.Enum):
    INSERTED = "inserted"
    UPDATED = "updated"


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def mixed_hash(m: int, seed: int = 0) -> HashFunction:
    """Return ``key -> [0, m)`` built from ``hash(key)`` and a 64-bit mixer."""

    def h(key: Hashable) -> int:
        return splitmix64((hash(key) ^ seed) & _MASK64) % m

    return h


class Table:
    """Linear-probing hash table that never relocates stored elements.

    Args:
        m: number of slots, at least 2. One slot is always kept empty, so at
            most ``m - 1`` elements fit.
        hash: function mapping a key to an integer in ``[0, m)``.
    """

    def __init__(self, m: int, hash: HashFunction):
        if not isinstance(m, int) or m < 2:
            raise InvalidCapacityError(f"capacity must be an integer >= 2, got {m!r}")
        self.capacity = m
        self.hash = hash
        self._keys: list = [EMPTY] * m
        self._values: list = [None] * m
        # home position of each occupant, so deletion never re-hashes
        self._homes: list = [0] * m
        self.element_count = 0
        self.tombstone_count = 0
        self.empty_count = m

    def __len__(self) -> int:
        return self.element_count

    def __contains__(self, key) -> bool:
        return self._locate(key)[0] >= 0

    def _home(self, key) -> int:
        h = self.hash(key)
        if not 0 <= h < self.capacity:
            raise ValueError(f"hash {h!r} of {key!r} outside [0, {self.capacity})")
        return h

    def _locate(self, key) -> Tuple[int, int]:
        """Return (slot index or -1, probes)."""
        keys = self._keys
        m = self.capacity
        i = self._home(key)
        probes = 0
        while probes < m:
            probes += 1
            k = keys[i]
            if k is EMPTY:
                return -1, probes
            if k is not TOMBSTONE and k == key:
                return i, probes
            i += 1
            if i == m:
                i = 0
        return -1, probes

    def find(self, key) -> Tuple[Optional[SlotRef], int]:
        """Search for ``key``; return its handle (or None) and the probe count.

        The probe count includes the slot that ended the scan.
        """
        i, probes = self._locate(key)
        return (SlotRef(i) if i >= 0 else None), probes

    def get(self, key, default=None):
        i = self._locate(key)[0]
        return self._values[i] if i >= 0 else default

    def insert(self, key, value=None) -> Tuple[SlotRef, Outcome]:
        """Insert ``key`` or update its value in place.

        A new key goes into the first tombstone or empty slot at or after its
        home, but only after the scan has reached an empty slot without
        meeting the key.

        Raises:
            TableFullError: placing the key would use up the last empty slot.
        """
        keys = self._keys
        m = self.capacity
        home = self._home(key)
        i = home
        free = -1
        for _ in range(m):
            k = keys[i]
            if k is EMPTY:
                break
            if k is TOMBSTONE:
                if free < 0:
                    free = i
            elif k == key:
                self._values[i] = value
                return SlotRef(i), Outcome.UPDATED
            i += 1
            if i == m:
                i = 0
        else:
            # unreachable while the empty-slot invariant holds
            if free < 0:
                raise TableFullError("no free slot on the probe path")
        if free < 0:
            if self.empty_count == 1:
                raise TableFullError(f"table with {m} slots cannot give up its last empty slot")
            free = i
            self.empty_count -= 1
        else:
            self.tombstone_count -= 1
        keys[free] = key
        self._values[free] = value
        self._homes[free] = home
        self.element_count += 1
        return SlotRef(free), Outcome.INSERTED

    def remove(self, key) -> bool:
        """Delete ``key``, keeping only the tombstones the table still needs.

        The key's slot becomes a tombstone. The rest of the run to its right
        is scanned for the home position farthest to the left; then the slots
        from the deleted slot back to the key's home are scanned leftwards,
        and each tombstone whose position lies strictly left of every home
        seen so far becomes empty again.
        """
        i = self._locate(key)[0]
        if i < 0:
            return False
        keys, homes = self._keys, self._homes
        m = self.capacity
        base = homes[i]
        keys[i] = TOMBSTONE
        self._values[i] = None
        self.element_count -= 1
        self.tombstone_count += 1

        # Offsets are measured from `base`. A home lying left of `base` in the
        # same run maps above its own slot's offset and is clamped to -1.
        end = m  # "no home seen": right of every offset
        off = (i - base) % m
        j = i + 1 if i + 1 < m else 0
        while keys[j] is not EMPTY:
            off += 1
            if keys[j] is not TOMBSTONE:
                rel = (homes[j] - base) % m
                if rel > off:
                    rel = -1
                if rel < end:
                    end = rel
            j += 1
            if j == m:
                j = 0

        k = i
        for off in range((i - base) % m, -1, -1):
            if keys[k] is TOMBSTONE:
                if end > off:
                    keys[k] = EMPTY
                    self.tombstone_count -= 1
                    self.empty_count += 1
            else:
                rel = (homes[k] - base) % m
                if rel > off:
                    rel = -1
                if rel < end:
                    end = rel
            k = k - 1 if k else m - 1
        return True

    def read(self, ref: SlotRef) -> Tuple[Any, Any]:
        """Return ``(key, value)`` stored at ``ref`` without probing."""
        k = self._keys[ref.index]
        if k is EMPTY or k is TOMBSTONE:
            raise StaleHandleError(f"slot {ref.index} holds no element")
        return k, self._values[ref.index]

    def slot(self, index: int) -> Slot:
        k = self._keys[index]
        if k is EMPTY:
            return Slot(SlotState.EMPTY)
        if k is TOMBSTONE:
            return Slot(SlotState.TOMBSTONE)
        return Slot(SlotState.OCCUPIED, k, self._values[index])

    def slots(self) -> Iterator[Slot]:
        for i in range(self.capacity):
            yield self.slot(i)

    def raw_keys(self) -> tuple:
        """Snapshot of the key array, with the EMPTY/TOMBSTONE sentinels."""
        return tuple(self._keys)

    def items(self) -> Iterator[Tuple[Any, Any]]:
        for k, v in zip(self._keys, self._values):
            if k is not EMPTY and k is not TOMBSTONE:
                yield k, v

    def dump(self) -> str:
        """One line per slot: ``index<TAB>state<TAB>key-or-dash<TAB>hash-or-dash``."""
        lines = []
        for i, k in enumerate(self._keys):
            if k is EMPTY:
                lines.append(f"{i}\tempty\t-\t-")
            elif k is TOMBSTONE:
                lines.append(f"{i}\ttombstone\t-\t-")
            else:
                lines.append(f"{i}\toccupied\t{k}\t{self.hash(k)}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return (
            f"Table(m={self.capacity}, elements={self.element_count}, "
            f"tombstones={self.tombstone_count}, empty={self.empty_count})"
        )
