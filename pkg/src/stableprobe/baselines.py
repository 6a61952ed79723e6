"""Reference deletion strategies for comparison with :meth:`Table.remove`.

``remove_naive`` only ever writes tombstones. ``remove_shift`` is the classic
backward-shift deletion: it never leaves a tombstone, but it relocates
elements and therefore invalidates :class:`~stableprobe.table.SlotRef` handles.
"""

from __future__ import annotations

import enum
from typing import Callable

from .table import EMPTY, TOMBSTONE, Table


class VariantId(enum.Enum):
    MINIMAL = "minimal"
    NAIVE = "naive"
    SHIFT = "shift"


def remove_naive(table: Table, key) -> bool:
    """Replace ``key`` by a tombstone and never clean up."""
    i = table._locate(key)[0]
    if i < 0:
        return False
    table._keys[i] = TOMBSTONE
    table._values[i] = None
    table.element_count -= 1
    table.tombstone_count += 1
    return True


def remove_shift(table: Table, key) -> bool:
    """Delete ``key`` by pulling later run members back into the hole.

    Assumes the table holds no tombstones. Moved elements change slot index.
    """
    i = table._locate(key)[0]
    if i < 0:
        return False
    keys, values, homes = table._keys, table._values, table._homes
    m = table.capacity
    keys[i] = EMPTY
    values[i] = None
    table.element_count -= 1
    table.empty_count += 1

    hole = i
    dist = 0  # distance from the hole to j
    j = i + 1 if i + 1 < m else 0
    while keys[j] is not EMPTY:
        dist += 1
        # home is at or left of the hole iff it is not inside (hole, j]
        if (j - homes[j]) % m >= dist:
            keys[hole], values[hole], homes[hole] = keys[j], values[j], homes[j]
            keys[j] = EMPTY
            values[j] = None
            hole = j
            dist = 0
        j = j + 1 if j + 1 < m else 0
    return True


def remover(variant: VariantId) -> Callable[[Table, object], bool]:
    if variant is VariantId.MINIMAL:
        return Table.remove
    if variant is VariantId.NAIVE:
        return remove_naive
    if variant is VariantId.SHIFT:
        return remove_shift
    raise ValueError(f"unknown variant {variant!r}")
