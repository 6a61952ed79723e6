"""Compiled table operations on plain int64 arrays, used by the workload driver.

Slot encoding: ``-1`` empty, ``-2`` tombstone, otherwise the (non-negative)
key. ``hashes[key]`` is the key's home slot. ``counts`` holds
``[elements, tombstones, empties]``. The logic mirrors
:mod:`stableprobe.table` and :mod:`stableprobe.baselines` one to one; tests
replay workloads through both and compare slot arrays.
"""

import numpy as np
from numba import njit

EMPTY = -1
TOMB = -2

MINIMAL = 0
NAIVE = 1
SHIFT = 2

OK = 0
SATURATED = 1


@njit(cache=True)
def locate(slots, hashes, key):
    m = slots.size
    i = hashes[key]
    for _ in range(m):
        s = slots[i]
        if s == EMPTY:
            return -1
        if s == key:
            return i
        i += 1
        if i == m:
            i = 0
    return -1


@njit(cache=True)
def insert(slots, hashes, key, counts):
    """0 inserted, 1 updated, -1 table full."""
    m = slots.size
    i = hashes[key]
    free = -1
    for _ in range(m):
        s = slots[i]
        if s == EMPTY:
            break
        if s == TOMB:
            if free < 0:
                free = i
        elif s == key:
            return 1
        i += 1
        if i == m:
            i = 0
    if free < 0:
        if counts[2] <= 1:
            return -1
        free = i
        counts[2] -= 1
    else:
        counts[1] -= 1
    slots[free] = key
    counts[0] += 1
    return 0


@njit(cache=True)
def remove_minimal(slots, hashes, key, counts):
    i = locate(slots, hashes, key)
    if i < 0:
        return False
    m = slots.size
    base = hashes[key]
    slots[i] = TOMB
    counts[0] -= 1
    counts[1] += 1

    end = m
    top = (i - base) % m
    off = top
    j = i + 1
    if j == m:
        j = 0
    while slots[j] != EMPTY:
        off += 1
        s = slots[j]
        if s != TOMB:
            rel = (hashes[s] - base) % m
            if rel > off:
                rel = -1
            if rel < end:
                end = rel
        j += 1
        if j == m:
            j = 0

    k = i
    for off in range(top, -1, -1):
        s = slots[k]
        if s == TOMB:
            if end > off:
                slots[k] = EMPTY
                counts[1] -= 1
                counts[2] += 1
        else:
            rel = (hashes[s] - base) % m
            if rel > off:
                rel = -1
            if rel < end:
                end = rel
        k -= 1
        if k < 0:
            k = m - 1
    return True


@njit(cache=True)
def remove_naive(slots, hashes, key, counts):
    i = locate(slots, hashes, key)
    if i < 0:
        return False
    slots[i] = TOMB
    counts[0] -= 1
    counts[1] += 1
    return True


@njit(cache=True)
def remove_shift(slots, hashes, key, counts):
    i = locate(slots, hashes, key)
    if i < 0:
        return False
    m = slots.size
    slots[i] = EMPTY
    counts[0] -= 1
    counts[2] += 1
    hole = i
    dist = 0
    j = i + 1
    if j == m:
        j = 0
    while slots[j] != EMPTY:
        dist += 1
        s = slots[j]
        if (j - hashes[s]) % m >= dist:
            slots[hole] = s
            slots[j] = EMPTY
            hole = j
            dist = 0
        j += 1
        if j == m:
            j = 0
    return True


@njit(cache=True)
def churn(slots, hashes, counts, variant, live, victims, fifo_offset, next_key):
    """Run ``victims.size`` rounds of delete-then-insert-fresh.

    ``live`` holds the current keys; round ``r`` deletes ``live[v]`` where
    ``v = victims[r]`` (or ``(fifo_offset + r) % live.size`` when
    ``fifo_offset >= 0``) and stores the fresh key back at ``live[v]``.
    Returns (rounds completed, status).
    """
    n = live.size
    rounds = victims.size
    for r in range(rounds):
        if fifo_offset >= 0:
            v = (fifo_offset + r) % n
        else:
            v = victims[r]
        key = live[v]
        if variant == MINIMAL:
            remove_minimal(slots, hashes, key, counts)
        elif variant == NAIVE:
            remove_naive(slots, hashes, key, counts)
        else:
            remove_shift(slots, hashes, key, counts)
        if insert(slots, hashes, next_key, counts) < 0:
            return r, SATURATED
        live[v] = next_key
        next_key += 1
    return rounds, OK


@njit(cache=True)
def fill(slots, hashes, counts, n):
    for key in range(n):
        if insert(slots, hashes, key, counts) < 0:
            return key
    return n


def new_slots(m):
    return np.full(m, EMPTY, dtype=np.int64)
