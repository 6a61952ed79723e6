"""
An LRU cache threaded through the table
=======================================

The recency list lives inside the table values and links entries by slot
index. That only works if slots never move.
"""

from stableprobe import StableRefCache, VariantId
from stableprobe.cache import lru_trace_check

##############################################################################
# Basic use
# ---------

cache = StableRefCache(capacity=3)
for key in ["x", "y", "z"]:
    cache.put(key, key * 2)
cache.get("x")
evicted = cache.put("w", "ww")
print("evicted:", evicted)
print("most to least recent:", cache.keys())
print("head slot", cache.head, "tail slot", cache.tail)
print("link problems:", cache.check_links())

##############################################################################
# Against a reference implementation
# ----------------------------------
#
# A long random trace, compared step by step with a dict + list LRU.

print(lru_trace_check(capacity=64, ops=10_000, seed=0) or "no differences")

##############################################################################
# Backing the cache with backward-shift deletion
# ----------------------------------------------
#
# Backward shift keeps the table free of tombstones by moving elements. The
# slot indices stored in the list then point at the wrong entries.

print(lru_trace_check(capacity=64, ops=10_000, seed=0, variant=VariantId.SHIFT)[:1])
