"""
Deleting without moving anything
================================

A walk through a tiny table showing which tombstones survive a deletion
and which are turned back into empty slots.
"""

##############################################################################
# A small table
# -------------
#
# Eight slots, with the hash function given explicitly so the layout is easy
# to follow. ``a`` and ``b`` both hash to slot 2, ``c`` hashes to slot 3.

from stableprobe import Table, check_invariants, exact_probe_costs

homes = {"a": 2, "b": 2, "c": 3, "d": 2}
t = Table(8, homes.__getitem__)
for key in "abc":
    t.insert(key, key.upper())

print(t.dump())

##############################################################################
# ``b`` collided with ``a`` and landed in slot 3, which pushed ``c`` to slot 4.
# Keep a handle to ``c``; it must stay valid through everything below.

ref_c, probes = t.find("c")
print("c lives at", ref_c, "found after", probes, "probes")

##############################################################################
# Removing ``b``
# --------------
#
# ``c`` hashes to slot 3 but is stored in slot 4. Emptying slot 3 would cut
# ``c`` off from its home, so slot 3 has to become a tombstone.

t.remove("b")
print(t.dump())
print("violations:", check_invariants(t))

##############################################################################
# Removing ``c``
# --------------
#
# Now nothing to the right of slot 3 depends on it any more. The deletion
# turns both the new tombstone at slot 4 and the old one at slot 3 back
# into empty slots.

t.remove("c")
print(t.dump())
print("tombstones left:", t.tombstone_count)

##############################################################################
# Tombstones are reused
# ---------------------
#
# Removing ``a`` while ``d`` (also hashed to 2) is stored behind it would
# leave a tombstone at slot 2. A later insertion with home 2 reuses it.

t.insert("b", "B")
t.insert("d", "D")
t.remove("a")
print(t.dump())
ref, outcome = t.insert("a", "A again")
print("a reinserted at", ref, outcome)
print("exact average probe counts (successful, unsuccessful):", exact_probe_costs(t))
