"""
Search cost under churn
=======================

Fill a table to a load factor, then keep deleting the oldest element and
inserting a fresh one. With tombstone cleanup the average search cost levels
off; with plain tombstones it keeps growing.
"""

##############################################################################
# Load-factor sweep
# -----------------
#
# ``m = 10**5`` keeps this script to well under a minute. The curves for
# ``m = 10**6`` look the same (that is the point of the size-independence
# check in the acceptance suite).

import matplotlib.pyplot as plt

from stableprobe import VariantId
from stableprobe.harness import Policy, WorkloadConfig, emit_csv, run_workload

m = 10**5
runs = {}
for alpha in (0.5, 0.6, 0.7, 0.8):
    config = WorkloadConfig(m=m, alpha=alpha, policy=Policy.FIFO, measure_every=m // 10)
    runs[alpha] = run_workload(config)
    last = runs[alpha][-1]
    print(f"alpha={alpha}: successful {last.avg_successful:6.2f}  "
          f"unsuccessful {last.avg_unsuccessful:7.2f}  tombstones {last.tombstones}")

fig, (top, bottom) = plt.subplots(2, 1, sharex=True, figsize=(6, 6))
for alpha, records in runs.items():
    x = [r.deletions / m for r in records]
    top.plot(x, [r.avg_successful for r in records], label=f"n/m={alpha:.0%}")
    bottom.plot(x, [r.avg_unsuccessful for r in records])
top.set_ylabel("successful")
bottom.set_ylabel("unsuccessful")
bottom.set_yscale("log")
bottom.set_xlabel("deletions / m")
top.legend()

##############################################################################
# The CSV behind a curve
# ----------------------

import sys

emit_csv(runs[0.8][-3:], sys.stdout)

##############################################################################
# Plain tombstones for comparison
# -------------------------------
#
# Same workload at 50% load, but deletion only ever writes tombstones.

naive = run_workload(WorkloadConfig(m=m, alpha=0.5, variant=VariantId.NAIVE,
                                    measure_every=m // 10))
minimal = runs[0.5]
for a, b in zip(minimal[::2], naive[::2]):
    print(f"{a.deletions:>8}  minimal {a.avg_unsuccessful:8.2f}   naive {b.avg_unsuccessful:10.2f}")

##############################################################################
# Random instead of oldest-first deletion
# ---------------------------------------

rand = run_workload(WorkloadConfig(m=m, alpha=0.5, policy=Policy.RANDOM, measure_every=m // 10))
print("fifo  ", minimal[-1])
print("random", rand[-1])

plt.show()
