"""Randomized operation sequences checked against a dict and the oracle."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import List

from .baselines import VariantId, remover
from .hashing import TabulatedHash
from .oracle import Violation, ViolationKind, check_invariants
from .table import Table, TableFullError


@dataclass
class CheckReport:
    ops: int = 0
    violations: List[Violation] = field(default_factory=list)
    op_counts: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.violations


def random_op_check(
    seed: int,
    ops: int,
    m: int,
    variant: VariantId = VariantId.MINIMAL,
    check_every: int = 1,
    stop_on_first: bool = True,
) -> CheckReport:
    """Run ``ops`` random operations and verify the table after each one.

    Mix: 45% insert of a fresh key, 35% remove (usually of a present key),
    20% find (half present, half absent). After every ``check_every``
    operations the full invariant check runs; every find is compared with a
    plain dict, and the handle of each found key must equal the one returned
    when it was inserted.
    """
    rng = random.Random(seed)
    hashes = TabulatedHash(m, seed).table(ops + 1).tolist()
    table = Table(m, hashes.__getitem__)
    remove = remover(variant)
    model: dict = {}
    refs: dict = {}
    present: list = []  # keys in the model, for O(1) random choice
    where: dict = {}
    next_key = 0
    report = CheckReport()

    def drop(key):
        pos = where.pop(key)
        last = present.pop()
        if last != key:
            present[pos] = last
            where[last] = pos
        del model[key]
        del refs[key]

    def fail(kind, index, detail):
        report.violations.append(Violation(kind, index, detail))

    for step in range(ops):
        report.ops = step + 1
        r = rng.random()
        if r < 0.45:
            key = next_key
            next_key += 1
            value = rng.getrandbits(32)
            try:
                ref, _ = table.insert(key, value)
            except TableFullError:
                report.op_counts["insert_full"] += 1
                if table.empty_count != 1:
                    fail(ViolationKind.MODEL_MISMATCH, 0,
                         f"step {step}: table full with {table.empty_count} empty slots")
            else:
                report.op_counts["insert"] += 1
                model[key] = value
                refs[key] = ref.index
                where[key] = len(present)
                present.append(key)
        elif r < 0.80:
            if present and rng.random() < 0.8:
                key = present[rng.randrange(len(present))]
            else:
                key = next_key  # never inserted yet
            expected = key in model
            got = remove(table, key)
            report.op_counts["remove"] += 1
            if got != expected:
                fail(ViolationKind.MODEL_MISMATCH, 0,
                     f"step {step}: remove({key}) returned {got}, model says {expected}")
            if expected:
                drop(key)
        else:
            if present and rng.random() < 0.5:
                key = present[rng.randrange(len(present))]
            else:
                key = next_key
            ref, _ = table.find(key)
            report.op_counts["find"] += 1
            if (ref is not None) != (key in model):
                fail(ViolationKind.MODEL_MISMATCH, ref.index if ref else 0,
                     f"step {step}: find({key}) disagrees with model")
            elif ref is not None:
                k, v = table.read(ref)
                if v != model[key]:
                    fail(ViolationKind.MODEL_MISMATCH, ref.index,
                         f"step {step}: value of {key} is {v}, model has {model[key]}")
                if ref.index != refs[key]:
                    fail(ViolationKind.HANDLE_MOVED, ref.index,
                         f"step {step}: key {key} moved from slot {refs[key]}")
        if (step + 1) % check_every == 0:
            report.violations.extend(check_invariants(table))
        if report.violations and stop_on_first:
            break

    if not report.violations:
        # every surviving handle, not just the sampled ones
        for key, idx in refs.items():
            ref, _ = table.find(key)
            if ref is None or ref.index != idx:
                fail(ViolationKind.HANDLE_MOVED, idx, f"key {key} no longer at slot {idx}")
                break
        if len(table) != len(model):
            fail(ViolationKind.MODEL_MISMATCH, 0,
                 f"table holds {len(table)} elements, model {len(model)}")
    return report
