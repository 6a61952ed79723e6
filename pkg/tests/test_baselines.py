import random

import pytest

from stableprobe import (
    SlotRef,
    Table,
    TableFullError,
    VariantId,
    check_invariants,
    remove_naive,
    remove_shift,
    remover,
)
from stableprobe.oracle import ViolationKind

from conftest import E, T, layout


def test_naive_leaves_tombstone(setup_a):
    assert remove_naive(setup_a, "b")
    assert layout(setup_a) == [E, E, "a", T, "c", E, E, E]


def test_naive_never_cleans_up(setup_a):
    remove_naive(setup_a, "b")
    remove_naive(setup_a, "c")
    assert layout(setup_a) == [E, E, "a", T, T, E, E, E]
    kinds = {v.kind for v in check_invariants(setup_a)}
    assert kinds == {ViolationKind.UNJUSTIFIED_TOMBSTONE}


def test_naive_absent(setup_a):
    before = layout(setup_a)
    assert remove_naive(setup_a, "x") is False
    assert layout(setup_a) == before


def test_shift_pulls_back(setup_a):
    assert remove_shift(setup_a, "b")
    assert layout(setup_a) == [E, E, "a", "c", E, E, E, E]
    assert check_invariants(setup_a) == []
    assert setup_a.find("c")[0] == SlotRef(3)


def test_shift_leaves_element_at_home():
    hashes = {"a": 2, "d": 3}
    t = Table(8, hashes.__getitem__)
    t.insert("a")
    t.insert("d")
    assert layout(t) == [E, E, "a", "d", E, E, E, E]
    remove_shift(t, "a")
    assert layout(t) == [E, E, E, "d", E, E, E, E]


def test_shift_does_not_move_element_hashed_right_of_hole():
    hashes = {"a": 2, "d": 4}
    t = Table(8, hashes.__getitem__)
    t.insert("a")
    t.insert("d")
    remove_shift(t, "a")
    assert layout(t) == [E, E, E, E, "d", E, E, E]


def test_shift_singleton():
    t = Table(4, lambda k: 1)
    t.insert("s")
    remove_shift(t, "s")
    assert layout(t) == [E] * 4


def test_shift_wraparound():
    hashes = {"p": 6, "q": 6, "r": 7, "s": 0}
    t = Table(8, hashes.__getitem__)
    for k in "pqrs":
        t.insert(k)
    assert layout(t) == ["r", "s", E, E, E, E, "p", "q"]
    remove_shift(t, "p")
    assert layout(t) == ["s", E, E, E, E, E, "q", "r"]
    assert check_invariants(t) == []


@pytest.mark.parametrize("variant", list(VariantId))
@pytest.mark.parametrize("seed", range(6))
def test_variants_agree_with_dict(variant, seed):
    rng = random.Random(seed)
    m = 32
    hashes = [rng.randrange(m) for _ in range(64)]
    t = Table(m, hashes.__getitem__)
    remove = remover(variant)
    model = {}
    tombstones = 0
    for _ in range(3000):
        key = rng.randrange(64)
        if rng.random() < 0.55:
            try:
                t.insert(key, key * 7)
                model[key] = key * 7
            except TableFullError:
                assert key not in model
        else:
            assert remove(t, key) == (key in model)
            model.pop(key, None)
        if variant is VariantId.NAIVE:
            # tombstones only disappear by being overwritten
            assert t.tombstone_count + t.element_count >= tombstones + len(model) - 1
        if variant is VariantId.SHIFT:
            assert t.tombstone_count == 0
            assert check_invariants(t) == []
        tombstones = t.tombstone_count
        assert {k for k in range(64) if t.find(k)[0] is not None} == set(model)
    assert dict(t.items()) == model


def test_naive_slots_never_become_empty_again():
    rng = random.Random(3)
    m = 64
    hashes = [rng.randrange(m) for _ in range(10_000)]
    t = Table(m, hashes.__getitem__)
    live = []
    for k in range(30):
        t.insert(k)
        live.append(k)
    for k in range(30, 10_000):
        was_empty = [x is E for x in t.raw_keys()]
        remove_naive(t, live.pop(0))
        try:
            t.insert(k)
        except TableFullError:
            break
        live.append(k)
        now = t.raw_keys()
        assert all(was_empty[i] or now[i] is not E for i in range(m))
    assert t.empty_count == 1


def test_minimal_and_naive_place_elements_identically():
    """Both insert at the first non-occupied slot, so elements land in the same places."""
    rng = random.Random(11)
    m = 128
    hashes = [rng.randrange(m) for _ in range(4000)]
    a, b = Table(m, hashes.__getitem__), Table(m, hashes.__getitem__)
    for k in range(64):
        a.insert(k)
        b.insert(k)
    for k in range(64, 400):
        victim = k - 64
        a.remove(victim)
        remove_naive(b, victim)
        a.insert(k)
        b.insert(k)
        occupied_a = [x if x is not T else E for x in a.raw_keys()]
        occupied_b = [x if x is not T else E for x in b.raw_keys()]
        assert occupied_a == occupied_b
