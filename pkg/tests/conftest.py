import pytest

from stableprobe import EMPTY, TOMBSTONE, Table

E, T = EMPTY, TOMBSTONE


def layout(table):
    """Slot array with keys shown, E for empty and T for tombstone."""
    return list(table.raw_keys())


def table_from(slots, hashes):
    """Build a table directly from a slot layout (for states operations never produce)."""
    m = len(slots)
    t = Table(m, hashes.__getitem__)
    for i, k in enumerate(slots):
        t._keys[i] = k
        if k is not EMPTY and k is not TOMBSTONE:
            t._values[i] = f"v{k}"
            t._homes[i] = hashes[k]
    t.element_count = sum(1 for k in slots if k is not EMPTY and k is not TOMBSTONE)
    t.tombstone_count = sum(1 for k in slots if k is TOMBSTONE)
    t.empty_count = sum(1 for k in slots if k is EMPTY)
    return t


SETUP_A_HASH = {"a": 2, "b": 2, "c": 3, "d": 2, "e": 3, "x": 2}


@pytest.fixture
def setup_a():
    """m=8; a->2, b->2, c->3 inserted in that order: [E,E,a,b,c,E,E,E]."""
    t = Table(8, SETUP_A_HASH.__getitem__)
    for k in "abc":
        t.insert(k, f"v{k}")
    return t


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
