"""Linear-probing hash table with stable slots and minimal tombstones."""

from .baselines import VariantId, remove_naive, remove_shift, remover
from .cache import ReferenceLRU, StableRefCache
from .hashing import TabulatedHash
from .oracle import Violation, ViolationKind, check_invariants, exact_probe_costs, tombstone_justified
from .table import (
    EMPTY,
    TOMBSTONE,
    InvalidCapacityError,
    Outcome,
    Slot,
    SlotRef,
    SlotState,
    StaleHandleError,
    Table,
    TableFullError,
    mixed_hash,
)

__all__ = [
    "EMPTY", "TOMBSTONE", "InvalidCapacityError", "Outcome", "ReferenceLRU", "Slot",
    "SlotRef", "SlotState", "StableRefCache", "StaleHandleError", "Table",
    "TableFullError", "TabulatedHash", "VariantId", "Violation", "ViolationKind",
    "check_invariants", "exact_probe_costs", "mixed_hash", "remove_naive",
    "remove_shift", "remover", "tombstone_justified",
]
