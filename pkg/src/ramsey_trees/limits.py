"""Global size guards.

Tree constructors refuse to build trees with more than max_leaves() leaves,
and every operation that materializes a combinatorial family (copy
enumeration, triple sets) refuses to produce more than max_enumeration()
items. Both are process-global knobs; the CLI seeds max_leaves from the
RAMSEY_MAX_LEAVES environment variable.
"""

from __future__ import annotations

from .errors import ResourceLimitError

DEFAULT_MAX_LEAVES = 1 << 20
DEFAULT_MAX_ENUMERATION = 1_000_000

_max_leaves = DEFAULT_MAX_LEAVES
_max_enumeration = DEFAULT_MAX_ENUMERATION


def max_leaves() -> int:
    return _max_leaves


def set_max_leaves(n: int) -> None:
    if n < 1:
        raise ValueError(f"max leaves must be positive, got {n}")
    global _max_leaves
    _max_leaves = n


def max_enumeration() -> int:
    return _max_enumeration


def set_max_enumeration(n: int) -> None:
    if n < 1:
        raise ValueError(f"max enumeration must be positive, got {n}")
    global _max_enumeration
    _max_enumeration = n


def check_leaves(n: int) -> None:
    if n > _max_leaves:
        raise ResourceLimitError(
            f"tree would have {n} leaves, over the configured limit {_max_leaves}"
        )


def check_enumeration(n: int) -> None:
    if n > _max_enumeration:
        raise ResourceLimitError(
            f"enumeration would produce {n} items, over the configured limit {_max_enumeration}"
        )
