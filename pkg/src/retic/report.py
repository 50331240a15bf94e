"""Findings: the outcome of checking one property on one input."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, TypeVar

T = TypeVar("T")

FULL_FAMILY_LIMIT = 12
SMALL_FAMILY_SIZE = 3


@dataclass(frozen=True)
class Finding:
    """``applicable`` is False when a hypothesis of the property fails; ``note`` says which.

    ``evaluated`` is False when the property was not computed at all.
    """

    check: str
    holds: bool
    witness: object = None
    note: str = ""
    applicable: bool = True
    evaluated: bool = True


def first_failure(check: str, cases, note: str = "") -> Finding:
    """``cases`` yields ``(ok, witness)``; stop at the first failing case."""
    for ok, witness in cases:
        if not ok:
            return Finding(check, False, witness, note)
    return Finding(check, True, None, note)


def not_applicable(check: str, reason: str) -> Finding:
    return Finding(check, True, None, reason, applicable=False, evaluated=False)


def families(items: Sequence[T]) -> Iterator[tuple[T, ...]]:
    """All subsets when there are few items, otherwise subsets of size at most three."""
    top = len(items) if len(items) <= FULL_FAMILY_LIMIT else SMALL_FAMILY_SIZE
    for k in range(top + 1):
        yield from itertools.combinations(items, k)


def family_note(items: Sequence) -> str:
    if len(items) <= FULL_FAMILY_LIMIT:
        return ""
    return f"families limited to size <= {SMALL_FAMILY_SIZE} ({len(items)} members)"
