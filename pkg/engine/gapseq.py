"""
Gap sequences and their integer index.

A gap sequence is a finite set of increments containing 1. Sequences are
numbered from 1: bit (k - 2) of (i - 1) says whether k >= 2 is an
increment of s_i, so s_1 = {1}, s_5 = {1, 4}, s_18 = {1, 2, 6}. The
numbering does not depend on n; the sequences valid for n are exactly
s_1 .. s_(2^(n-2)).
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from engine.errors import InvalidSequenceError


@dataclass(frozen=True, order=True)
class GapSequence:
    """Increments stored largest first, the order the passes run in."""

    increments: tuple[int, ...] = ()

    def __post_init__(self):
        values = tuple(self.increments)
        if any(not isinstance(k, int) or isinstance(k, bool) for k in values):
            raise InvalidSequenceError(f"increments must be integers, got {values!r}")
        if len(set(values)) != len(values):
            raise InvalidSequenceError(f"increments must be distinct, got {values!r}")
        if any(k < 1 for k in values):
            raise InvalidSequenceError(f"increments must be positive, got {values!r}")
        if values and 1 not in values:
            raise InvalidSequenceError(f"a gap sequence must contain 1, got {values!r}")
        object.__setattr__(self, "increments", tuple(sorted(values, reverse=True)))

    @classmethod
    def of(cls, *increments: int) -> "GapSequence":
        return cls(tuple(increments))

    @classmethod
    def parse(cls, text: str) -> "GapSequence":
        """Read "1,3,7" or "1, 3, 7"; an empty string is the empty sequence."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise InvalidSequenceError(f"cannot parse gap sequence {text!r}") from exc

    @property
    def is_empty(self) -> bool:
        return not self.increments

    @property
    def largest(self) -> int:
        return self.s(1)

    @property
    def index(self) -> int:
        return index_of_sequence(self)

    def s(self, k: int) -> int:
        """The k-th largest increment; s(1) is the first pass."""
        if not 1 <= k <= len(self.increments):
            raise InvalidSequenceError(f"s({k}) undefined for a sequence of {len(self)} increments")
        return self.increments[k - 1]

    def ascending(self) -> tuple[int, ...]:
        return tuple(reversed(self.increments))

    def __iter__(self) -> Iterator[int]:
        return iter(self.increments)

    def __len__(self) -> int:
        return len(self.increments)

    def __contains__(self, k) -> bool:
        return k in self.increments

    def __str__(self) -> str:
        return ", ".join(str(k) for k in self.ascending())


EMPTY_SEQUENCE = GapSequence()


def sequence_from_index(i: int) -> GapSequence:
    if isinstance(i, bool) or not isinstance(i, int) or i < 1:
        raise InvalidSequenceError(f"sequence index must be a positive integer, got {i!r}")
    bits = i - 1
    increments = [1]
    k = 2
    while bits:
        if bits & 1:
            increments.append(k)
        bits >>= 1
        k += 1
    return GapSequence(tuple(increments))


def index_of_sequence(s: GapSequence | Iterable[int]) -> int:
    if not isinstance(s, GapSequence):
        s = GapSequence(tuple(s))
    if s.is_empty:
        raise InvalidSequenceError("the empty sequence has no index")
    return 1 + sum(1 << (k - 2) for k in s if k >= 2)


def is_valid_for_n(s: GapSequence | Iterable[int], n: int) -> bool:
    increments = set(s)
    if not increments or 1 not in increments:
        return False
    if any(not isinstance(k, int) or k < 1 for k in increments):
        return False
    return max(increments) <= n - 1


def index_limit(n: int) -> int:
    """Number of gap sequences valid for n (0 for n = 1)."""
    if n < 1:
        raise InvalidSequenceError(f"n must be positive, got {n}")
    return 0 if n == 1 else 1 << (n - 2)


def sequences_for_n(n: int) -> Iterator[GapSequence]:
    """S_n in index order."""
    for i in range(1, index_limit(n) + 1):
        yield sequence_from_index(i)


def require_valid(s: GapSequence, n: int) -> None:
    if n == 1 and s.is_empty:
        return
    if not is_valid_for_n(s, n):
        raise InvalidSequenceError(f"{{{s}}} is not a gap sequence for n={n}")
