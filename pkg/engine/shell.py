"""
Comparison-counting Shellsort.

Each pass is a gapped linear insertion sort. Inserting an element into
its already sorted gapped prefix costs one comparison per larger prefix
element, plus one more when it stops short of the front of its class.
The first element of every class costs nothing.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from engine.errors import CapacityError, InvalidPermutationError
from engine.gapseq import GapSequence, require_valid
from utils.config import get_settings

logger = logging.getLogger(__name__)

# Values fit in int16 for every n the engine accepts (n <= 30).
STATE_DTYPE = np.int16


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidPermutationError(f"{values!r} is not a permutation of 1..{len(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reversed_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


@dataclass(frozen=True)
class SortTrace:
    total_comparisons: int
    per_pass: tuple[tuple[int, int], ...]
    result: Permutation
    intermediate_after_first_pass: Permutation | None = field(default=None)


def _gapped_insertion_pass(values: list[int], gap: int) -> int:
    n = len(values)
    comparisons = 0
    for start in range(min(gap, n)):
        for j in range(start + gap, n, gap):
            x = values[j]
            k = j - gap
            while k >= 0:
                comparisons += 1
                if values[k] > x:
                    values[k + gap] = values[k]
                    k -= gap
                else:
                    break
            values[k + gap] = x
    return comparisons


def shellsort_count(p: Permutation, s: GapSequence) -> SortTrace:
    if not isinstance(p, Permutation):
        p = Permutation(tuple(p))
    require_valid(s, p.n)
    values = list(p.values)
    per_pass = []
    intermediate = None
    for gap in s:
        per_pass.append((gap, _gapped_insertion_pass(values, gap)))
        if intermediate is None:
            intermediate = Permutation(tuple(values))
    total = sum(c for _, c in per_pass)
    return SortTrace(
        total_comparisons=total,
        per_pass=tuple(per_pass),
        result=Permutation(tuple(values)),
        intermediate_after_first_pass=intermediate,
    )


def after_first_pass(p: Permutation, s: GapSequence) -> Permutation:
    values = list(p.values)
    if not s.is_empty:
        _gapped_insertion_pass(values, s.largest)
    return Permutation(tuple(values))


def evaluate_passes(states: np.ndarray, gaps) -> np.ndarray:
    """
    Run the passes for ``gaps`` (largest first) on every row of ``states``.

    ``states`` is sorted in place; the per-row comparison totals are
    returned as int64.
    """
    rows, n = states.shape
    totals = np.zeros(rows, dtype=np.int64)
    for gap in gaps:
        for start in range(min(gap, n)):
            cols = np.arange(start, n, gap)
            length = len(cols)
            if length < 2:
                continue
            sub = states[:, cols]
            greater = np.zeros(rows, dtype=np.int64)
            for k in range(1, length):
                greater += (sub[:, :k] > sub[:, k:k + 1]).sum(axis=1)
            prefix_min = np.minimum.accumulate(sub, axis=1)
            # elements smaller than everything before them land at the front
            fronts = (sub[:, 1:] < prefix_min[:, :-1]).sum(axis=1)
            totals += greater + (length - 1) - fronts
            sub.sort(axis=1)
            states[:, cols] = sub
    return totals


def all_permutations(n: int) -> np.ndarray:
    """Every permutation of 1..n as rows, in lexicographic order."""
    if n == 0:
        return np.zeros((1, 0), dtype=STATE_DTYPE)
    return np.array(list(itertools.permutations(range(1, n + 1))), dtype=STATE_DTYPE)


def full_space_costs(n: int, s: GapSequence, max_n: int | None = None) -> np.ndarray:
    """Comparison totals of every permutation of 1..n, lexicographic order."""
    limit = get_settings().brute_force_max_n if max_n is None else max_n
    if n > limit:
        raise CapacityError(f"full permutation space P_{n}", factorial(n), factorial(limit))
    require_valid(s, n)
    states = all_permutations(n)
    return evaluate_passes(states, tuple(s))


def max_comparisons_full(n: int, s: GapSequence, max_n: int | None = None) -> int:
    costs = full_space_costs(n, s, max_n=max_n)
    worst = int(costs.max()) if len(costs) else 0
    logger.debug("full-space max for n=%d s={%s}: %d", n, s, worst)
    return worst
