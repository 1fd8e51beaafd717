"""
The reduced permutation space P_{n,(s,1)}.

A permutation is Bad (s,1)-sorted when every residue class modulo the
largest increment h = s(1) is strictly decreasing, the unique worst case
of insertion sort on that class. Such a permutation is fixed by which
values land in which class, so the space has n! / prod(m_j!) elements,
m_j being the class sizes.

Elements are ranked in mixed radix: the value set of class 0 (a
combination of the n values, lexicographic) is the most significant
digit, then class 1 among the remaining values, and so on. Rank ranges
are the unit of batching and of splitting work between processes.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb, factorial, prod

import numpy as np

from engine.errors import CapacityError, DomainError, InvalidSequenceError
from engine.gapseq import GapSequence, require_valid
from engine.shell import STATE_DTYPE, Permutation, evaluate_passes
from utils.config import get_settings

logger = logging.getLogger(__name__)

MAX_N = 30
# combinations per class above this are unranked arithmetically instead of by table
TABLE_LIMIT = 1 << 17
BINOM = np.array([[comb(a, b) for b in range(MAX_N + 1)] for a in range(MAX_N + 1)], dtype=np.int64)


def class_sizes(n: int, h: int) -> tuple[int, ...]:
    """m_j = ceil((n - j) / h) for j = 0 .. h-1."""
    return tuple(-(-(n - j) // h) for j in range(h))


def _check_range(n, h):
    if n < 1 or n > MAX_N:
        raise DomainError(f"n must be in 1..{MAX_N}, got {n}")
    if not (1 <= h <= n - 1 or h == n == 1):
        raise DomainError(f"largest increment must be in 1..{n - 1} for n={n}, got {h}")


def bad1_count(n: int, h: int) -> int:
    _check_range(n, h)
    return factorial(n) // prod(factorial(m) for m in class_sizes(n, h))


def is_bad1(p: Permutation, h: int) -> bool:
    if h < 1:
        raise DomainError(f"increment must be positive, got {h}")
    values = p.values if isinstance(p, Permutation) else tuple(p)
    for start in range(min(h, len(values))):
        chain = values[start::h]
        if any(a <= b for a, b in zip(chain, chain[1:])):
            return False
    return True


def _unrank_combinations(digits, r, m):
    """Lexicographic unranking of m-subsets of range(r), one row per digit."""
    rows = digits.shape[0]
    out = np.empty((rows, m), dtype=np.int64)
    d = digits.copy()
    t = np.full(rows, m, dtype=np.int64)
    for e in range(r):
        active = t > 0
        if not active.any():
            break
        cnt = BINOM[r - e - 1, np.maximum(t - 1, 0)]
        take = active & (d < cnt)
        idx = np.nonzero(take)[0]
        out[idx, (m - t)[idx]] = e
        d = np.where(active & ~take, d - cnt, d)
        t = np.where(take, t - 1, t)
    return out


def _combination_rank(chosen, r):
    m = len(chosen)
    rank = 0
    prev = -1
    for slot, e in enumerate(chosen):
        for skipped in range(prev + 1, e):
            rank += comb(r - skipped - 1, m - slot - 1)
        prev = e
    return rank


def split_ranges(total: int, k: int, start: int = 0) -> list[tuple[int, int]]:
    """k contiguous half-open ranges covering [start, start + total)."""
    if k < 1:
        raise ValueError(f"need at least one range, got {k}")
    bounds = [start + (total * j) // k for j in range(k + 1)]
    return [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]


class ReducedSpace:
    """P_{n,(s,1)} for n elements and largest increment h."""

    def __init__(self, n: int, h: int):
        _check_range(n, h)
        self.n = n
        self.h = h
        self.class_sizes = class_sizes(n, h)
        self.positions = tuple(np.arange(j, n, h) for j in range(h))
        radices = []
        remaining = n
        for m in self.class_sizes:
            radices.append(comb(remaining, m))
            remaining -= m
        self.radices = tuple(radices)
        self.cardinality = prod(self.radices)
        # every class strictly decreasing: inserting the element at class position j costs j
        self.first_pass_cost = sum(m * (m - 1) // 2 for m in self.class_sizes)

    def __repr__(self):
        return f"ReducedSpace(n={self.n}, h={self.h}, cardinality={self.cardinality})"

    @cached_property
    def _tables(self):
        tables = []
        remaining = self.n
        for m, radix in zip(self.class_sizes, self.radices):
            if radix <= TABLE_LIMIT:
                tables.append(np.array(list(itertools.combinations(range(remaining), m)), dtype=np.int64))
            else:
                tables.append(None)
            remaining -= m
        return tables

    @cached_property
    def _weights(self):
        weights = [1] * self.h
        for j in range(self.h - 2, -1, -1):
            weights[j] = weights[j + 1] * self.radices[j + 1]
        return weights

    def digits_for(self, ranks) -> np.ndarray:
        """Mixed-radix digits, one row per rank, most significant first."""
        if self.cardinality < (1 << 62):
            r = np.asarray(ranks, dtype=np.int64)
            return np.stack(
                [(r // w) % radix for w, radix in zip(self._weights, self.radices)], axis=1
            )
        rows = []
        for rank in ranks:
            row = []
            for w, radix in zip(self._weights, self.radices):
                row.append((int(rank) // w) % radix)
            rows.append(row)
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.h)

    def states_for(self, ranks, descending: bool = False) -> np.ndarray:
        """
        Rows for the given ranks: classes ascending (the state after the
        first pass) or, with ``descending``, the Bad permutations themselves.
        """
        digits = self.digits_for(ranks)
        rows = digits.shape[0]
        avail = np.tile(np.arange(self.n, dtype=np.int64), (rows, 1))
        states = np.empty((rows, self.n), dtype=STATE_DTYPE)
        remaining = self.n
        for j, m in enumerate(self.class_sizes):
            table = self._tables[j]
            if table is not None:
                chosen = table[digits[:, j]]
            else:
                chosen = _unrank_combinations(digits[:, j], remaining, m)
            values = np.take_along_axis(avail, chosen, axis=1)
            if descending:
                values = values[:, ::-1]
            states[:, self.positions[j]] = values + 1
            if remaining > m:
                keep = np.ones((rows, remaining), dtype=bool)
                keep[np.arange(rows)[:, None], chosen] = False
                avail = avail[keep].reshape(rows, remaining - m)
            remaining -= m
        return states

    def unrank(self, rank: int) -> Permutation:
        if not 0 <= rank < self.cardinality:
            raise DomainError(f"rank {rank} outside 0..{self.cardinality - 1}")
        return Permutation(tuple(int(v) for v in self.states_for([rank], descending=True)[0]))

    def rank_of(self, p: Permutation) -> int:
        """Rank of the Bad permutation with the same class value sets as p."""
        values = p.values if isinstance(p, Permutation) else tuple(p)
        if len(values) != self.n:
            raise DomainError(f"permutation of length {len(values)} for n={self.n}")
        avail = list(range(1, self.n + 1))
        rank = 0
        for j, radix in enumerate(self.radices):
            chosen = sorted(values[pos] for pos in self.positions[j])
            idx = [avail.index(v) for v in chosen]
            rank = rank * radix + _combination_rank(idx, len(avail))
            taken = set(chosen)
            avail = [v for v in avail if v not in taken]
        return rank

    def probe_ranks(self, count: int) -> list[int]:
        """The reversed permutation plus ``count`` evenly spaced ranks."""
        reverse_rank = self.rank_of(tuple(range(self.n, 0, -1)))
        spaced = {(k * self.cardinality) // count for k in range(count)}
        return sorted(spaced | {reverse_rank})


@lru_cache(maxsize=64)
def reduced_space(n: int, h: int) -> ReducedSpace:
    return ReducedSpace(n, h)


def enumerate_bad1(n: int, h: int, start: int = 0, stop: int | None = None, budget: int | None = None):
    """
    Stream the Bad (s,1)-sorted permutations with ranks in [start, stop).
    Disjoint rank ranges give independent sub-streams.
    """
    space = reduced_space(n, h)
    stop = space.cardinality if stop is None else min(stop, space.cardinality)
    if not 0 <= start <= stop:
        raise DomainError(f"bad rank range [{start}, {stop})")
    budget = get_settings().enum_budget if budget is None else budget
    if stop - start > budget:
        raise CapacityError(f"P_{{{n},(s,1)}} with s(1)={h}", space.cardinality, budget)
    batch_size = get_settings().batch_size

    def stream():
        for lo in range(start, stop, batch_size):
            hi = min(lo + batch_size, stop)
            block = space.states_for(np.arange(lo, hi, dtype=np.int64), descending=True)
            for row in block:
                yield Permutation(tuple(int(v) for v in row))

    return stream()


def count_bad1(n: int, h: int, budget: int | None = None) -> int:
    """Walk the whole space in blocks and count it (the stream, not the formula)."""
    space = reduced_space(n, h)
    budget = get_settings().enum_budget if budget is None else budget
    if space.cardinality > budget:
        raise CapacityError(f"P_{{{n},(s,1)}} with s(1)={h}", space.cardinality, budget)
    batch_size = get_settings().batch_size
    seen = 0
    for lo in range(0, space.cardinality, batch_size):
        hi = min(lo + batch_size, space.cardinality)
        seen += space.states_for(np.arange(lo, hi, dtype=np.int64)).shape[0]
    return seen


@dataclass(frozen=True)
class ReducedEvaluation:
    worst: int
    exceeded: bool
    evaluated: int
    exhaustive: bool
    cardinality: int


def _evaluate_range(n, gaps, start, stop, bound, batch_size):
    """Worker: (worst, exceeded, evaluated) over ranks [start, stop)."""
    space = reduced_space(n, gaps[0])
    rest = gaps[1:]
    worst = -1
    evaluated = 0
    for lo in range(start, stop, batch_size):
        hi = min(lo + batch_size, stop)
        states = space.states_for(np.arange(lo, hi, dtype=np.int64))
        worst = max(worst, int(evaluate_passes(states, rest).max()) + space.first_pass_cost)
        evaluated += hi - lo
        if bound is not None and worst >= bound:
            return worst, True, evaluated
    return worst, False, evaluated


def _evaluate_ranks(space, gaps, ranks):
    states = space.states_for(ranks)
    return int(evaluate_passes(states, gaps[1:]).max()) + space.first_pass_cost


def _evaluate_parallel(n, gaps, stop, bound, batch_size, jobs, executor):
    chunks = split_ranges(stop, jobs * 4)
    own = executor is None
    pool = ProcessPoolExecutor(max_workers=jobs) if own else executor
    try:
        pending = {pool.submit(_evaluate_range, n, gaps, lo, hi, bound, batch_size) for lo, hi in chunks}
        worst, evaluated = -1, 0
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for future in done:
                w, exceeded, count = future.result()
                worst = max(worst, w)
                evaluated += count
                if exceeded:
                    for other in pending:
                        other.cancel()
                    return worst, True, evaluated
        return worst, False, evaluated
    finally:
        if own:
            pool.shutdown(wait=True, cancel_futures=True)


def evaluate_reduced(
    n: int,
    s: GapSequence,
    bound: int | None = None,
    limit: int | None = None,
    jobs: int = 1,
    executor=None,
) -> ReducedEvaluation:
    """
    Worst case of ``s`` over P_{n,(s,1)}, looking at no more than ``limit``
    ranks. With ``bound`` the walk stops as soon as any permutation reaches
    it; the reported worst is then the bound itself.
    """
    require_valid(s, n)
    if s.is_empty:
        return ReducedEvaluation(0, bound is not None and bound <= 0, 1, True, 1)
    settings = get_settings()
    space = reduced_space(n, s.largest)
    gaps = tuple(s)
    card = space.cardinality
    stop = card if limit is None else min(card, limit)

    probe_worst = -1
    if bound is not None and settings.probes > 0 and card > settings.probes:
        probe_worst = _evaluate_ranks(space, gaps, space.probe_ranks(settings.probes))
        if probe_worst >= bound:
            logger.debug("n=%d s={%s} pruned by probe (%d >= %d)", n, s, probe_worst, bound)
            return ReducedEvaluation(bound, True, settings.probes, False, card)

    if jobs > 1 and stop > settings.batch_size:
        worst, exceeded, evaluated = _evaluate_parallel(
            n, gaps, stop, bound, settings.batch_size, jobs, executor
        )
    else:
        worst, exceeded, evaluated = _evaluate_range(n, gaps, 0, stop, bound, settings.batch_size)
    if exceeded:
        return ReducedEvaluation(bound, True, evaluated, False, card)
    return ReducedEvaluation(max(worst, probe_worst), False, evaluated, stop == card, card)


def max_comparisons_reduced(
    n: int,
    s: GapSequence,
    stop_at_bound: int | None = None,
    budget: int | None = None,
    jobs: int = 1,
) -> tuple[int, bool]:
    require_valid(s, n)
    if not s.is_empty:
        budget = get_settings().enum_budget if budget is None else budget
        space = reduced_space(n, s.largest)
        if space.cardinality > budget:
            raise CapacityError(f"P_{{{n},(s,1)}} for s={{{s}}}", space.cardinality, budget)
    result = evaluate_reduced(n, s, bound=stop_at_bound, jobs=jobs)
    return result.worst, result.exceeded


def _bad2_mask(states, n, second):
    mask = np.ones(states.shape[0], dtype=bool)
    for start in range(min(second, n)):
        cols = np.arange(start, n, second)
        if len(cols) > 1:
            mask &= (np.diff(states[:, cols].astype(np.int64), axis=1) < 0).all(axis=1)
    return mask


def _require_two(s):
    if len(s) < 2:
        raise InvalidSequenceError(f"s(2) is undefined for {{{s}}}")


def bad2_members(n: int, s: GapSequence, budget: int | None = None):
    """
    Bad (s,2)-sorted permutations: members of P_{n,(s,1)} whose state after
    the first pass is Bad (s(2),1)-sorted.
    """
    require_valid(s, n)
    _require_two(s)
    space = reduced_space(n, s.largest)
    budget = get_settings().enum_budget if budget is None else budget
    if space.cardinality > budget:
        raise CapacityError(f"P_{{{n},(s,1)}} for s={{{s}}}", space.cardinality, budget)
    batch_size = get_settings().batch_size
    second = s.s(2)

    def stream():
        for lo in range(0, space.cardinality, batch_size):
            hi = min(lo + batch_size, space.cardinality)
            ranks = np.arange(lo, hi, dtype=np.int64)
            mask = _bad2_mask(space.states_for(ranks), n, second)
            if mask.any():
                for row in space.states_for(ranks[mask], descending=True):
                    yield Permutation(tuple(int(v) for v in row))

    return stream()


def _count_bad2_range(n, h, second, start, stop, batch_size):
    space = reduced_space(n, h)
    found = 0
    for lo in range(start, stop, batch_size):
        hi = min(lo + batch_size, stop)
        found += int(_bad2_mask(space.states_for(np.arange(lo, hi, dtype=np.int64)), n, second).sum())
    return found


def bad2_count(n: int, s: GapSequence, budget: int | None = None, jobs: int = 1) -> int:
    """Size of P_{n,(s,2)} by exhaustive filtering, optionally across processes."""
    require_valid(s, n)
    _require_two(s)
    space = reduced_space(n, s.largest)
    budget = get_settings().enum_budget if budget is None else budget
    if space.cardinality > budget:
        raise CapacityError(f"P_{{{n},(s,1)}} for s={{{s}}}", space.cardinality, budget)
    batch_size = get_settings().batch_size
    if jobs <= 1:
        return _count_bad2_range(n, s.largest, s.s(2), 0, space.cardinality, batch_size)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_count_bad2_range, n, s.largest, s.s(2), lo, hi, batch_size)
            for lo, hi in split_ranges(space.cardinality, jobs * 4)
        ]
        return sum(f.result() for f in futures)
