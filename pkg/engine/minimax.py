"""
Pruned minimax search over sequence indices.

Indices run from 1 to 2^(n-2). Each sequence is evaluated over its
reduced space with the best worst case so far as the stopping bound, and
every strict improvement is logged. The bound starts at n(n-1)/2 + 1 so
that s_1 = {1} is evaluated and logged like every later improvement.
Strict improvement keeps the earliest index among equal optima.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from tqdm import tqdm

from engine import ENGINE_VERSION
from engine.bad_space import evaluate_reduced
from engine.checkpoint import CheckpointWriter, read_checkpoint
from engine.errors import CheckpointError, DomainError
from engine.gapseq import EMPTY_SEQUENCE, GapSequence, index_limit, sequence_from_index

logger = logging.getLogger(__name__)

EXACT = "exact"
LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class SearchRecord:
    i: int
    sequence: GapSequence
    worst_case: int
    status: str = EXACT


@dataclass(frozen=True)
class SearchHistory:
    n: int
    records: tuple[SearchRecord, ...]
    final_c: int | None
    final_sequence: GapSequence
    complete: bool
    index_limit: int = 0
    engine_version: str = ENGINE_VERSION

    @property
    def exact_records(self):
        return tuple(r for r in self.records if r.status == EXACT)

    @property
    def final_index(self):
        return None if self.final_sequence.is_empty else self.final_sequence.index


@dataclass(frozen=True)
class SearchOptions:
    index_limit: int | None = None
    # ranks evaluated per index before a lower bound is recorded; None is unlimited
    budget: int | None = None
    checkpoint: str | None = None
    jobs: int = 1
    prune: bool = True
    progress: bool = False


@dataclass
class _SearchState:
    n: int
    records: list = field(default_factory=list)
    next_index: int = 1

    @property
    def bound(self):
        exact = [r.worst_case for r in self.records if r.status == EXACT]
        return exact[-1] if exact else self.n * (self.n - 1) // 2 + 1


def _effective_limit(n, options):
    full = index_limit(n)
    if options.index_limit is None:
        return full
    if options.index_limit < 1:
        raise DomainError(f"index limit must be positive, got {options.index_limit}")
    return min(options.index_limit, full)


def _history(state, limit, truncated):
    exact = [r for r in state.records if r.status == EXACT]
    best = exact[-1] if exact else None
    return SearchHistory(
        n=state.n,
        records=tuple(state.records),
        final_c=best.worst_case if best else None,
        final_sequence=best.sequence if best else EMPTY_SEQUENCE,
        complete=not truncated and limit == index_limit(state.n) and state.next_index > limit,
        index_limit=limit,
    )


def _run(n, options, state, append):
    if n == 1:
        return SearchHistory(n=1, records=(), final_c=0, final_sequence=EMPTY_SEQUENCE, complete=True)
    limit = _effective_limit(n, options)
    writer = CheckpointWriter(options.checkpoint, n, append=append) if options.checkpoint else None
    executor = ProcessPoolExecutor(max_workers=options.jobs) if options.jobs > 1 else None
    truncated = False
    try:
        indices = range(state.next_index, limit + 1)
        for i in tqdm(indices, desc=f"n={n}", disable=not options.progress, leave=False):
            s = sequence_from_index(i)
            bound = state.bound
            result = evaluate_reduced(
                n,
                s,
                bound=bound if options.prune else None,
                limit=options.budget,
                jobs=options.jobs,
                executor=executor,
            )
            if result.exceeded or result.worst >= bound:
                status, value = ("pruned", bound) if result.exceeded or not result.exhaustive else ("exact", result.worst)
            elif not result.exhaustive:
                state.records.append(SearchRecord(i, s, result.worst, LOWER_BOUND))
                if writer:
                    writer.write(i, result.worst, LOWER_BOUND)
                logger.info("n=%d: budget exhausted at i=%d s={%s}, n_i >= %d", n, i, s, result.worst)
                truncated = True
                break
            else:
                status, value = "improved", result.worst
                state.records.append(SearchRecord(i, s, result.worst, EXACT))
                logger.info("n=%d: i=%d s={%s} n_i=%d", n, i, s, result.worst)
            logger.debug("n=%d: i=%d %s (%d)", n, i, status, value)
            if writer:
                writer.write(i, value, status)
            state.next_index = i + 1
    finally:
        if writer:
            writer.close()
        if executor:
            executor.shutdown(wait=True, cancel_futures=True)
    return _history(state, limit, truncated)


def minimax_search(n: int, options: SearchOptions | None = None) -> SearchHistory:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return _run(n, options or SearchOptions(), _SearchState(n), append=False)


def resume(checkpoint: str, n: int, options: SearchOptions | None = None) -> SearchHistory:
    """
    Continue a checkpointed search after its last fully evaluated index.
    The result is identical to an uninterrupted run.
    """
    options = replace(options or SearchOptions(), checkpoint=checkpoint)
    state = _SearchState(n)
    for entry in read_checkpoint(checkpoint):
        if entry.n != n:
            raise CheckpointError(f"{checkpoint} holds a search for n={entry.n}, not n={n}")
        if entry.i != state.next_index:
            raise CheckpointError(f"{checkpoint}: expected index {state.next_index}, found {entry.i}")
        if entry.status == LOWER_BOUND:
            # partially evaluated; it is redone
            continue
        if entry.status == "improved":
            state.records.append(SearchRecord(entry.i, sequence_from_index(entry.i), entry.worst_case_or_bound))
        state.next_index = entry.i + 1
    logger.info("resuming n=%d at index %d with %d records", n, state.next_index, len(state.records))
    return _run(n, options, state, append=True)


def history_to_dict(history: SearchHistory) -> dict:
    return {
        "n": history.n,
        "engine_version": history.engine_version,
        "complete": history.complete,
        "index_limit": history.index_limit,
        "final_c": history.final_c,
        "final_sequence": list(history.final_sequence.ascending()),
        "final_index": history.final_index,
        "records": [
            {
                "i": r.i,
                "sequence": list(r.sequence.ascending()),
                "worst_case": r.worst_case,
                "status": r.status,
            }
            for r in history.records
        ],
    }


def history_from_dict(data: dict) -> SearchHistory:
    return SearchHistory(
        n=data["n"],
        records=tuple(
            SearchRecord(r["i"], GapSequence(tuple(r["sequence"])), r["worst_case"], r["status"])
            for r in data["records"]
        ),
        final_c=data["final_c"],
        final_sequence=GapSequence(tuple(data["final_sequence"])),
        complete=data["complete"],
        index_limit=data.get("index_limit", 0),
        engine_version=data.get("engine_version", ENGINE_VERSION),
    )


def history_to_json(history: SearchHistory) -> str:
    return json.dumps(history_to_dict(history), indent=2, sort_keys=True)


def render_history(history: SearchHistory) -> str:
    """The search log in the layout of the published search tables."""
    lines = [f"n={history.n}", "-" * 40]
    for r in history.records:
        relation = ">=" if r.status == LOWER_BOUND else "="
        lines.append(f"{'i=' + str(r.i):<9} {'s_i= ' + str(r.sequence):<22} n_i{relation}{r.worst_case}")
    if history.complete:
        lines.append("terminated.")
    return "\n".join(lines)
