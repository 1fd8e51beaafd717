import json

import pytest

from engine.checkpoint import CheckpointWriter, read_checkpoint
from engine.errors import CheckpointError, DomainError
from engine.gapseq import GapSequence
from engine.minimax import (
    SearchOptions,
    history_from_dict,
    history_to_dict,
    history_to_json,
    minimax_search,
    render_history,
    resume,
)
from engine.published import PUBLISHED_HISTORIES, PUBLISHED_OPTIMAL


def _log(history):
    return [(r.i, r.worst_case, r.status) for r in history.records]


@pytest.mark.parametrize("n", range(2, 10))
def test_search_logs_match_published(n):
    history = minimax_search(n)
    assert history.complete
    assert _log(history) == PUBLISHED_HISTORIES[n]
    increments, index, c = PUBLISHED_OPTIMAL[n]
    assert history.final_c == c
    assert history.final_sequence.ascending() == increments
    assert history.final_index == index


@pytest.mark.slow
@pytest.mark.parametrize("n", [10, 11, 12])
def test_larger_search_logs_match_published(n):
    history = minimax_search(n, SearchOptions(jobs=4))
    assert _log(history) == PUBLISHED_HISTORIES[n]


@pytest.mark.slow
def test_twelve_reaches_index_547():
    history = minimax_search(12, SearchOptions(jobs=4))
    assert history.final_c == 48
    assert history.final_sequence == GapSequence.of(1, 3, 7, 11)
    assert history.final_index == 547


def test_single_element_needs_no_comparisons():
    history = minimax_search(1)
    assert history.final_c == 0
    assert history.final_sequence.is_empty
    assert history.records == ()
    assert history.complete


def test_invalid_n():
    with pytest.raises(DomainError):
        minimax_search(0)


@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_pruning_does_not_change_the_result(n):
    pruned = minimax_search(n)
    unpruned = minimax_search(n, SearchOptions(prune=False))
    assert _log(pruned) == _log(unpruned)
    assert pruned.final_sequence == unpruned.final_sequence


def test_workers_give_identical_output(small_batches):
    single = history_to_json(minimax_search(9, SearchOptions(jobs=1)))
    pooled = history_to_json(minimax_search(9, SearchOptions(jobs=3)))
    assert single == pooled


def test_index_limit_truncates():
    history = minimax_search(9, SearchOptions(index_limit=4))
    assert _log(history) == [(1, 36, "exact"), (2, 34, "exact"), (3, 33, "exact"), (4, 32, "exact")]
    assert not history.complete
    assert history.index_limit == 4


def test_budget_ends_with_a_lower_bound():
    history = minimax_search(9, SearchOptions(budget=10))
    assert history.records[0].worst_case == 36
    last = history.records[-1]
    assert last.i == 2
    assert last.status == "lower_bound"
    assert last.worst_case < 36
    assert not history.complete
    assert history.final_c == 36


def test_checkpoint_has_one_line_per_index(tmp_path):
    path = tmp_path / "n8.jsonl"
    minimax_search(8, SearchOptions(checkpoint=str(path)))
    entries = read_checkpoint(str(path))
    assert [e.i for e in entries] == list(range(1, 65))
    improved = [(e.i, e.worst_case_or_bound) for e in entries if e.status == "improved"]
    assert improved == [(1, 28), (3, 25), (7, 24), (41, 23)]


def test_resume_matches_an_uninterrupted_run(tmp_path):
    path = tmp_path / "n9.jsonl"
    full = minimax_search(9, SearchOptions(checkpoint=str(path)))
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:20]) + "\n")
    resumed = resume(str(path), 9)
    assert history_to_json(resumed) == history_to_json(full)
    assert len(path.read_text().splitlines()) == len(lines)


def test_resume_redoes_a_lower_bound(tmp_path):
    path = tmp_path / "n9.jsonl"
    partial = minimax_search(9, SearchOptions(checkpoint=str(path), budget=10))
    assert partial.records[-1].status == "lower_bound"
    resumed = resume(str(path), 9)
    assert _log(resumed) == PUBLISHED_HISTORIES[9]


def test_resume_rejects_another_n(tmp_path):
    path = tmp_path / "n7.jsonl"
    minimax_search(7, SearchOptions(checkpoint=str(path)))
    with pytest.raises(CheckpointError):
        resume(str(path), 8)


def test_resume_rejects_gaps(tmp_path):
    path = tmp_path / "gap.jsonl"
    with CheckpointWriter(str(path), 8) as writer:
        writer.write(1, 28, "improved")
        writer.write(3, 25, "improved")
    with pytest.raises(CheckpointError):
        resume(str(path), 8)


def test_corrupt_checkpoint(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"n": 8, "i": 1\n')
    with pytest.raises(CheckpointError):
        read_checkpoint(str(path))


def test_checkpoint_from_another_engine_version(tmp_path):
    path = tmp_path / "old.jsonl"
    line = {"engine_version": "0.1", "i": 1, "n": 8, "status": "improved", "worst_case_or_bound": 28}
    path.write_text(json.dumps(line) + "\n")
    with pytest.raises(CheckpointError):
        read_checkpoint(str(path))


def test_missing_checkpoint_reads_empty(tmp_path):
    assert read_checkpoint(str(tmp_path / "none.jsonl")) == []


def test_history_json_roundtrip():
    history = minimax_search(7)
    assert history_from_dict(history_to_dict(history)) == history


def test_render_history_layout():
    text = render_history(minimax_search(7))
    lines = text.splitlines()
    assert lines[0] == "n=7"
    assert lines[-1] == "terminated."
    assert "i=21" in lines[-2] and "1, 4, 6" in lines[-2] and lines[-2].endswith("n_i=18")


def test_render_marks_lower_bounds():
    text = render_history(minimax_search(9, SearchOptions(budget=10)))
    assert "n_i>=" in text
    assert "terminated." not in text
