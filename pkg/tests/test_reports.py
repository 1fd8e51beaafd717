import pytest

from engine.gapseq import GapSequence
from engine.minimax import SearchHistory
from utils.reports import (
    MISSING,
    collect_histories,
    counts_table,
    formulas_table,
    optimal_table,
    render_frame,
    shell_vs_linear_table,
)
from utils.result_store import ResultStore


@pytest.fixture(scope="module")
def histories():
    return collect_histories(8, store=None, compute_up_to=8)


def test_counts_table_matches_published():
    frame, notes = counts_table(16)
    assert notes == []
    assert len(frame) == 15
    assert frame.loc[frame["s(1)"] == 4, "|P_n,(s,1)|"].item() == "63 063 000"
    assert frame.loc[frame["s(1)"] == 15, "|P_n,(s,1)|"].item() == "10 461 394 944 000"


def test_optimal_table(histories):
    frame, notes = optimal_table(histories)
    assert notes == []
    assert frame["c_n"].tolist() == ["0", "1", "3", "6", "10", "14", "18", "23"]
    assert frame["s**_n"].tolist()[1:5] == ["1"] * 4
    assert frame.loc[frame["n"] == 7, "i(s**_n)"].item() == "21"


def test_optimal_table_footnotes_the_printed_index():
    twelve = SearchHistory(
        n=12, records=(), final_c=48, final_sequence=GapSequence.of(1, 3, 7, 11), complete=True
    )
    frame, notes = optimal_table({12: twelve})
    assert frame["i(s**_n)"].item() == "547*"
    assert frame["c_n"].item() == "48"
    assert len(notes) == 1
    assert "543" in notes[0] and "547" in notes[0]


def test_missing_rows_are_dashes():
    frame, _ = optimal_table(collect_histories(6, compute_up_to=4))
    assert frame.loc[frame["n"] == 6, "c_n"].item() == MISSING


def test_shell_vs_linear(histories):
    frame, notes = shell_vs_linear_table(histories)
    assert notes == []
    assert frame.loc["Improvement"].tolist() == ["0", "0", "0", "0", "0", "1", "3", "5"]
    assert frame.loc["Linear"].tolist()[-1] == "28"


def test_stored_histories_are_reused(tmp_path, monkeypatch):
    store = ResultStore(str(tmp_path))
    collect_histories(5, store, compute_up_to=5)

    def fail(*args, **kwargs):
        raise AssertionError("search should come from the store")

    monkeypatch.setattr("utils.reports.minimax_search", fail)
    again = collect_histories(5, store, compute_up_to=5)
    assert again[5].final_c == 10


def test_formulas_table_with_enumeration():
    frame = formulas_table(range(3, 7), brute_force=True)
    assert frame.loc[frame["n"] == 3, "n_3"].item() == MISSING
    for _, row in frame[frame["n"] >= 4].iterrows():
        assert row["n_2"] == row["max s_2"]
        assert row["n_3"] == row["max s_3"]
        assert row["n_4"] == row["max s_4"]


def test_render_frame_lists_notes():
    frame, _ = counts_table(4)
    text = render_frame(frame, ["something differs"], title="Counts")
    lines = text.splitlines()
    assert lines[0] == "Counts"
    assert lines[-1] == "  * something differs"
