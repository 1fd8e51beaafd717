import json

import pytest

import cli
from engine.verify import VerificationReport


@pytest.fixture
def run(tmp_path, capsys):
    store = str(tmp_path / "store")

    def invoke(*argv):
        code = cli.main([*argv, "--store", store, "--quiet"])
        out, err = capsys.readouterr()
        return code, out, err

    return invoke


def test_search_prints_the_log(run):
    code, out, _ = run("search", "7")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n=7"
    assert [line.split()[0] for line in lines[2:6]] == ["i=1", "i=3", "i=5", "i=21"]
    assert "terminated." in lines
    assert lines[-1] == "c_7=18 s={1, 4, 6}"


def test_search_single_element(run):
    code, out, _ = run("search", "1")
    assert code == 0
    assert out.splitlines()[-1] == "c_1=0 s={}"


def test_search_is_cached(run, monkeypatch):
    assert run("search", "6")[0] == 0

    def fail(*args, **kwargs):
        raise AssertionError("expected a cache hit")

    monkeypatch.setattr(cli, "minimax_search", fail)
    code, out, _ = run("search", "6")
    assert code == 0
    assert "n_i=14" in out


def test_search_json_matches_across_workers(run, small_batches):
    _, single, _ = run("search", "8", "--json", "--force")
    _, pooled, _ = run("search", "8", "--json", "--force", "--jobs", "3")
    assert single == pooled
    assert json.loads(single)["final_sequence"] == [1, 5, 7]


def test_truncated_search_exits_zero(run):
    code, out, _ = run("search", "9", "--limit", "4")
    assert code == 0
    assert "complete=false" in out
    assert "terminated." not in out


def test_search_resume(run, tmp_path):
    checkpoint = str(tmp_path / "n8.jsonl")
    assert run("search", "8", "--checkpoint", checkpoint, "--limit", "10")[0] == 0
    code, out, _ = run("search", "8", "--checkpoint", checkpoint, "--resume")
    assert code == 0
    assert out.splitlines()[-1] == "c_8=23 s={1, 5, 7}"


def test_resume_needs_a_checkpoint(run):
    code, _, err = run("search", "8", "--resume")
    assert code == 1
    assert "--checkpoint" in err


def test_eval_full(run):
    code, out, _ = run("eval", "6", "--seq", "1,4", "--full")
    assert code == 0
    assert out.splitlines() == ["n=6 s={1, 4} i=5", "max comparisons: 14 (full space, 6! permutations)"]


def test_eval_single_element_empty_sequence(run):
    code, out, _ = run("eval", "1", "--seq", "", "--full")
    assert code == 0
    assert out.splitlines() == ["n=1 s={} i=—", "max comparisons: 0 (full space, 1! permutations)"]
    code, out, _ = run("eval", "1", "--seq", "")
    assert code == 0
    assert out.splitlines()[-1].startswith("max comparisons: 0")


def test_eval_reduced_by_index(run):
    code, out, _ = run("eval", "9", "--index", "7")
    assert code == 0
    assert out.splitlines()[0] == "n=9 s={1, 3, 4} i=7"
    assert out.splitlines()[1].startswith("max comparisons: 29 (reduced space, 7 560 permutations)")


@pytest.mark.slow
def test_eval_sixteen(run):
    code, out, _ = run("eval", "16", "--index", "4", "--reduced", "--jobs", "4")
    assert code == 0
    assert "max comparisons: 89" in out


def test_eval_over_capacity(run):
    code, _, err = run("eval", "16", "--seq", "1,15", "--reduced")
    assert code == 2
    assert "10 461 394 944 000" in err


def test_eval_invalid_sequence(run):
    code, _, err = run("eval", "6", "--seq", "1,7")
    assert code == 1
    assert "not a gap sequence" in err


def test_usage_errors_exit_one(run):
    with pytest.raises(SystemExit) as info:
        run("search")
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        run("eval", "6", "--seq", "1", "--index", "1")
    assert info.value.code == 1


def test_dist_csv(run):
    code, out, _ = run("dist", "6", "--seq", "1,4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "comparisons,frequency"
    assert lines[1:] == ["7,8", "8,40", "9,104", "10,180", "11,192", "12,128", "13,56", "14,12"]


def test_dist_json_to_file(run, tmp_path):
    target = tmp_path / "left.json"
    code, _, _ = run("dist", "6", "--seq", "1", "--format", "json", "--output", str(target))
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["bins"]["5"] == 2
    assert doc["total"] == 720


def test_dist_over_capacity(run):
    code, _, err = run("dist", "12", "--seq", "1")
    assert code == 2
    assert "479 001 600" in err


def test_tables_shell_vs_linear(run):
    code, out, _ = run("tables", "shell-vs-linear", "--max-n", "8", "--compute-up-to", "8")
    assert code == 0
    improvement = next(line for line in out.splitlines() if line.startswith("Improvement"))
    assert improvement.split()[1:] == ["0", "0", "0", "0", "0", "1", "3", "5"]


def test_tables_optimal_small(run):
    code, out, _ = run("tables", "optimal", "--max-n", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [row[1] for row in doc["frame"]["data"]] == ["", "1", "1", "1", "1"]
    assert doc["notes"] == []


def test_tables_counts(run):
    code, out, _ = run("tables", "counts", "--n", "16")
    assert code == 0
    assert "63 063 000" in out
    assert "*" not in out


def test_verify_gamma(run):
    code, out, _ = run("verify", "gamma")
    assert code == 0
    assert "17/17 increments match" in out


def test_verify_failure_exits_three(run, monkeypatch):
    def failing(name, **kwargs):
        report = VerificationReport(name)
        report.add("always", False)
        return report

    monkeypatch.setattr(cli, "run_suite", failing)
    code, out, err = run("verify", "gamma")
    assert code == 3
    assert "FAIL" in out
    assert "gamma" in err


def test_avg(run):
    code, out, _ = run("avg", "5")
    assert code == 0
    assert out.splitlines()[2].startswith("i=1")
