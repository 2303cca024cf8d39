import io
import json

import pytest

from middleroman.cli import main
from middleroman.graph import parse_edge_list


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_solve_pr_star_cycle4():
    code, out = run("solve", "--gamma", "pr-star", "--cycle", "4")
    assert code == 0
    data = json.loads(out)["pr-star"]
    assert data["optimum"] == 5
    assert data["labeling"]["weight"] == 5


def test_solve_r_star_path7():
    code, out = run("solve", "--gamma", "r-star", "--path", "7")
    assert code == 0 and json.loads(out)["r-star"]["optimum"] == 7


def test_solve_edge_list_file(tmp_path):
    p = tmp_path / "empty4.el"
    p.write_text("4 0\n")
    code, out = run("solve", "--gamma", "pr", "--file", str(p))
    assert code == 0
    assert json.loads(out) == {"pr": {"optimum": 4, "two_set": [], "labels": [1, 1, 1, 1]}}


def test_solve_graph6_and_tsv():
    code, out = run("solve", "--graph6", "Bw", "--output", "tsv")
    assert code == 0
    assert out.splitlines() == ["gamma\toptimum", "r\t2", "pr\t2", "r-star\t3", "pr-star\t3"]


def test_parse_error_exit(tmp_path):
    p = tmp_path / "bad.el"
    p.write_text("2 1\n0 0\n")
    assert run("solve", "--file", str(p))[0] == 2
    assert run("solve", "--file", str(tmp_path / "missing.el"))[0] == 2


def test_guard_exit(monkeypatch):
    assert run("solve", "--gamma", "r-star", "--complete", "7")[0] == 3
    assert run("solve", "--gamma", "r-star", "--complete", "7", "--size-guard", "28")[0] == 0
    monkeypatch.setenv("MR_SIZE_GUARD", "28")
    assert run("solve", "--gamma", "r-star", "--complete", "7")[0] == 0


def test_family_error_exit():
    assert run("solve", "--cycle", "2")[0] == 2


def test_middle_edge_list():
    code, out = run("middle", "--path", "3", "--output", "tsv")
    assert code == 0
    g = parse_edge_list(out)
    assert (g.n, g.m) == (5, 5)


def test_middle_json_elements():
    code, out = run("middle", "--complete", "2")
    data = json.loads(out)
    assert data["elements"] == [{"original": 0}, {"original": 1}, {"edge": [0, 1]}]


@pytest.mark.parametrize("n, w", [(9, 9), (4, 5)])
def test_construct_cycle(n, w):
    code, out = run("construct", "--cycle", str(n))
    assert code == 0 and json.loads(out)["weight"] == w


def test_construct_path_precondition():
    assert run("construct", "--path", "1")[0] == 2


@pytest.mark.parametrize("argv, equal", [(("--cycle", "6"), True), (("--cycle", "5"), False),
                                         (("--path", "3"), True)])
def test_check(argv, equal):
    code, out = run("check", *argv)
    rep = json.loads(out)
    assert code == 0
    assert rep["equal"] is equal and rep["theorem_consistent"]
    assert (rep["witness"] is not None) is equal


def test_survey_file_with_corrupt_line(tmp_path):
    p = tmp_path / "c.g6"
    p.write_text("A_\n!!bad\nBw\n")
    code, out = run("survey", "--file", str(p))
    assert code == 2
    lines = out.splitlines()
    assert lines[1].endswith("ok") and "error" in lines[2] and lines[3].endswith("ok")
    assert "# graphs=3 violations=0 errors=1" in out


def test_survey_random_deterministic():
    a = run("survey", "--random", "20", "--max-n", "6", "--seed", "3")
    b = run("survey", "--random", "20", "--max-n", "6", "--seed", "3")
    assert a == b and a[0] == 0
    assert "violations=0" in a[1]


def test_survey_guard_errors():
    code, out = run("survey", "--connected", "7", "--checks", "kim")
    assert code == 3


def test_open_problems_complete():
    code, out = run("open-problems", "--complete", "--max", "5")
    rows = [ln.split("\t") for ln in out.splitlines()[1:]]
    assert code == 0 and len(rows) == 4
    assert rows[0][0] == "K_2" and rows[0][-1] == "2"
    assert rows[1][0] == "K_3" and rows[1][-1] == "3"


def test_open_problems_json_deterministic():
    a = run("open-problems", "--complete-bipartite", "--max", "6", "--output", "json")
    assert a == run("open-problems", "--complete-bipartite", "--max", "6", "--output", "json")
    assert json.loads(a[1])[0] == {"params": [1, 1], "gamma_pr_star": 2}
