import json
import subprocess
import sys

import pytest

from hypersurf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def gen(tmp_path, capsys):
    def make(name, *extra):
        path = tmp_path / f"{name}{'_'.join(extra)}.3g"
        code, _, _ = run(capsys, "generate", name, *extra, "-o", str(path))
        assert code == 0
        return str(path)

    return make


def test_generate_header(capsys):
    code, out, _ = run(capsys, "generate", "tripartite", "--n", "9")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# generator: tripartite"
    assert json.loads(lines[1].removeprefix("# params: ")) == {"n": 9}
    assert lines[3] == "9 27"


@pytest.mark.parametrize(
    "name, args, d2, comps",
    [("tripartite", ("--n", "9"), 2, 3), ("complete", ("--n", "6"), 4, 1), ("parity", ("--n", "20", "--chi", "0"), 5, None)],
)
def test_check(gen, capsys, name, args, d2, comps):
    code, out, _ = run(capsys, "check", gen(name, *args))
    doc = json.loads(out)
    assert code == 0 and doc["min_codegree"] == d2
    if comps is not None:
        assert doc["components"] == comps


def test_check_three_partite(gen, capsys):
    doc = json.loads(run(capsys, "check", gen("t9"))[1])
    assert doc["three_partite"] and len(set(doc["three_colouring"])) == 3
    # XXY edges repeat a class, and no component spans
    doc = json.loads(run(capsys, "check", gen("tripartite", "--n", "9"))[1])
    assert not doc["three_partite"] and doc["spanning_components"] == []


def test_human_output(gen, capsys):
    code, out, _ = run(capsys, "--human", "check", gen("complete", "--n", "5"))
    assert code == 0 and "min_codegree: 3" in out.splitlines()


def test_classify_p12(gen, capsys):
    code, out, _ = run(capsys, "classify", gen("p12"))
    doc = json.loads(out)
    assert code == 0 and doc["euler"] == 1 and doc["orientable"] is False


def test_classify_not_closed(gen, capsys):
    code, _, _ = run(capsys, "classify", gen("complete", "--n", "5"))
    assert code == 1


@pytest.mark.parametrize(
    "name, args, target, code",
    [
        ("complete", ("--n", "8"), "sphere", 0),
        ("complete", ("--n", "7"), "torus", 0),
        ("tripartite", ("--n", "9"), "sphere", 1),
        ("single-tight", ("--n", "10"), "sphere", 1),
    ],
)
def test_search_exit_codes(gen, capsys, name, args, target, code):
    got, out, _ = run(capsys, "search", gen(name, *args), "--target", target)
    assert got == code
    assert json.loads(out)["verdict"] == {0: "found", 1: "none-certified"}[code]


def test_search_budget_exhausted(gen, capsys):
    code, out, _ = run(capsys, "--budget-nodes", "3", "search", gen("single-tight", "--n", "10"))
    assert code == 3 and json.loads(out)["verdict"] == "indeterminate"


def test_global_flags_after_subcommand(gen, capsys):
    code, _, _ = run(capsys, "search", gen("single-tight", "--n", "10"), "--budget-nodes", "3")
    assert code == 3


def test_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.3g"
    bad.write_text("4 1\n0 1 9\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "line 2" in err


def test_missing_file(capsys):
    assert run(capsys, "check", "/nonexistent.3g")[0] == 2


def test_random_requires_seed(capsys):
    code, _, err = run(capsys, "generate", "random", "--n", "6", "--p", "0.5")
    assert code == 2 and "--seed" in err
    code, out, _ = run(capsys, "--seed", "4", "generate", "random", "--n", "6", "--p", "0.5")
    assert code == 0
    assert run(capsys, "--seed", "4", "generate", "random", "--n", "6", "--p", "0.5")[1] == out


def test_matchpart(tmp_path, capsys):
    g = tmp_path / "star.g"
    g.write_text("6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n")
    assert run(capsys, "matchpart", str(g), "--eps", "0.5")[0] == 2
    code, out, _ = run(capsys, "--seed", "1", "matchpart", str(g), "--eps", "0.5")
    assert code == 0 and len(json.loads(out)["B"]) == 4


def test_census(gen, capsys):
    code, out, _ = run(capsys, "census", gen("complete", "--n", "8"), "--e", "0,1,2", "--f", "3,4,5", "--l-max", "2")
    doc = json.loads(out)
    assert code == 0 and doc["counts"] == {"1": 2, "2": 1}


def test_colour(gen, tmp_path, capsys):
    out_path = tmp_path / "c.3gc"
    code, out, _ = run(capsys, "colour", gen("two-component", "--n", "8"), "--threshold", "1", "-o", str(out_path))
    doc = json.loads(out)
    assert code == 0 and doc["merges"] == [] and doc["cross_touching"] == 0
    assert out_path.read_text().count(" G\n") > 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hypersurf", "generate", "complete", "--n", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip().endswith("1 2 3")
