import json
from pathlib import Path

import pytest

from config.config import get_settings
from main import run
from scripts.enumerate_fixtures import FIXTURES

DIE6 = str(FIXTURES / "die6.json")
SKEW = str(FIXTURES / "skew.json")


def _invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


@pytest.fixture
def problem_file(tmp_path):
    def write(**raw) -> str:
        path = Path(tmp_path) / "problem.json"
        path.write_text(json.dumps(raw), encoding="utf-8")
        return str(path)

    return write


def test_minimize_exact_skew(capsys):
    code, doc = _invoke(capsys, "minimize", "-i", SKEW, "--method", "exact")
    assert code == 0
    assert doc["coefficients"] == pytest.approx([1.0, 0.6], abs=1e-15)
    assert doc["converged"] is True
    assert doc["energy"] == pytest.approx(-0.34)
    assert doc["closed_form_max_abs_diff"] <= 1e-15
    assert doc["trace"] is None


def test_minimize_gd_agrees_with_exact(capsys):
    for fixture in (DIE6, SKEW):
        _, exact = _invoke(capsys, "minimize", "-i", fixture, "--method", "exact")
        code, gd = _invoke(capsys, "minimize", "-i", fixture, "--method", "gd", "--trace")
        assert code == 0
        assert gd["coefficients"] == pytest.approx(exact["coefficients"], abs=1e-8)
        assert len(gd["trace"]) == gd["iterations"] + 1


def test_minimize_non_convergence_exit_code(capsys, problem_file):
    path = problem_file(
        weights=[0.7, 0.2, 0.1], partition=[[0], [1], [2]], event=[0, 1, 2]
    )
    code, doc = _invoke(capsys, "minimize", "-i", path, "--method", "gd", "--max-iters", "1")
    assert code == 2
    assert doc["converged"] is False


def test_total_prob_die6(capsys):
    code, doc = _invoke(capsys, "total-prob", "-i", DIE6)
    assert code == 0
    assert doc["p_event"] == 0.5
    assert doc["total_probability"] == pytest.approx(doc["p_event"], abs=1e-12)
    assert [b["cond_prob"] for b in doc["per_block"]] == pytest.approx([0.5] * 3)
    assert [b["outcomes"] for b in doc["per_block"]] == [
        ["one", "two"],
        ["three", "four"],
        ["five", "six"],
    ]


def test_total_prob_needs_event(capsys, problem_file):
    path = problem_file(weights=[0.5, 0.5], partition=[[0], [1]], target=[1.0, 2.0])
    code, doc = _invoke(capsys, "total-prob", "-i", path)
    assert code == 1
    assert doc is None


def test_cond_exp_with_target(capsys, problem_file):
    path = problem_file(
        weights=[0.25, 0.25, 0.5], partition=[[0, 1], [2]], target=[1.0, 3.0, -1.0]
    )
    code, doc = _invoke(capsys, "cond-exp", "-i", path)
    assert code == 0
    assert doc["coefficients"] == pytest.approx([2.0, -1.0])
    verified = doc["verified"]
    assert verified["measurable"] and verified["integrable"]
    assert verified["property_iii_max_violation"] <= 1e-12
    assert verified["partial"] is False


@pytest.mark.parametrize(
    "raw",
    [
        {"weights": [0.5, -0.1, 0.6], "partition": [[0, 1, 2]], "event": [0]},
        {"weights": [0.5, 0.5], "partition": [[0], [0, 1]], "event": [0]},
        {"weights": [0.5, 0.5], "partition": [[0]], "event": [0]},
        {"weights": [0.5, 0.5], "partition": [[0], [1]], "event": [2]},
        {"weights": [0.5, 0.5], "partition": [[0], [1]], "event": [0], "target": [1, 2]},
        {"weights": [0.5, 0.5], "partition": [[0], [1]]},
        {"weights": "heavy", "partition": [[0], [1]], "event": [0]},
    ],
)
def test_invalid_problem_files(capsys, problem_file, raw):
    code, doc = _invoke(capsys, "cond-exp", "-i", problem_file(**raw))
    assert code == 1
    assert doc is None


def test_unreadable_input(capsys, tmp_path):
    broken = Path(tmp_path) / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert _invoke(capsys, "total-prob", "-i", str(broken))[0] == 1
    assert _invoke(capsys, "total-prob", "-i", str(Path(tmp_path) / "missing.json"))[0] == 1


def test_bad_arguments_exit_one(capsys):
    assert run(["minimize", "-i", SKEW, "--method", "newton"]) == 1
    assert run(["no-such-command"]) == 1
    assert run(["check", "--suite", "clarkson", "--trials", "10", "--p", "0.5"]) == 1
    capsys.readouterr()


def test_check_clarkson_at_two(capsys):
    code, doc = _invoke(
        capsys, "check", "--suite", "clarkson", "--trials", "1000", "--seed", "7", "--p", "2"
    )
    assert code == 0
    assert doc["failures"] == 0
    assert doc["first_failure"] is None
    assert doc["trials"] == 1000


def test_check_is_deterministic(capsys):
    argv = ["check", "--suite", "holder", "--trials", "50", "--seed", "11"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first


def test_check_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PROBVAR_SEED", "42")
    get_settings.cache_clear()
    try:
        code, doc = _invoke(capsys, "check", "--suite", "total-prob", "--trials", "5")
    finally:
        get_settings.cache_clear()
    assert code == 0
    assert doc["seed"] == 42


def test_output_floats_round_trip(capsys):
    run(["total-prob", "-i", DIE6])
    out = capsys.readouterr().out
    assert out.endswith("\n")
    assert json.loads(out)["p_event"] == 0.5
    assert '"p_event": 0.5' in out or '"p_event":0.5' in out


def test_minimize_gd_agrees_with_exact_on_thin_block(capsys, problem_file):
    path = problem_file(weights=[0.999, 0.001], partition=[[0], [1]], event=[1])
    code, doc = _invoke(capsys, "minimize", "-i", path, "--method", "gd")
    assert code == 0
    assert doc["converged"] is True
    assert doc["closed_form_max_abs_diff"] <= 1e-8


def test_minimize_rejects_unstable_step(capsys):
    code, doc = _invoke(
        capsys, "minimize", "-i", SKEW, "--method", "gd", "--step", "5", "--max-iters", "100000"
    )
    assert code == 1
    assert doc is None


def test_total_prob_names_unlabeled_outcomes_by_index(capsys):
    code, doc = _invoke(capsys, "total-prob", "-i", SKEW)
    assert code == 0
    assert [b["outcomes"] for b in doc["per_block"]] == [["w0"], ["w1", "w2"]]
