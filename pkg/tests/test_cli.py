import io
import json

import pytest

from versals.cli import main
from versals.cli.main import EXIT_COUNTEREXAMPLE, EXIT_ERROR, EXIT_OK

C4_TEXT = "4 4\n0 1\n1 2\n2 3\n0 3\n"


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "cycle.hg"
    path.write_text(C4_TEXT)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "c4")
    assert code == EXIT_OK
    assert out == C4_TEXT

    code, out, _ = run(capsys, "gen", "star", "--r", "3", "--m", "4")
    assert out.splitlines()[0] == "6 4"
    assert out.splitlines()[1] == "0 1 2"

    code, out, _ = run(capsys, "gen", "binary-star", "--r", "3", "--s", "3")
    assert out.splitlines()[0] == "6 6"


def test_gen_needs_parameters(capsys):
    code, out, err = run(capsys, "gen", "star", "--r", "3")
    assert code == EXIT_ERROR
    assert out == ""
    assert err.startswith("error: gen star needs --m")


def test_count_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(C4_TEXT))
    code, out, _ = run(capsys, "count", "-")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["total"] == 4
    assert payload["null_total"] == 4
    assert payload["q"] == 0
    assert payload["edges"][3] == {
        "edge": 3,
        "members": [0, 3],
        "versals": 1,
        "null_versals": 1,
        "free": 0,
    }


def test_count_output_is_byte_stable(capsys, c4_file):
    _, first, _ = run(capsys, "count", c4_file)
    _, second, _ = run(capsys, "count", c4_file)
    assert first == second


def test_classify(capsys, c4_file):
    code, out, _ = run(capsys, "classify", c4_file)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["kind"] == "binary_star"
    assert payload["is_c4"]


def test_list(capsys, tmp_path):
    path = tmp_path / "path.hg"
    path.write_text("3 2\n0 1\n1 2\n")
    code, out, _ = run(capsys, "list", str(path), "--edge", "0")
    assert code == EXIT_OK
    versals = json.loads(out)["versals"]
    assert [v["set"] for v in versals] == [[2], [1, 2]]
    assert [v["null"] for v in versals] == [True, False]

    _, out, _ = run(capsys, "list", str(path), "--null-only")
    assert len(json.loads(out)["versals"]) == 2

    code, _, err = run(capsys, "list", str(path), "--edge", "2")
    assert code == EXIT_ERROR
    assert "edge index 2" in err


def test_parse_errors_exit_with_two(capsys, tmp_path):
    path = tmp_path / "bad.hg"
    path.write_text("3 2\n0 1\n0 1 2\n")
    code, out, err = run(capsys, "count", str(path))
    assert code == EXIT_ERROR
    assert out == ""
    assert err.startswith("error: line 3:")

    code, _, err = run(capsys, "count", str(tmp_path / "missing.hg"))
    assert code == EXIT_ERROR


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "main-theorem", "--n", "4")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["instances"] == 166
    assert report["exception_total"] == 5
    assert report["counterexample_total"] == 0
    assert "seconds" not in report


def test_verify_reports_counterexamples(capsys):
    code, out, _ = run(capsys, "verify", "theorem2", "--n", "4", "--r", "2", "--timing")
    assert code == EXIT_COUNTEREXAMPLE
    report = json.loads(out)
    assert report["counterexample_total"] == 12
    assert "seconds" in report


def test_verify_several_claims_prints_a_list(capsys):
    code, out, _ = run(capsys, "verify", "lemma3,lemma4", "--n", "3")
    assert code == EXIT_OK
    assert [r["claim"] for r in json.loads(out)] == ["lemma3", "lemma4"]


def test_verify_single_file(capsys, c4_file):
    code, out, _ = run(capsys, "verify", "main_theorem", "--file", c4_file)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["scope"] == "single(n=4,m=4)"
    assert report["exceptions"][0]["detail"]["family"] == "c4"


def test_verify_is_independent_of_jobs(capsys):
    args = ["verify", "lemma1", "--random", "--n", "5", "--n-max", "9", "--uniform",
            "--samples", "60", "--seed", "2"]
    _, serial, _ = run(capsys, *args)
    _, parallel, _ = run(capsys, *args, "--jobs", "2")
    assert serial == parallel


def test_verify_configuration_errors(capsys):
    code, _, err = run(capsys, "verify", "lemma1", "--n", "6")
    assert code == EXIT_ERROR
    assert err.startswith("error:")

    code, _, _ = run(capsys, "verify", "no-such-claim", "--n", "3")
    assert code == EXIT_ERROR


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "main-theorem", "--n", "x"],
        ["verify", "theorem2", "--n", "4", "--r", "two"],
    ],
)
def test_verify_rejects_non_integer_parameters(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_ERROR
    assert out == ""
    assert err.startswith("error:")
    assert len(err.strip().splitlines()) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "hexagon"],
        ["prob", "cycle.hg"],
        ["count"],
        ["verify", "lemma1", "--jobs", "many"],
        [],
    ],
)
def test_usage_errors_are_one_line(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_ERROR
    assert out == ""
    assert err.startswith("error: versals")
    assert len(err.strip().splitlines()) == 1


def test_prob(capsys, c4_file):
    code, out, _ = run(capsys, "prob", c4_file, "--k", "2", "--exact")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["probability"] == "1/4"
    assert payload["versals"] == 4

    _, out, _ = run(capsys, "prob", c4_file, "--k", "2", "--samples", "20000", "--seed", "4")
    payload = json.loads(out)
    assert payload["mode"] == "mc"
    assert abs(payload["estimate"] - 0.25) <= 3 * payload["stderr"]


def test_verbose_logs_to_stderr(capsys, c4_file):
    code, out, err = run(capsys, "-v", "count", c4_file)
    assert code == EXIT_OK
    assert "Census:" in err
    assert json.loads(out)["total"] == 4
