import csv
import io
import json
import subprocess
import sys

import pytest

from semikron import __version__
from semikron.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_isn_json(capsys):
    code, out, err = run(capsys, "isn", "--n", "4", "--lambda", "[1]", "--mu", "[1]")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert set(doc) == {"request", "results", "meta"}
    assert doc["results"] == {"[1]": 1, "[2]": 1, "[1,1]": 1}
    assert doc["request"]["n"] == 4
    assert doc["meta"]["version"] == __version__
    assert isinstance(doc["meta"]["runtime_ms"], (int, float))


def test_no_timing_is_byte_stable(capsys):
    argv = ("dual", "--n", "3", "--semigroup", "pistar", "--lambda", "[1]", "--mu", "[1]", "--no-timing")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.loads(first)["meta"]["runtime_ms"] is None


def test_dual_matches_engine(capsys):
    code, out, _ = run(capsys, "dual", "--n", "2", "--semigroup", "istar", "--lambda", "[2]", "--mu", "[2]")
    assert code == 0
    assert json.loads(out)["results"] == {"[2]": 1}


def test_qtable_csv(capsys):
    code, out, _ = run(capsys, "qtable", "--k", "3", "--l", "3")
    assert code == 0
    rows = {int(r["m"]): (int(r["p"]), int(r["q"])) for r in csv.DictReader(io.StringIO(out))}
    assert rows[9] == (1, 1)
    assert rows[3] == (6, 1)


def test_qtable_bordered_json(capsys):
    code, out, _ = run(capsys, "qtable", "--k", "2", "--l", "2", "--bordered", "--format", "json")
    assert code == 0
    results = json.loads(out)["results"]
    assert {"m": 2, "p": 2, "q": 1} in results


def test_bcoef_and_stability(capsys):
    _, out, _ = run(capsys, "bcoef", "--lambda", "[2]", "--mu", "[2]", "--nu", "[1,1,1,1]")
    assert json.loads(out)["results"] == {"b": 1}
    _, out, _ = run(capsys, "stability", "--lambda", "[1,1]", "--mu", "[1,1]", "--nu", "[2,2]", "--amax", "2")
    results = json.loads(out)["results"]
    assert [e["a"] for e in results["sequence"]] == [0, 1, 2]
    assert "constant_from" in results


def test_pdiag_demo(capsys):
    code, out, _ = run(capsys, "pdiag-demo")
    assert code == 0
    assert "P_2 has 15 diagrams." in out
    assert "Cell filtration does not exist." in out
    code, out, _ = run(capsys, "pdiag-demo", "--format", "json", "--no-timing")
    results = json.loads(out)["results"]
    assert code == 0 and results["cell_filtration"] is False


def test_oracle_and_verify(capsys):
    code, out, _ = run(capsys, "oracle", "--semigroup", "isn", "--n", "2", "--lambda", "[1]", "--mu", "[1]")
    assert code == 0
    assert json.loads(out)["results"] == {"[1]": 1, "[2]": 1, "[1,1]": 1}
    code, out, _ = run(capsys, "oracle", "--semigroup", "istar", "--n", "3", "--verify")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--all", "--max-n", "3")
    assert code == 0
    assert json.loads(out)["results"]["passed"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ("isn", "--n", "9", "--lambda", "[1]", "--mu", "[1]"),
        ("isn", "--n", "2", "--lambda", "[1", "--mu", "[1]"),
        ("isn", "--n", "2", "--lambda", "[3]", "--mu", "[1]"),
        ("qtable", "--k", "9", "--l", "2"),
        ("bcoef", "--lambda", "[2]", "--mu", "[2]", "--nu", "[3]"),
        ("oracle", "--semigroup", "isn", "--n", "5", "--lambda", "[1]", "--mu", "[1]"),
        ("nonsense",),
        ("isn", "--n"),
    ],
)
def test_errors_are_one_line(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.count("\n") == 1 and err.startswith("semikron: error:")


def test_thread_setting(capsys, monkeypatch):
    argv = ("verify", "--semigroup", "istar", "--max-n", "3", "--no-timing")
    monkeypatch.setenv("SEMIKRON_THREADS", "1")
    _, serial, _ = run(capsys, *argv)
    monkeypatch.setenv("SEMIKRON_THREADS", "4")
    _, threaded, _ = run(capsys, *argv)
    assert serial == threaded
    monkeypatch.setenv("SEMIKRON_THREADS", "many")
    code, _, err = run(capsys, *argv)
    assert code == 2 and "SEMIKRON_THREADS" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "semikron", "bcoef", "--lambda", "[1]", "--mu", "[1]", "--nu", "[1]", "--format", "csv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[-1].endswith("1")


@pytest.mark.parametrize(
    "argv",
    [
        ("isn", "--n", "2", "--lambda", "[1]", "--mu", "[1]"),
        ("dual", "--n", "2", "--semigroup", "pistar", "--lambda", "[1]", "--mu", "[1]"),
        ("qtable", "--k", "2", "--l", "2"),
        ("bcoef", "--lambda", "[2]", "--mu", "[2]", "--nu", "[2,2]"),
        ("stability", "--lambda", "[1]", "--mu", "[1]", "--nu", "[1]", "--amax", "2"),
        ("pdiag-demo",),
        ("oracle", "--semigroup", "isn", "--n", "2", "--verify"),
        ("verify", "--semigroup", "isn", "--max-n", "2"),
    ],
)
def test_every_command_supports_every_format(capsys, argv):
    for fmt in ("json", "csv", "text"):
        code, out, err = run(capsys, *argv, "--format", fmt, "--no-timing")
        assert code == 0 and err == "" and out.strip()
        if fmt == "csv":
            rows = list(csv.reader(io.StringIO(out)))
            assert len(rows) >= 2 and len({len(r) for r in rows}) == 1
