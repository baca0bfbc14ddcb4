import json
import subprocess
import sys
from importlib import resources

import pytest

from innertwist.cli import main
from innertwist.examples import build_group_algebra_cqt
from innertwist.fileformat import parse_structure_file
from innertwist.report import Report
from innertwist.suite import SuiteOptions, run_suite, run_tasks

KZ3 = str(resources.files("innertwist") / "data" / "kz3.itw")
POINT = str(resources.files("innertwist") / "data" / "point.itw")


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# --- suite


def test_suite_checks_appear_once():
    rep = run_suite(build_group_algebra_cqt(3, 1))
    keys = [(r.anchor, r.instance) for r in rep]
    assert len(keys) == len(set(keys))
    assert rep.passed


def test_suite_order_is_independent_of_threads():
    s = parse_structure_file(KZ3)
    one = run_suite(s, SuiteOptions(threads=1)).to_json(include_elapsed=False)
    many = run_suite(s, SuiteOptions(threads=6)).to_json(include_elapsed=False)
    assert one == many


def test_skip_hopf_keeps_bialgebra_level_checks(sweedler):
    full = set(run_suite(sweedler).anchors())
    lean = set(run_suite(sweedler, SuiteOptions(skip_hopf=True)).anchors())
    assert lean < full
    for anchor in ("CQT1", "CQT2 r(m x B)", "CQT3 left", "rsm", "YBE"):
        assert anchor in lean
    for anchor in ("Lemma rrs (i)", "Theorem S^2", "Schauenburg", "antipode left"):
        assert anchor in full and anchor not in lean


def test_exceptions_become_failures():
    def boom():
        raise RuntimeError("kaput")
    ok = Report()
    ok.add(Report.boolean("fine", True))
    rep = run_tasks([("first", lambda: ok), ("second", boom)], threads=2)
    assert [r.status for r in rep] == ["pass", "fail"]
    assert "kaput" in rep.records[1].witness["reason"]


def test_thread_count_from_environment(monkeypatch):
    from innertwist.suite import thread_count
    monkeypatch.setenv("INNERTWIST_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("INNERTWIST_THREADS", "0")
    assert thread_count() == 1


# --- cli


def test_verify_kz3(capsys):
    code, out, _ = run(["verify", KZ3], capsys)
    assert code == 0
    assert out.strip().endswith("0 failed")


def test_verify_json_schema(capsys):
    code, out, _ = run(["verify", KZ3, "--json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    assert doc["summary"]["failed"] == 0
    assert {"anchor", "instance", "status", "witness", "elapsed"} <= set(doc["checks"][0])


def test_verify_corrupted_file_exits_one(tmp_path, capsys):
    text = open(KZ3).read().replace("1,0,0, 0,0,1, 0,1,0 ;", "1,0,0, 0,0,1, 0,1,1 ;", 1)
    bad = tmp_path / "bad.itw"
    bad.write_text(text)
    code, out, _ = run(["verify", str(bad), "--skip-hopf"], capsys)
    assert code == 1
    assert "[FAIL]" in out


def test_verify_parse_error_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.itw"
    bad.write_text("field n=3\nobject V { a }\nmorphism f: V -> V { 1, }\n")
    code, _, err = run(["verify", str(bad)], capsys)
    assert code == 2
    assert "line 3" in err


def test_verify_missing_file(capsys):
    code, _, err = run(["verify", "/nonexistent/file.itw"], capsys)
    assert code == 2 and "cannot read" in err


def test_verify_empty_file(tmp_path, capsys):
    empty = tmp_path / "empty.itw"
    empty.write_text("")
    code, out, _ = run(["verify", str(empty)], capsys)
    assert code == 0 and "0 checks" in out


def test_verify_with_degree_runs_tensor_checks(capsys):
    code, out, _ = run(["verify", POINT, "--degree", "3"], capsys)
    assert code == 0
    assert "degree-bounded Delta m" in out and "R_{1,1} braid relation" in out


@pytest.mark.parametrize("argv", [
    ["demo", "kz3"],
    ["demo", "kz", "n=4", "k=3"],
    ["demo", "sweedler", "--skip-hopf"],
    ["demo", "exterior", "alpha=-3"],
    ["demo", "kz-square"],
    ["demo", "exterior-square"],
])
def test_demos_pass(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0, out


def test_demo_json_is_deterministic(capsys):
    def strip(text):
        doc = json.loads(text)
        for c in doc["checks"]:
            c.pop("elapsed")
        return doc
    _, a, _ = run(["demo", "kz3", "--json"], capsys)
    _, b, _ = run(["demo", "kz3", "--json"], capsys)
    assert strip(a) == strip(b)


def test_demo_errors(capsys):
    assert run(["demo", "nope"], capsys)[0] == 2
    assert run(["demo", "kz", "n3"], capsys)[0] == 2
    assert run(["demo", "kz", "bogus=1"], capsys)[0] == 2


def test_oracle_cqt(capsys):
    code, out, _ = run(["oracle", "cqt", KZ3, "--support", "all"], capsys)
    assert code == 0
    assert out.startswith("kZ3: 3 CQT candidate(s)")


def test_oracle_cqt_json(capsys):
    code, out, _ = run(["oracle", "cqt", KZ3, "--json"], capsys)
    doc = json.loads(out)
    assert doc["schema"] == 1 and len(doc["candidates"]["kZ3"]) == 3


def test_tensoralg_table(capsys):
    code, out, _ = run(["tensoralg", POINT, "--degree", "4", "--json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["failed"] == 0
    table = {(row["i"], row["j"]): row["r"]["p*" * (row["i"] + row["j"] - 1) + "p"]
             for row in doc["tables"]["C"]}
    assert table[(1, 1)] == "z" and table[(2, 2)] == "z" and table[(1, 2)] == "-1 - z"
    assert table[(3, 1)] == "1"


def test_tensoralg_needs_a_seed(capsys):
    assert run(["tensoralg", KZ3, "--degree", "3"], capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "innertwist", "demo", "kz", "n=2", "k=1"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert "0 failed" in proc.stdout
