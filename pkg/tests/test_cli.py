from __future__ import annotations

import json
import subprocess
import sys

import pytest

from qiso.cli import SCHEMA, SuiteConfig, build_parser, emit, main, report_document, run
from qiso.report import Report


def test_somu3_suite():
    rep = run(SuiteConfig("somu3"))
    assert rep.passed
    assert sum(1 for ch in rep if ch.id.startswith("embedding/relation")) >= 18


def test_su2_core_degree_zero_vacuous():
    rep = run(SuiteConfig("su2-core", degree=0))
    assert rep.passed
    assert rep["random associativity checks"].params["count"] == 0


def test_atheta_suite():
    rep = run(SuiteConfig("qiso-atheta"))
    assert rep.passed
    assert rep.meta["commutative_blocks"] == ["000", "011", "101", "110"]


def test_checks_sorted():
    rep = run(SuiteConfig("haar", degree=2))
    ids = [ch.id for ch in rep]
    assert ids == sorted(ids)


@pytest.mark.parametrize("kw", [dict(mu=1.5), dict(c=-1.0), dict(t=0.5, c=0.3), dict(nmax=2),
                                dict(jtilde="left"), dict(tol=0.0), dict(degree=-1)])
def test_invalid_parameters(kw):
    with pytest.raises(ValueError):
        run(SuiteConfig("podles-numeric", **kw))


def test_unknown_suite():
    with pytest.raises(ValueError):
        SuiteConfig("nope").validate()


def test_json_roundtrip_and_counts():
    cfg = SuiteConfig("rieffel-torus")
    text = emit(run(cfg), cfg, "json")
    doc = json.loads(text)
    assert doc["schema"] == SCHEMA
    assert json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n" == text
    s = doc["summary"]
    assert s["total"] == len(doc["checks"])
    assert s["passed"] == sum(1 for c in doc["checks"] if c["verdict"] == "pass")
    assert s["failed"] == s["total"] - s["passed"]


def test_failing_check_record():
    cfg = SuiteConfig("somu3")
    rep = Report("somu3")
    rep.add("relation: injected G* G = N^2", False, "SO_mu(3) relation list", "normal form nonzero")
    doc = report_document(rep, cfg)
    (rec,) = doc["checks"]
    assert rec["verdict"] == "fail"
    assert rec["paper_ref"] == "SO_mu(3) relation list"
    assert rec["reproduce"].startswith("qiso --suite somu3")
    text = emit(rep, cfg, "text")
    assert "FAIL" in text and "reproduce:" in text


def test_reproduce_line_carries_parameters():
    cfg = SuiteConfig("qiso-cp", theta=0.25, nmax=20, jtilde="plus-minus")
    line = cfg.command_line()
    assert "--theta 0.25" in line and "--nmax 20" in line and "--jtilde plus-minus" in line
    ns = build_parser().parse_args(line.split()[1:])
    assert ns.theta == 0.25 and ns.nmax == 20


def test_main_exit_status(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["--suite", "rieffel-torus", "--format", "json", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["suite"] == "rieffel-torus"
    assert main(["--suite", "haar", "--degree", "1"]) == 0
    assert "suite haar" in capsys.readouterr().out


def test_main_rejects_bad_flag():
    with pytest.raises(SystemExit) as exc:
        main(["--suite", "podles-numeric", "--mu", "2"])
    assert exc.value.code == 2


def test_module_entry_point_nonzero_on_failure(tmp_path):
    out = tmp_path / "w.json"
    r = subprocess.run([sys.executable, "-m", "qiso", "--suite", "wang-af", "--format", "json",
                        "--out", str(out)], capture_output=True, text=True)
    assert r.returncode == 1
    doc = json.loads(out.read_text())
    bad = [c for c in doc["checks"] if c["verdict"] == "fail"]
    assert [c["id"] for c in bad] == ["qperm4/row orthogonality reduces"]
    assert "reproduce" in bad[0]
