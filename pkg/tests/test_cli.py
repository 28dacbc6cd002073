"""End-to-end command line behavior: exit codes, formats, artifacts."""
import json

import pytest

from planarops import reports
from planarops.cli import main


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_axioms_passes(capsys):
    code, out = run(capsys, ["axioms", "--max-arity", "2"])
    assert code == 0
    assert "[PASS] axioms.delta_squared" in out
    assert "5/5 checks passed" in out


def test_usage_errors_exit_2(capsys):
    for argv in (["axioms", "--max-arity", "9"], ["homology", "7"],
                 ["homology"], [], ["bogus"], ["axioms", "--format", "yaml"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        capsys.readouterr()  # drop argparse noise


def test_homology_text_output(capsys):
    code, out = run(capsys, ["homology", "4"])
    assert code == 0
    assert "homology.arity4" in out
    assert "[1, 6, 11, 6]" in out


def test_homology_json_document(capsys):
    code, out = run(capsys, ["homology", "3", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["tool_version"] == reports.TOOL_VERSION
    assert doc["command"] == "homology"
    assert doc["seed"] == 1
    assert "verdict" not in doc
    [check] = doc["checks"]
    assert check["status"] == "pass"
    assert check["details"]["betti"] == [1, 3, 2]
    assert check["details"]["reference"] == [1, 3, 2]
    assert "duration_ms" not in check


def test_homology_arity5_has_no_reference(capsys):
    code, out = run(capsys, ["homology", "5", "--format", "json"])
    assert code == 0
    [check] = json.loads(out)["checks"]
    assert check["details"]["betti"] == [1, 10, 35, 50, 24]
    assert check["details"]["reference"] is None


def test_model_runs_nineteen_checks(capsys):
    code, out = run(capsys, ["model", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["checks"]) == 19
    ids = [c["check_id"] for c in doc["checks"]]
    assert ids[0] == "gerstenhaber.associativity"
    assert ids[5] == "model.arity3.dim0"
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_obstruction_json_is_byte_stable(capsys):
    argv = ["obstruction", "--format", "json", "--trials", "3", "--seed", "9"]
    code1, out1 = run(capsys, argv)
    code2, out2 = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["verdict"] == "NOT_FORMAL"
    assert doc["seed"] == 9
    cert = doc["checks"][4]["details"]["certificate"]
    assert len(cert["pi_dC_terms"]) == 24
    assert cert["span_rank"] == 4


def test_json_round_trips_canonically(capsys):
    _, out = run(capsys, ["model", "--format", "json"])
    assert reports.dumps_canonical(json.loads(out)) == out


def test_all_runs_every_suite(capsys):
    code, out = run(capsys, ["all", "--format", "json", "--trials", "2",
                             "--max-arity", "3"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["checks"]) == 33
    assert doc["verdict"] == "NOT_FORMAL"
    ids = [c["check_id"] for c in doc["checks"]]
    assert ids[:5] == ["axioms.parallel", "axioms.sequential", "axioms.unit",
                       "axioms.delta_squared", "axioms.leibniz"]
    assert ids[5:8] == ["homology.arity2", "homology.arity3", "homology.arity4"]
    assert ids[-1] == "obstruction.lift_invariance"
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_out_writes_the_same_bytes(tmp_path, capsys):
    target = tmp_path / "cert.json"
    argv = ["obstruction", "--format", "json", "--trials", "2"]
    code, direct = run(capsys, argv)
    code2, msg = run(capsys, argv + ["--out", str(target)])
    assert code == code2 == 0
    assert f"wrote {target}" in msg
    assert target.read_text() == direct


def test_report_writes_artifacts(tmp_path, capsys):
    out_dir = tmp_path / "rep"
    code, out = run(capsys, ["report", "--out-dir", str(out_dir),
                             "--trials", "2", "--max-arity", "2"])
    assert code == 0
    names = {p.name for p in out_dir.iterdir()}
    assert names == {"checks.csv", "certificate.json", "betti.png",
                     "boundary_spy.png", "obstruction_rows.png"}
    csv_lines = (out_dir / "checks.csv").read_text().strip().splitlines()
    assert csv_lines[0] == "check_id,status,claim"
    assert len(csv_lines) == 34
    doc = json.loads((out_dir / "certificate.json").read_text())
    assert doc["command"] == "report"
    assert doc["verdict"] == "NOT_FORMAL"
    assert len(doc["checks"]) == 33
    for name in ("betti.png", "boundary_spy.png", "obstruction_rows.png"):
        blob = (out_dir / name).read_bytes()
        assert blob[:8] == b"\x89PNG\r\n\x1a\n"
    assert "33/33 checks passed" in out
    assert f"wrote {out_dir / 'checks.csv'}" in out
