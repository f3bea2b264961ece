import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from ltopology.cli import run_command
from ltopology.documents import document_from_dict, parse_document
from ltopology.spaces import is_t0

DATA = Path(__file__).parent / "data"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_check_sober_p3_fails_with_witness():
    code, out, _ = run("check", "sober", "--space", "P3")
    assert code == 1
    assert out.startswith("FAIL sober P3") and "witness:" in out


def test_check_t0_passes_on_sierpinski():
    assert run("check", "t0", "--space", "S3")[0] == 0
    code, out, _ = run("check", "t0", "--space", "F2/I2")
    assert code == 1 and '["a", "b"]' in out


def test_reflect_sober_emits_three_points():
    code, out, _ = run("reflect", "sober", "--space", "P3")
    assert code == 0
    wb = parse_document(out)
    assert wb.spaces["reflection"].n_points == 3
    assert set(wb.point_tables["reflection"]) == {"p0", "p1", "p2"}


def test_reflect_t0_and_generate():
    code, out, _ = run("reflect", "t0", "--space", "XYZ")
    assert code == 0 and parse_document(out).spaces["reflection"].n_points == 2
    code, out, _ = run("generate", "sierpinski", "--frame", "F3")
    assert code == 0 and len(parse_document(out).spaces["result"].opens) == 3
    code, out, _ = run("generate", "product", "--space", "S2", "--space", "S2")
    assert code == 0 and len(parse_document(out).spaces["result"].opens) == 6
    code, out, _ = run("generate", "subframe", "--frame", "D4", "--subset", "a")
    assert code == 0 and json.loads(out) == ["0", "a", "1"]


def test_closure_command():
    code, out, _ = run("closure", "--space", "F2/D2", "--subset", "a")
    assert code == 0 and json.loads(out)["closure"] == ["a"]
    code, out, _ = run("closure", "--space", "F2/I2", "--subset", "a")
    assert json.loads(out)["closure"] == ["a", "b"]


def test_check_invalid_frame_in_document(tmp_path):
    doc = tmp_path / "n5.json"
    doc.write_text(json.dumps({"frames": {"N5": {
        "elements": ["0", "a", "b", "c", "1"],
        "leq": [[True, True, True, True, True], [False, True, False, True, True],
                [False, False, True, False, True], [False, False, False, True, True],
                [False, False, False, False, True]]}}}))
    code, out, _ = run("check", "frame", "--frame", "N5", "--doc", str(doc))
    assert code == 1 and '["c", "a", "b"]' in out


def test_input_errors_and_caps():
    assert run("check", "t0", "--space", "nowhere")[0] == 2
    assert run("bogus")[0] == 2
    assert run("points", "--space", "D4/D2", "--max-maps", "3")[0] == 3


def test_verify_all_stock_fixtures():
    code, out, _ = run("verify", "all", "--frame", "F2", "--max-points", "3")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines if not line.startswith(" "))
    assert any("sierpinski-object" in line and "cases" in line for line in lines)


def test_verify_corrupted_fixture_gives_replayable_counterexample():
    code, out, _ = run("verify", "all", "--frame", "F2", "--doc", str(DATA / "corrupted_family.json"), "--json")
    assert code == 1
    reports = json.loads(out)
    flags = reports[0]
    assert flags["claim"] == "family-flags" and flags["status"] == "fail"
    payload = flags["counterexample"]
    replay = document_from_dict(payload["document"])
    (name, space), = replay.spaces.items()
    assert name == "I2" and not is_t0(space)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ltopology", "check", "sober", "--space", "S2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("PASS")


def test_check_invalid_topology_in_document(tmp_path):
    doc = tmp_path / "t.json"
    doc.write_text(json.dumps({"spaces": {"T": {"frame": "F2", "points": ["x", "y"],
                                                 "opens": [["0", "0"], ["1", "0"], ["0", "1"]]}}}))
    code, out, _ = run("check", "topology", "--space", "T", "--doc", str(doc))
    assert code == 1 and "missing join" in out
