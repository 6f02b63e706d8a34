import io
import json

import jsonschema
import numpy as np
import pytest

from fierz_md.cli import REPORT_SCHEMA, dumps, run, to_csv


def _run(argv):
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, out.getvalue()


def _json(argv):
    code, text = _run(argv)
    data = json.loads(text)
    jsonschema.validate(data, REPORT_SCHEMA)
    return code, data


def test_verify_dirac_suite_passes():
    code, data = _json(["verify", "--suite", "dirac", "--points", "10"])
    assert code == 0 and data["summary"]["ok"]
    assert data["summary"]["failed"] == 0 and data["summary"]["total"] == len(data["checks"])


def test_verify_both_representations():
    code, data = _json(["verify", "--suite", "fierz", "--rep", "both", "--points", "50"])
    assert code == 0
    names = {c["name"].split("/")[0] for c in data["checks"]}
    assert names == {"dirac", "chiral"}


def test_solve_p1310_reference_member():
    code, data = _json(["solve-p1310", "--lambda", "1", "--q", "1", "--m", "0",
                        "--ja", "1", "--jb", "1", "--ka", "0"])
    assert code == 0
    kds = sorted(s["kd"] for s in data["results"]["solutions"])
    assert kds == pytest.approx([-np.sqrt(3), np.sqrt(3)], abs=1e-15)


def test_solve_p1310_infeasible_member_reports_no_solutions():
    code, data = _json(["solve-p1310", "--ja", "1", "--jb", "1", "--ka", "1"])
    assert code == 0
    assert data["results"]["feasible"] is False and data["results"]["solutions"] == []


def test_reduce_p11_2_declares_trivial_solution():
    code, data = _json(["reduce", "--group", "p11_2"])
    assert code == 0 and data["results"]["trivial"] is True
    assert all(c["residual"] == 0 for c in data["checks"])


@pytest.mark.parametrize("group", ["spherical", "cylindrical", "p13_10"])
def test_reduce_groups_pass(group):
    code, data = _json(["reduce", "--group", group, "--points", "5"])
    assert code == 0, [c for c in data["checks"] if not c["passed"]]


def test_lie_check_all_groups():
    code, data = _json(["lie-check", "--group", "all", "--points", "10"])
    assert code == 0 and len(data["checks"]) == 8


def test_invert_and_residual_plane_wave():
    for cmd in ("invert", "residual"):
        code, _ = _json([cmd, "--points", "5"])
        assert code == 0


def test_invert_polynomial_phase_field():
    spec = {"polynomial_phase": {"linear": [0.1, 0.2, -0.3, 0.4], "cubic": [0.05, 0, 0, 0.02]}}
    code, data = _json(["invert", "--points", "5", "--field", json.dumps(spec)])
    assert code == 0 and data["summary"]["passed"] == 3


def test_reduce_with_inconsistent_profile_table_fails_checks():
    spec = {"spherical": {"ja": [[0, 0, 2.0]], "jb": 0.0, "sigma": 1.0, "w": 0.0}}
    code, data = _json(["reduce", "--group", "spherical", "--points", "3",
                        "--field", json.dumps(spec)])
    assert code == 1
    failed = {c["name"] for c in data["checks"] if not c["passed"]}
    assert "branch+1/fierz" in failed


def test_reduce_with_consistent_profile_table_passes():
    # ja = 2, jb = 0, sigma = 2: ja^2 - r^2 jb^2 = sigma^2
    spec = {"spherical": {"ja": 2.0, "jb": 0.0, "sigma": 2.0, "w": 0.0}}
    code, data = _json(["reduce", "--group", "spherical", "--points", "3", "--branch", "-1",
                        "--field", json.dumps(spec)])
    assert code == 0, [c for c in data["checks"] if not c["passed"]]


def test_determinism_under_fixed_seed():
    argv = ["reduce", "--group", "cylindrical", "--points", "4", "--seed", "3"]
    assert _run(argv)[1] == _run(argv)[1]
    a = _run(["verify", "--suite", "fierz", "--seed", "1", "--points", "20"])[1]
    b = _run(["verify", "--suite", "fierz", "--seed", "2", "--points", "20"])[1]
    assert a != b


def test_csv_output():
    code, text = _run(["verify", "--suite", "fierz", "--points", "20", "--format", "csv"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "name,residual,tolerance,passed"
    assert all(line.endswith("True") for line in lines[1:])


def test_output_file_and_environment_directory(tmp_path, monkeypatch):
    monkeypatch.setenv("FIERZ_MD_OUTPUT_DIR", str(tmp_path))
    code, text = _run(["solve-p1310", "--output", "report.json"])
    assert code == 0 and text == ""
    jsonschema.validate(json.loads((tmp_path / "report.json").read_text()), REPORT_SCHEMA)


def test_config_file_and_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"ja": 1.0, "jb": 1.0, "ka": 0.0, "q": 1.0, "points": 7}))
    code, data = _json(["solve-p1310", "--config", str(cfg), "--points", "3"])
    assert code == 0
    assert data["provenance"]["config"]["points"] == 3
    assert data["provenance"]["config"]["ja"] == 1.0


@pytest.mark.parametrize("argv", [
    ["reduce"],                                                     # missing group
    ["solve-p1310", "--ja", "0"],                                   # ja = 0
    ["solve-p1310", "--ja", "1", "--jb", "-1"],                     # sigma imaginary
    ["solve-p1310", "--q", "0"],                                    # q = 0
    ["invert", "--m", "0"],                                         # plane wave needs m > 0
    ["invert", "--field", '{"bogus": {}}'],                         # unsupported field spec
    ["lie-check", "--group", "p11_2", "--phi", "1.5707963267948966"],
    ["verify", "--points", "0"],
    ["nonsense"],
    ["verify", "--suite", "everything"],
])
def test_invalid_inputs_exit_2(argv):
    assert _run(argv)[0] == 2


def test_bad_config_files_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert _run(["verify", "--config", str(bad)])[0] == 2
    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"colour": "blue"}))
    assert _run(["verify", "--config", str(unknown)])[0] == 2
    mismatch = tmp_path / "mismatch.json"
    mismatch.write_text(json.dumps({"command": "invert"}))
    assert _run(["verify", "--config", str(mismatch)])[0] == 2


def test_failing_check_exits_1(tmp_path):
    # a polynomial profile that violates the Fierz identity cannot pass
    spec = {"cylindrical": {k: 1.0 for k in ("ja", "jb", "jc", "jd", "ka", "kb", "kc", "kd")}
            | {"sigma": 1.0, "w": 0.0}}
    code, _ = _run(["reduce", "--group", "cylindrical", "--points", "2", "--field", json.dumps(spec)])
    assert code == 1


def test_dumps_uses_seventeen_significant_digits():
    text = dumps({"x": 0.1, "y": [1.0, float("nan")], "z": None, "b": True})
    data = json.loads(text)
    assert data["x"] == 0.1 and "0.10000000000000001" in text
    assert data["y"] == [1.0, None] and data["b"] is True


def test_to_csv_blank_for_missing_residual():
    text = to_csv({"checks": [{"name": "a", "residual": None, "tolerance": 1.0, "passed": True}]})
    assert text.splitlines()[1] == "a,,1,True"
