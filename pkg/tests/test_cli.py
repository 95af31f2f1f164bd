import json

import numpy as np
import pytest

from fusionframe.cli import expand_seeds, limiting_geometry, load_preset, main
from fusionframe.core import OperatorFrame, ffp, is_fusion_frame, is_tight
from fusionframe.io import read_frame, read_trace_csv, write_frame
from tests.conftest import coordinate_frame

def test_generate_writes_valid_frame(tmp_path, capsys):
    out = tmp_path / "frame.json"
    code = main(["generate", "--field", "real", "--d", "3", "--ranks", "1,1,2", "--seed", "7", "--out", str(out)])
    assert code == 0
    frame = read_frame(out)
    assert is_fusion_frame(frame)
    assert ffp(frame) >= 16 / 3
    assert "Welch bound" in capsys.readouterr().out
    assert (tmp_path / "frame.manifest.json").exists()

def test_generate_is_deterministic(tmp_path):
    args = ["generate", "--field", "complex", "--d", "3", "--ranks", "1,2", "--seed", "3"]
    assert main(args + ["--out", str(tmp_path / "a.json")]) == 0
    assert main(args + ["--out", str(tmp_path / "b.json")]) == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()

def test_generate_rejects_too_few_dimensions(tmp_path):
    out = tmp_path / "x.json"
    assert main(["generate", "--d", "3", "--ranks", "1,1", "--seed", "0", "--out", str(out)]) == 2
    assert not out.exists()

def test_generate_rejects_impossible_shape(tmp_path):
    assert main(["generate", "--d", "3", "--ranks", "5", "--out", str(tmp_path / "x.json")]) == 2

def test_unknown_flag_is_an_input_error():
    assert main(["generate", "--bogus"]) == 2

def test_tighten_reaches_welch_bound(tmp_path):
    out = tmp_path / "tight.json"
    code = main(["tighten", "--d", "2", "--ranks", "1,1,1,1", "--seed", "1", "--out", str(out)])
    assert code == 0
    frame = read_frame(out)
    assert ffp(frame) == pytest.approx(8.0, abs=1e-6)
    assert is_tight(frame)
    records = read_trace_csv(tmp_path / "tight.trace.csv")
    assert records[0].iter == 0
    assert records[-1].ffp == pytest.approx(8.0, abs=1e-6)

def test_tighten_two_lines_and_a_plane(tmp_path):
    out = tmp_path / "final.json"
    trace = tmp_path / "trace.csv"
    code = main(["tighten", "--d", "3", "--ranks", "1,1,2", "--field", "real", "--seed", "0",
                 "--out", str(out), "--trace", str(trace)])
    assert code in (0, 3)
    assert read_trace_csv(trace)[-1].ffp == pytest.approx(5.5, abs=1e-4)

def test_tighten_tight_input_has_single_record(tmp_path, mercedes_benz):
    src = write_frame(mercedes_benz, tmp_path / "mb.json")
    out = tmp_path / "out.json"
    assert main(["tighten", "--in", str(src), "--out", str(out)]) == 0
    assert len(read_trace_csv(tmp_path / "out.trace.csv")) == 1

def test_tighten_iteration_budget(tmp_path):
    code = main(["tighten", "--d", "3", "--ranks", "1,1,2", "--seed", "0", "--max-iters", "3",
                 "--out", str(tmp_path / "o.json")])
    assert code == 3

def test_tighten_rejects_non_fusion_frame(tmp_path):
    frame = OperatorFrame.from_blocks([np.array([[2.0, 0.0]]), np.array([[0.0, 1.0]])])
    src = write_frame(frame, tmp_path / "bad.json")
    assert main(["tighten", "--in", str(src), "--out", str(tmp_path / "o.json")]) == 2

def _check(tmp_path, frame, *extra):
    src = write_frame(frame, tmp_path / "in.json")
    out = tmp_path / "report.json"
    code = main(["check", "--in", str(src), "--out", str(out), *extra])
    return code, json.loads(out.read_text(encoding="utf-8"))

def test_check_certificate(tmp_path, e1e1e2):
    code, report = _check(tmp_path, e1e1e2, "--which", "certificate")
    assert code == 0
    assert report["is_critical"] and not report["is_tight"]
    assert report["certificate"]["weight_exponent"] == 1

def test_check_spectra(tmp_path, e1e1e2):
    code, report = _check(tmp_path, e1e1e2, "--which", "spectra", "--lambda", "2,1")
    assert code == 0
    assert report["match"] is True
    assert report["frame_spectrum"] == pytest.approx([2.0, 1.0])

def test_check_property_s(tmp_path, mercedes_benz, e1e1e2):
    code, report = _check(tmp_path, mercedes_benz, "--which", "property-s")
    assert code == 0
    assert report["violated"] is False
    code, report = _check(tmp_path, e1e1e2, "--which", "property-s")
    assert code == 0
    assert report["violated"] is True
    assert report["witness"]["margin"] == pytest.approx(0.5)

def test_check_verdicts_are_data(tmp_path):
    frame = coordinate_frame(3, (2, 1, 1))
    code, report = _check(tmp_path, frame, "--which", "tight")
    assert code == 0
    assert report["is_tight"] is False
    code, report = _check(tmp_path, frame, "--which", "critical")
    assert code == 0
    assert report["is_critical"] is True

def test_check_malformed_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    assert main(["check", "--in", str(path), "--which", "tight"]) == 2

def test_admissible_majorization(tmp_path):
    out = tmp_path / "adm.json"
    assert main(["admissible", "--lambda", "5,5", "--r", "3,3,3,1", "--out", str(out)]) == 0
    assert json.loads(out.read_text(encoding="utf-8"))["result"] is True

def test_admissible_tff(tmp_path):
    out = tmp_path / "adm.json"
    assert main(["admissible", "--d", "3", "--ranks", "1,1,2", "--out", str(out)]) == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["verdict"] == "impossible"
    assert report["trace_value"] == pytest.approx(4 / 3)

def test_expand_seeds():
    seeds = expand_seeds(0, 5)
    assert seeds == expand_seeds(0, 5)
    assert len(set(seeds)) == 5
    assert seeds[:3] == expand_seeds(0, 3)
    assert all(0 <= s < 2 ** 32 for s in seeds)

def test_preset_defaults():
    preset = load_preset()
    assert preset["d"] == 3
    assert preset["ranks"] == [1, 1, 2]
    assert preset["target_ffp"] == pytest.approx(5.5)
    assert load_preset(config_path="does-not-exist.yaml")["angle_tol"] == pytest.approx(1e-3)

def test_limiting_geometry_of_ideal_minimizer(two_lines_and_a_plane):
    frame = two_lines_and_a_plane
    assert ffp(frame) == pytest.approx(5.5)
    geometry = limiting_geometry(frame)
    assert geometry.dihedral_angle == pytest.approx(np.pi / 2)
    assert geometry.pairwise_angles == pytest.approx((2 * np.pi / 3,) * 3)
    assert geometry.ok

def test_reproduce_small_batch(tmp_path):
    out = tmp_path / "repro"
    assert main(["reproduce", "--seeds", "3", "--seed", "0", "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert summary["seeds"] == expand_seeds(0, 3)
    assert [run["seed"] for run in summary["runs"]] == summary["seeds"]
    for run in summary["runs"]:
        assert (out / run["trace_path"]).exists()
        assert run["final_ffp"] > 16 / 3 + 0.1
    assert (out / "manifest.json").exists()

@pytest.mark.slow
def test_reproduce_hundred_seeds(tmp_path):
    out = tmp_path / "repro"
    assert main(["reproduce", "--seeds", "100", "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert summary["fraction_reaching_target"] >= 0.95
    for run in summary["runs"]:
        if run["converged"]:
            assert run["final_ffp"] > 16 / 3 + 0.1
        if run["converged"] and run["reached_target"]:
            assert run["geometry_ok"]
