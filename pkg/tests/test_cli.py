import json

import numpy as np
import pytest

from tangentspline.cli import main
from conftest import GOLDEN_DIR


def run_cli(capsysbinary, argv):
    code = main(argv)
    captured = capsysbinary.readouterr()
    return code, captured.out, captured.err


def test_example_dataset_json(capsysbinary):
    code, out, _ = run_cli(capsysbinary, ["example", "1"])
    assert code == 0
    data = json.loads(out)
    assert data["tau"] == list(range(1, 12))
    assert data["F"] == [1, 3, 3, 1, 2, 7, 1.5, 1, 10, 2, 1.5]


def test_example_svg_matches_golden(tmp_path, capsysbinary):
    out_path = tmp_path / "fig1.svg"
    code, _, _ = run_cli(capsysbinary, ["example", "1", "--svg", str(out_path)])
    assert code == 0
    assert out_path.read_bytes() == (GOLDEN_DIR / "example1.svg").read_bytes()


def test_example_samples_match_golden(tmp_path, capsysbinary):
    out_path = tmp_path / "samples.csv"
    code, _, _ = run_cli(capsysbinary, ["example", "2", "--samples", str(out_path)])
    assert code == 0
    assert out_path.read_bytes() == (GOLDEN_DIR / "example2_samples.csv").read_bytes()


def test_example_check_reports_health(capsysbinary):
    code, out, _ = run_cli(capsysbinary, ["example", "1", "--check"])
    assert code == 0
    text = out.decode()
    margins = float(text.split("dominance margin min: ")[1].split("\n")[0])
    c1 = float(text.split("c1 residual max: ")[1].split("\n")[0])
    hull = float(text.split("hull margin: ")[1].split("\n")[0])
    assert margins > 0.0
    assert c1 <= 1e-9
    assert hull >= -1e-9 * 10


def test_build_emits_curve_data(tmp_path, capsysbinary):
    src = tmp_path / "in.json"
    src.write_text('{"tau":[0,1,2],"F":[0,1,0]}')
    code, out, _ = run_cli(capsysbinary, ["build", "--input", str(src)])
    assert code == 0
    data = json.loads(out)
    assert data["phi"] == pytest.approx([0.0, 0.8, 0.0], abs=1e-15)
    assert data["q"] == pytest.approx([-0.8, 0.8], abs=1e-15)
    assert data["alpha"] == [0.5, 0.5]
    assert data["diagnostics"]["hull_margin"] >= -1e-12


def test_strict_alpha_violation_exit_2(tmp_path, capsysbinary):
    src = tmp_path / "in.json"
    src.write_text('{"tau":[0,1,2],"F":[0,1,0]}')
    code, _, err = run_cli(capsysbinary, ["build", "--input", str(src), "--alpha", "0.9"])
    assert code == 2
    assert b"outside [1/3, 2/3]" in err


def test_no_strict_flag_admits_wide_alpha(tmp_path, capsysbinary):
    src = tmp_path / "in.json"
    src.write_text('{"tau":[0,1,2],"F":[0,1,0]}')
    code, out, _ = run_cli(
        capsysbinary, ["build", "--input", str(src), "--alpha", "0.9", "--no-strict"]
    )
    assert code == 0
    assert json.loads(out)["strict"] is False


def test_per_interval_alpha_list(tmp_path, capsysbinary):
    src = tmp_path / "in.json"
    src.write_text('{"tau":[0,1,2],"F":[0,1,0]}')
    code, out, _ = run_cli(
        capsysbinary, ["build", "--input", str(src), "--alpha", "0.4,0.6"]
    )
    assert code == 0
    assert json.loads(out)["alpha"] == [0.4, 0.6]


def test_sample_csv_stdout(tmp_path, capsysbinary):
    src = tmp_path / "in.csv"
    src.write_text("0,0\n1,1\n")
    code, out, _ = run_cli(
        capsysbinary, ["sample", "--input", str(src), "--count", "3"]
    )
    assert code == 0
    assert out == b"x,y\n0,0\n0.5,0.5\n1,1\n"


def test_stdin_dash(monkeypatch, capsysbinary):
    import io
    import sys

    monkeypatch.setattr(
        sys, "stdin", type("S", (), {"buffer": io.BytesIO(b'{"tau":[0,1],"F":[2,3]}')})()
    )
    code, out, _ = run_cli(capsysbinary, ["sample", "--input", "-", "--count", "2"])
    assert code == 0
    assert out == b"x,y\n0,2\n1,3\n"


def test_svg_deterministic(tmp_path, capsysbinary):
    src = tmp_path / "in.json"
    src.write_text('{"tau":[0,1,2],"F":[0,1,0]}')
    argv = ["svg", "--input", str(src), "--count", "64"]
    code1, out1, _ = run_cli(capsysbinary, argv)
    code2, out2, _ = run_cli(capsysbinary, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.startswith(b"<?xml")


def test_parametric_input_build(tmp_path, capsysbinary):
    src = tmp_path / "pts.json"
    src.write_text('{"points":[[0,0],[1,2],[3,1]]}')
    code, out, _ = run_cli(capsysbinary, ["build", "--input", str(src)])
    assert code == 0
    data = json.loads(out)
    assert data["mode"] == "parametric"
    assert data["parameterization"] == "chord"
    assert len(data["phi"]["x"]) == 3


def test_missing_file_exit_3(capsysbinary):
    code, _, err = run_cli(capsysbinary, ["build", "--input", "/nonexistent.json"])
    assert code == 3
    assert b"i/o error" in err


def test_malformed_input_exit_2(tmp_path, capsysbinary):
    src = tmp_path / "bad.json"
    src.write_text("{nope")
    code, _, err = run_cli(capsysbinary, ["build", "--input", str(src)])
    assert code == 2
    assert b"error" in err


def test_unknown_flag_exit_2(capsysbinary):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--frobnicate"])
    assert exc.value.code == 2


def test_unknown_example_id_exit_2(capsysbinary):
    with pytest.raises(SystemExit) as exc:
        main(["example", "3"])
    assert exc.value.code == 2


def test_help_lists_every_subcommand(capsysbinary):
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
    out = capsysbinary.readouterr().out.decode()
    for name in ("build", "sample", "svg", "check", "example"):
        assert name in out


@pytest.mark.parametrize(
    "command,flags",
    [
        ("build", ["--input", "--example", "--alpha", "--no-strict", "--output"]),
        ("sample", ["--count", "--format", "--include-nodes"]),
        ("svg", ["--count", "--output"]),
        ("check", ["--count"]),
        ("example", ["--svg", "--samples", "--check", "--count"]),
    ],
)
def test_help_lists_every_flag(capsysbinary, command, flags):
    with pytest.raises(SystemExit) as exc:
        main([command, "--help"])
    assert exc.value.code == 0
    out = capsysbinary.readouterr().out.decode()
    for flag in flags:
        assert flag in out


def test_identical_argv_identical_bytes(tmp_path, capsysbinary):
    src = tmp_path / "in.json"
    src.write_text('{"tau":[1,2,3,4],"F":[0,2,-1,3],"alpha":0.4}')
    argv = ["build", "--input", str(src)]
    _, out1, _ = run_cli(capsysbinary, argv)
    _, out2, _ = run_cli(capsysbinary, argv)
    assert out1 == out2
