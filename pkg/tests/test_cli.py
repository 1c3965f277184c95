import json

import pytest

import ajima.cli as cli
from ajima.svgfig import render_svg
from ajima.triangle import Triangle


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_spot_values(capsys):
    code, out, _ = run(capsys, "solve", "--triangle", "4,5,6",
                       "--theta", "180")
    assert code == 0
    assert "1.3228756555" in out          # r
    assert "3.0237157841" in out          # R
    assert "1.7890318389" in out          # W
    assert "rho_i" in out and "rho_o" in out


def test_solve_flags_degenerate_and_extended(capsys):
    code, out, _ = run(capsys, "solve", "--triangle", "3,4,5",
                       "--theta", "180")
    assert code == 0
    assert "degenerate point circle" in out
    code, out, _ = run(capsys, "solve", "--triangle", "2,2,2",
                       "--theta", "300")
    assert code == 0
    assert "extended case" in out


def test_verify_single_instance(capsys):
    code, out, _ = run(capsys, "verify", "--triangle", "4,5,6",
                       "--theta", "150", "--checks", "F06_rho_forms,A14_soddy")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 2
    assert all("pass" in l for l in lines)


def test_verify_single_instance_na(capsys):
    code, out, _ = run(capsys, "verify", "--triangle", "3,4,5",
                       "--theta", "180", "--checks", "T01_tangents")
    assert code == 0
    assert "not_applicable" in out
    assert "interior" in out


def test_verify_suite_with_json_report(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--trials", "10", "--seed", "3",
                       "--checks", "F06_rho_forms,P01_protasov",
                       "--json", str(path))
    assert code == 0
    assert "total: 2 checks, 0 failures" in out
    doc = json.loads(path.read_text())
    assert doc["version"] == 1
    assert doc["policy"] == {"seed": 3, "trials": 10,
                             "theta_range": [20.0, 340.0],
                             "constraint": "interior",
                             "side_ratio_cap": 10.0}
    assert [e["id"] for e in doc["per_check"]] == ["F06_rho_forms",
                                                   "P01_protasov"]


def test_verify_report_bytes_deterministic(capsys, tmp_path):
    paths = [tmp_path / "r1.json", tmp_path / "r2.json"]
    for p in paths:
        code, _, _ = run(capsys, "verify", "--trials", "8", "--seed", "5",
                         "--checks", "A14_soddy", "--json", str(p))
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_failure_exit_code(capsys, monkeypatch):
    # an impossible threshold turns real residuals into failures
    monkeypatch.setattr(cli, "PASS_THRESHOLD", 1e-300)
    code, out, _ = run(capsys, "verify", "--triangle", "4,5,6",
                       "--theta", "150", "--checks", "F08_lengths")
    assert code == 1
    assert "fail" in out


def test_config_errors(capsys):
    cases = [
        ("solve", "--triangle", "1,2,9", "--theta", "100"),
        ("solve", "--triangle", "4,5", "--theta", "100"),
        ("solve", "--triangle", "4,5,6"),
        ("solve", "--triangle", "4,5,6", "--theta", "400"),
        ("verify", "--triangle", "4,5,6", "--theta", "100",
         "--checks", "NOPE"),
        ("figure", "--triangle", "4,5,6", "--theta", "100",
         "--show", "bogus"),
        ("figure", "--triangle", "4,5,6", "--theta", "100",
         "--thetas", "100,100,100"),
        ("figure", "--triangle", "4,5,6"),
    ]
    for argv in cases:
        code, _, err = run(capsys, *argv)
        assert code == 2, argv
        assert "error:" in err or err == "", argv


def test_tol_env_override(capsys, monkeypatch):
    monkeypatch.setenv("AJIMA_TOL", "not-a-number")
    code, _, err = run(capsys, "verify", "--triangle", "4,5,6",
                       "--theta", "150", "--checks", "F06_rho_forms")
    assert code == 2
    assert "AJIMA_TOL" in err
    monkeypatch.setenv("AJIMA_TOL", "1e-9")
    code, _, _ = run(capsys, "verify", "--triangle", "4,5,6",
                     "--theta", "150", "--checks", "F06_rho_forms")
    assert code == 0
    code, _, _ = run(capsys, "verify", "--triangle", "4,5,6",
                     "--theta", "150", "--checks", "F06_rho_forms",
                     "--tol", "-1")
    assert code == 2


def test_figure_to_file_and_stdout(capsys, tmp_path):
    path = tmp_path / "fig.svg"
    code, out, _ = run(capsys, "figure", "--triangle", "4,5,6",
                       "--theta", "140", "--svg", str(path))
    assert code == 0
    text = path.read_text()
    assert text.startswith("<svg ")
    assert text.rstrip().endswith("</svg>")
    code, out, _ = run(capsys, "figure", "--triangle", "4,5,6",
                       "--theta", "140")
    assert code == 0
    assert out == text


def test_figure_bytes_deterministic(tmp_path, capsys):
    args = ("figure", "--triangle", "4,5,6", "--theta", "100", "--show",
            "triangle,arcs,gamma,incircle,apollonius,soddy,points")
    outs = []
    for name in ("a.svg", "b.svg"):
        path = tmp_path / name
        code, _, _ = run(capsys, *args, "--svg", str(path))
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_render_svg_per_side_thetas():
    tri = Triangle.from_sides(4.0, 5.0, 6.0)
    svg = render_svg(tri, None, (100.0, 140.0, 200.0))
    assert svg.count("<path") == 3      # one arc per side
    with pytest.raises(ValueError):
        render_svg(tri, 100.0, None, layers=("nope",))
