"""Command-line behavior: subcommands, precedence, formats, exit codes."""

import csv
import json
import math

import pytest

from qwalk import gaussian_asymptotic_entropy, h1_eigenvalues
from qwalk.cli import main

SQRT2 = math.sqrt(2.0)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("QWALK_GRID_N", raising=False)


def run(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def rows_of(text):
    lines = [l for l in text.splitlines() if l]
    body = [l for l in lines[1:] if not l.startswith("#")]
    footer = dict(l[1:].split(",", 1) for l in lines[1:] if l.startswith("#"))
    return lines[0].split(","), [l.split(",") for l in body], footer


# ----------------------------------------------------------------- simulate


def test_simulate_zero_steps(capsys):
    code, out, _ = run(["simulate", "--tmax", "0"], capsys)
    assert code == 0
    header, body, _ = rows_of(out)
    assert header == ["t", "s_e", "variance", "a", "c", "b_abs"]
    assert len(body) == 1
    assert body[0][0] == "0"
    assert float(body[0][1]) == 0.0  # product state


def test_simulate_pair_history(capsys):
    code, out, _ = run(
        ["simulate", "--ic", "h1", "--theta", repr(math.pi / 4), "--phi", "0", "--tmax", "50"],
        capsys,
    )
    assert code == 0
    _, body, _ = rows_of(out)
    assert len(body) == 51
    final = float(body[-1][1])
    assert abs(final - 0.9786427398560986) <= 1e-12  # pinned run
    assert abs(final - h1_eigenvalues(math.pi / 4, 0.0).entropy) <= 0.01


def test_simulate_localized_history(capsys):
    code, out, _ = run(
        ["simulate", "--alpha", repr(math.pi / 4), "--beta", repr(math.pi / 2), "--tmax", "50"],
        capsys,
    )
    assert code == 0
    _, body, _ = rows_of(out)
    assert abs(float(body[-1][1]) - 0.8717219275404818) <= 1e-12


def test_simulate_rejects_bad_angle(capsys):
    code, out, err = run(["simulate", "--alpha", "9.0", "--tmax", "1"], capsys)
    assert code == 2
    assert out == ""
    assert "alpha" in err


def test_simulate_rejects_negative_tmax(capsys):
    code, _, err = run(["simulate", "--tmax", "-5"], capsys)
    assert code == 2
    assert "t_max" in err


# --------------------------------------------------------------- asymptotic


def test_asymptotic_routes_for_pair_state(capsys):
    code, out, _ = run(
        ["asymptotic", "--ic", "h1", "--theta", repr(math.pi / 4), "--phi", "0"], capsys
    )
    assert code == 0
    header, body, _ = rows_of(out)
    assert header == ["route", "a", "c", "b_abs", "delta", "r1", "r2", "s_e"]
    routes = [r[0] for r in body]
    assert routes == ["quadrature", "symmetric", "closed-form"]
    values = [float(r[-1]) for r in body]
    assert max(values) - min(values) <= 1e-12
    assert abs(values[0] - 0.97866) <= 1e-5


def test_asymptotic_localized_skips_symmetric_route(capsys):
    code, out, _ = run(["asymptotic", "--alpha", "0.3", "--beta", "0.7"], capsys)
    assert code == 0
    _, body, _ = rows_of(out)
    assert [r[0] for r in body] == ["quadrature", "closed-form"]
    assert abs(float(body[0][-1]) - float(body[1][-1])) <= 1e-12


def test_asymptotic_gaussian(capsys):
    code, out, _ = run(["asymptotic", "--ic", "gaussian", "--sigma", "2"], capsys)
    assert code == 0
    _, body, _ = rows_of(out)
    assert [r[0] for r in body] == ["quadrature", "symmetric"]
    assert abs(float(body[1][-1]) - gaussian_asymptotic_entropy(2.0)) <= 1e-10


# ------------------------------------------------------------------- sweeps


def test_sweep_localized(tmp_path, capsys):
    out_file = tmp_path / "sweep.csv"
    code, _, _ = run(
        ["sweep-localized", "--alpha-steps", "8", "--beta-steps", "6", "--out", str(out_file)],
        capsys,
    )
    assert code == 0
    header, body, footer = rows_of(out_file.read_text())
    assert header == ["alpha", "beta", "s_e"]
    assert len(body) == 48
    assert set(footer) == {"min_s_e", "min_alpha", "min_beta", "max_s_e", "max_alpha", "max_beta"}
    assert 0.73 <= float(footer["min_s_e"]) <= float(footer["max_s_e"]) <= 1.0


def test_sweep_h1_contains_exact_angles(capsys):
    # theta grid with 8 steps holds pi/4, phi grid with 4 steps holds -pi and 0,
    # so both pair-state extremes sit exactly on sweep nodes
    code, out, _ = run(["sweep-h1", "--theta-steps", "8", "--phi-steps", "4"], capsys)
    assert code == 0
    _, body, footer = rows_of(out)
    assert len(body) == 32
    at_origin = [r for r in body if float(r[0]) == 0.0 and float(r[1]) == 0.0]
    assert len(at_origin) == 1
    # theta = 0 is a single occupied site: the balanced localized level
    assert abs(float(at_origin[0][2]) - 0.87243) <= 1e-5
    assert abs(float(footer["min_s_e"]) - 0.66129) <= 1e-5
    assert abs(float(footer["max_s_e"]) - 0.97866) <= 1e-5


def test_sweep_rejects_single_step_axis(capsys):
    code, _, err = run(["sweep-localized", "--alpha-steps", "1"], capsys)
    assert code == 2
    assert "at least 2" in err


# ------------------------------------------------------------- gaussian-scan


def test_gaussian_scan(capsys):
    code, out, _ = run(["gaussian-scan", "--sigmas", "2,4"], capsys)
    assert code == 0
    header, body, footer = rows_of(out)
    assert header == ["sigma", "s_e", "smaller_eigenvalue"]
    assert len(body) == 2
    assert abs(float(body[0][1]) - gaussian_asymptotic_entropy(2.0)) <= 1e-12
    assert abs(float(body[1][1]) - gaussian_asymptotic_entropy(4.0)) <= 1e-12
    assert "r2_loglog_slope" in footer


def test_gaussian_scan_rejects_bad_sigma_list(capsys):
    # argparse applies the list parser itself, so this surfaces as a usage error
    with pytest.raises(SystemExit) as exc:
        main(["gaussian-scan", "--sigmas", "2,-3"])
    assert exc.value.code == 2
    assert "--sigmas" in capsys.readouterr().err


# ------------------------------------------------------------------- verify


def test_verify_passes_on_default_grid(capsys):
    code, out, _ = run(["verify"], capsys)
    assert code == 0
    header, body, _ = rows_of(out)
    assert header == ["name", "computed", "target", "abs_error", "status"]
    assert len(body) >= 15
    assert all(r[-1] == "pass" for r in body)


def test_verify_fails_on_coarse_grid(capsys):
    code, out, _ = run(["verify", "--grid-n", "8"], capsys)
    assert code == 1
    _, body, _ = rows_of(out)
    assert any(r[-1] == "fail" for r in body)


def test_verify_json(capsys):
    code, out, _ = run(["verify", "--format", "json"], capsys)
    assert code == 0
    records = json.loads(out)
    assert all(r["status"] == "pass" for r in records)
    names = {r["name"] for r in records}
    assert {"c1", "b4", "q_average", "s_balanced_coin", "delta0_printings"} <= names


# -------------------------------------------------------- settings precedence


def test_env_sets_grid(monkeypatch, capsys):
    monkeypatch.setenv("QWALK_GRID_N", "8")
    code, _, _ = run(["verify"], capsys)
    assert code == 1  # coarse grid: quadratures miss


def test_config_overrides_env(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv("QWALK_GRID_N", "8")
    cfg = tmp_path / "walk.cfg"
    cfg.write_text("# settings\ngrid_n = 1024\n")
    code, _, _ = run(["verify", "--config", str(cfg)], capsys)
    assert code == 0


def test_flag_overrides_config(tmp_path, capsys):
    cfg = tmp_path / "walk.cfg"
    cfg.write_text("grid_n = 8\n")
    code, _, _ = run(["verify", "--config", str(cfg), "--grid-n", "1024"], capsys)
    assert code == 0


def test_config_sets_ic_parameters(tmp_path, capsys):
    cfg = tmp_path / "walk.cfg"
    cfg.write_text("ic = h1\ntheta = %r\nphi = 0\nt_max = 3\n" % (math.pi / 4))
    code, out, _ = run(["simulate", "--config", str(cfg)], capsys)
    assert code == 0
    _, body, _ = rows_of(out)
    assert len(body) == 4


def test_config_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "walk.cfg"
    cfg.write_text("walker = fast\n")
    code, _, err = run(["verify", "--config", str(cfg)], capsys)
    assert code == 2
    assert "unknown setting" in err


def test_config_bad_syntax(tmp_path, capsys):
    cfg = tmp_path / "walk.cfg"
    cfg.write_text("grid_n 1024\n")
    code, _, err = run(["verify", "--config", str(cfg)], capsys)
    assert code == 2
    assert "key = value" in err


def test_missing_config_file(tmp_path, capsys):
    code, _, err = run(["verify", "--config", str(tmp_path / "absent.cfg")], capsys)
    assert code == 2
    assert err != ""


def test_bad_env_value(monkeypatch, capsys):
    monkeypatch.setenv("QWALK_GRID_N", "many")
    code, _, err = run(["verify"], capsys)
    assert code == 2
    assert "QWALK_GRID_N" in err


def test_odd_grid_rejected(capsys):
    code, _, err = run(["verify", "--grid-n", "1023"], capsys)
    assert code == 2
    assert "even" in err


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["simulate", "--no-such-flag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main([])


# ------------------------------------------------------------ files and plots


def test_plot_derived_from_out(tmp_path, capsys):
    out_file = tmp_path / "run.csv"
    code, _, _ = run(["simulate", "--tmax", "5", "--out", str(out_file), "--plot"], capsys)
    assert code == 0
    assert out_file.exists()
    assert (tmp_path / "run.png").stat().st_size > 0


def test_plot_explicit_path(tmp_path, capsys):
    fig = tmp_path / "figure.png"
    code, out, _ = run(["simulate", "--tmax", "5", "--plot", str(fig)], capsys)
    assert code == 0
    assert out.startswith("t,")  # table still goes to stdout
    assert fig.stat().st_size > 0


def test_plot_without_out_or_path(capsys):
    code, _, err = run(["simulate", "--tmax", "5", "--plot"], capsys)
    assert code == 2
    assert "--plot" in err


def test_sweep_plot(tmp_path, capsys):
    fig = tmp_path / "surface.png"
    code, _, _ = run(
        ["sweep-h1", "--theta-steps", "4", "--phi-steps", "4", "--plot", str(fig)], capsys
    )
    assert code == 0
    assert fig.stat().st_size > 0


def test_reruns_are_byte_identical(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for path in (a, b):
        code, _, _ = run(
            ["sweep-localized", "--alpha-steps", "6", "--beta-steps", "6", "--out", str(path)],
            capsys,
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_json_simulate_output(capsys):
    code, out, _ = run(["simulate", "--tmax", "3", "--format", "json"], capsys)
    assert code == 0
    records = json.loads(out)
    assert len(records) == 4
    assert records[0]["t"] == 0
    assert set(records[0]) == {"t", "s_e", "variance", "a", "c", "b_abs"}
