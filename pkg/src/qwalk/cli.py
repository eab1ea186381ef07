"""Command-line frontend.

Subcommands
-----------
simulate        step-by-step entropy and spread of a finite-time walk
asymptotic      long-time reduced coin density by every applicable route
sweep-localized asymptotic entropy surface over the starting coin angles
sweep-h1        asymptotic entropy surface over the one-hop pair angles
gaussian-scan   asymptotic entropy against packet spread sigma
verify          analytic constant catalog cross-checked by quadrature

Settings resolve as: command-line flags over config-file entries over the
QWALK_GRID_N environment variable over built-in defaults (grid 1024,
t_max 200). The config file holds `key = value` lines with `#` comments.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .asymptotics import (
    CLOSED_FORM,
    CLOSED_FORM_COEFFICIENTS,
    _coefficient_quadratures,
    asymptotic_reduced_density,
    asymptotic_reduced_density_symmetric,
    h1_eigenvalues,
    localized_entropy,
    q_weight,
    r_weight,
)
from .entanglement import (
    ReducedDensity,
    entropy,
    entropy_from_delta,
    reduced_density_position,
)
from .evolution import step
from .quadrature import DEFAULT_GRID_N, PeriodicGrid, integrate_average
from .report import (
    render_table,
    scan_figure,
    simulate_figure,
    sweep_figure,
    write_table,
)
from .states import (
    Gaussian,
    H1,
    InitialCondition,
    Localized,
    build_initial,
    fourier_transform,
    position_distribution,
    variance,
)

__all__ = ["RunConfig", "main"]

ENV_GRID_N = "QWALK_GRID_N"

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved settings for one CLI invocation."""

    command: str
    ic: str
    alpha: float
    beta: float
    theta: float
    phi: float
    sigma: float
    t_max: int
    grid_n: int
    grid_n_explicit: bool
    out: Optional[str]
    fmt: str
    plot_path: Optional[str]
    alpha_steps: int
    beta_steps: int
    theta_steps: int
    phi_steps: int
    sigmas: tuple[float, ...]


def _parse_sigmas(text: str) -> tuple[float, ...]:
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise ValueError("empty sigma list")
    sigmas = tuple(float(p) for p in parts)
    if any(not math.isfinite(s) or s <= 0.0 for s in sigmas):
        raise ValueError("all sigma values must be positive")
    return sigmas


def _parse_format(text: str) -> str:
    if text not in ("csv", "json"):
        raise ValueError(f"format must be csv or json, got {text!r}")
    return text


_DEFAULTS = {
    "ic": "localized",
    "alpha": math.pi / 2,
    "beta": 0.0,
    "theta": math.pi / 4,
    "phi": 0.0,
    "sigma": 2.0,
    "t_max": 200,
    "grid_n": DEFAULT_GRID_N,
    "format": "csv",
    "alpha_steps": 64,
    "beta_steps": 64,
    "theta_steps": 64,
    "phi_steps": 64,
    "sigmas": (2.0, 3.0, 4.0, 6.0, 8.0, 11.0, 16.0, 23.0, 32.0),
}

_CONFIG_PARSERS = {
    "ic": str,
    "alpha": float,
    "beta": float,
    "theta": float,
    "phi": float,
    "sigma": float,
    "t_max": int,
    "grid_n": int,
    "format": _parse_format,
    "alpha_steps": int,
    "beta_steps": int,
    "theta_steps": int,
    "phi_steps": int,
    "sigmas": _parse_sigmas,
}


def _read_config(path: str) -> dict:
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, text = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected key = value, got {line!r}")
            key = key.strip().replace("-", "_")
            text = text.strip()
            if key not in _CONFIG_PARSERS:
                raise ValueError(f"{path}:{lineno}: unknown setting {key!r}")
            try:
                values[key] = _CONFIG_PARSERS[key](text)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    return values


def _resolve(args: argparse.Namespace) -> RunConfig:
    values = dict(_DEFAULTS)
    grid_n_explicit = False

    env = os.environ.get(ENV_GRID_N)
    if env is not None:
        try:
            values["grid_n"] = int(env)
        except ValueError:
            raise ValueError(f"{ENV_GRID_N} must be an integer, got {env!r}") from None
        grid_n_explicit = True

    config_path = getattr(args, "config", None)
    if config_path:
        file_values = _read_config(config_path)
        grid_n_explicit = grid_n_explicit or "grid_n" in file_values
        values.update(file_values)

    for key in values:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    if getattr(args, "grid_n", None) is not None:
        grid_n_explicit = True

    if values["ic"] not in ("localized", "h1", "gaussian"):
        raise ValueError(f"initial condition must be localized, h1 or gaussian, got {values['ic']!r}")
    if values["t_max"] < 0:
        raise ValueError(f"t_max must be nonnegative, got {values['t_max']}")
    PeriodicGrid(values["grid_n"])  # validates even and >= 2

    out = getattr(args, "out", None)
    plot_raw = getattr(args, "plot", None)
    plot_path = None
    if plot_raw is not None:
        if plot_raw != "":
            plot_path = plot_raw
        elif out:
            plot_path = os.path.splitext(out)[0] + ".png"
        else:
            raise ValueError("--plot without a PATH needs --out to derive the figure name")

    return RunConfig(
        command=args.command,
        ic=values["ic"],
        alpha=float(values["alpha"]),
        beta=float(values["beta"]),
        theta=float(values["theta"]),
        phi=float(values["phi"]),
        sigma=float(values["sigma"]),
        t_max=int(values["t_max"]),
        grid_n=int(values["grid_n"]),
        grid_n_explicit=grid_n_explicit,
        out=out,
        fmt=values["format"],
        plot_path=plot_path,
        alpha_steps=int(values["alpha_steps"]),
        beta_steps=int(values["beta_steps"]),
        theta_steps=int(values["theta_steps"]),
        phi_steps=int(values["phi_steps"]),
        sigmas=tuple(values["sigmas"]),
    )


def _initial_condition(cfg: RunConfig) -> InitialCondition:
    if cfg.ic == "localized":
        return Localized(cfg.alpha, cfg.beta)
    if cfg.ic == "h1":
        return H1(cfg.theta, cfg.phi)
    return Gaussian(cfg.sigma)


def cmd_simulate(cfg: RunConfig) -> int:
    state = build_initial(_initial_condition(cfg))
    rows = []
    for t in range(cfg.t_max + 1):
        if t:
            state = step(state)
        rd = reduced_density_position(state)
        res = entropy(rd)
        rows.append(
            (t, res.entropy, variance(position_distribution(state)), rd.a, rd.c, abs(rd.b))
        )
    header = ("t", "s_e", "variance", "a", "c", "b_abs")
    write_table(cfg.out, header, rows, cfg.fmt)
    if cfg.plot_path:
        simulate_figure(rows, cfg.plot_path)
    return 0


def _localized_closed_density(alpha: float, beta: float) -> ReducedDensity:
    """Closed form of the long-time density for the localized family.

    The diagonal weight built from the c coefficients lands on the
    right-moving amplitude in this package's ordering, and only the
    modulus of the off-diagonal term is convention independent.
    """
    cf = CLOSED_FORM_COEFFICIENTS
    s2 = math.sin(alpha) ** 2
    s2a = math.sin(2.0 * alpha)
    a_bar = cf.c1 + (cf.c2 - cf.c1) * s2 + cf.c3 * s2a * math.cos(beta)
    b_bar = complex(
        cf.b1 + (cf.b2 - cf.b1) * s2 + s2a * cf.b3 * math.cos(beta),
        s2a * cf.b4 * math.sin(beta),
    )
    return ReducedDensity(a_bar, 1.0 - a_bar, b_bar)


def _h1_closed_density(theta: float, phi: float) -> ReducedDensity:
    """Closed form of the long-time density for the one-hop pair family."""
    s2t = math.sin(2.0 * theta)
    a_bar = 0.5 - CLOSED_FORM.b_plus * s2t * math.sin(phi)
    b_bar = complex(
        CLOSED_FORM.b0 - CLOSED_FORM.b_prime * s2t * math.cos(phi),
        CLOSED_FORM.b_plus * s2t * math.sin(phi),
    )
    return ReducedDensity(a_bar, 1.0 - a_bar, b_bar)


def cmd_asymptotic(cfg: RunConfig) -> int:
    ic = _initial_condition(cfg)
    field = fourier_transform(build_initial(ic), PeriodicGrid(cfg.grid_n))
    rows = []

    def add(route: str, rd: ReducedDensity) -> None:
        res = entropy(rd)
        rows.append((route, rd.a, rd.c, abs(rd.b), rd.delta, res.r1, res.r2, res.entropy))

    add("quadrature", asymptotic_reduced_density(field))
    try:
        add("symmetric", asymptotic_reduced_density_symmetric(field))
    except ValueError:
        pass  # coin does not satisfy b~ = i a~; route not applicable
    if isinstance(ic, Localized):
        add("closed-form", _localized_closed_density(ic.alpha, ic.beta))
    elif isinstance(ic, H1):
        add("closed-form", _h1_closed_density(ic.theta, ic.phi))
    header = ("route", "a", "c", "b_abs", "delta", "r1", "r2", "s_e")
    write_table(cfg.out, header, rows, cfg.fmt)
    return 0


def _sweep(cfg: RunConfig, axis1, axis2, names, evaluate):
    n1, n2 = len(axis1), len(axis2)
    z = np.empty((n1, n2))
    rows = []
    for i, p1 in enumerate(axis1):
        for j, p2 in enumerate(axis2):
            s = evaluate(float(p1), float(p2))
            z[i, j] = s
            rows.append((float(p1), float(p2), s))
    imin = int(np.argmin(z))
    imax = int(np.argmax(z))
    footer = [
        ("min_s_e", float(z.flat[imin])),
        (f"min_{names[0]}", float(axis1[imin // n2])),
        (f"min_{names[1]}", float(axis2[imin % n2])),
        ("max_s_e", float(z.flat[imax])),
        (f"max_{names[0]}", float(axis1[imax // n2])),
        (f"max_{names[1]}", float(axis2[imax % n2])),
    ]
    return rows, z, footer


def cmd_sweep_localized(cfg: RunConfig) -> int:
    na, nb = cfg.alpha_steps, cfg.beta_steps
    if na < 2 or nb < 2:
        raise ValueError("sweep grids need at least 2 steps per axis")
    alphas = -np.pi + 2.0 * np.pi * np.arange(na) / na
    betas = -np.pi + 2.0 * np.pi * np.arange(nb) / nb
    rows, z, footer = _sweep(
        cfg, alphas, betas, ("alpha", "beta"),
        lambda al, be: localized_entropy(al, be).entropy,
    )
    write_table(cfg.out, ("alpha", "beta", "s_e"), rows, cfg.fmt, footer)
    if cfg.plot_path:
        sweep_figure("alpha", "beta", alphas, betas, z, cfg.plot_path)
    return 0


def cmd_sweep_h1(cfg: RunConfig) -> int:
    nt, np_ = cfg.theta_steps, cfg.phi_steps
    if nt < 2 or np_ < 2:
        raise ValueError("sweep grids need at least 2 steps per axis")
    thetas = -np.pi / 2 + np.pi * np.arange(nt) / nt
    phis = -np.pi + 2.0 * np.pi * np.arange(np_) / np_
    rows, z, footer = _sweep(
        cfg, thetas, phis, ("theta", "phi"),
        lambda th, ph: h1_eigenvalues(th, ph).entropy,
    )
    write_table(cfg.out, ("theta", "phi", "s_e"), rows, cfg.fmt, footer)
    if cfg.plot_path:
        sweep_figure("theta", "phi", thetas, phis, z, cfg.plot_path)
    return 0


def cmd_gaussian_scan(cfg: RunConfig) -> int:
    rows = []
    for sigma in cfg.sigmas:
        state = build_initial(Gaussian(sigma))
        if cfg.grid_n_explicit:
            grid = PeriodicGrid(cfg.grid_n)
        else:
            n = cfg.grid_n
            while n < 2 * state.width:
                n *= 2
            grid = PeriodicGrid(n)
        field = fourier_transform(state, grid)
        res = entropy(asymptotic_reduced_density_symmetric(field))
        rows.append((float(sigma), res.entropy, res.r2))
    slope = float(
        np.polyfit(np.log([r[0] for r in rows]), np.log([r[2] for r in rows]), 1)[0]
    )
    footer = [("r2_loglog_slope", slope)]
    write_table(cfg.out, ("sigma", "s_e", "smaller_eigenvalue"), rows, cfg.fmt, footer)
    if cfg.plot_path:
        scan_figure(rows, cfg.plot_path)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    grid = PeriodicGrid(cfg.grid_n)
    k = grid.nodes
    cf = CLOSED_FORM_COEFFICIENTS
    checks = []

    quad = _coefficient_quadratures(grid)
    for name in ("c1", "c2", "c3", "b1", "b2", "b3", "b4"):
        checks.append((name, getattr(quad, name), getattr(cf, name), 1e-12))

    flat = np.full(grid.n, 0.5)
    checks.append(
        ("b0_flat_weights", abs(complex(integrate_average(r_weight(k) * flat))),
         (_SQRT2 - 1.0) / 2.0, 1e-12)
    )
    checks.append(
        ("b_plus_cos2_weights", abs(complex(integrate_average(r_weight(k) * np.cos(k) ** 2))),
         (_SQRT2 - 1.0) ** 2 / 2.0, 1e-12)
    )
    checks.append(
        ("b_minus_sin2_weights", abs(complex(integrate_average(r_weight(k) * np.sin(k) ** 2))),
         0.5 - (_SQRT2 - 1.0) ** 2, 1e-12)
    )
    checks.append(("q_average", float(integrate_average(q_weight(k))), 1.0, 1e-12))

    plus = h1_eigenvalues(math.pi / 4, 0.0)
    minus = h1_eigenvalues(math.pi / 4, math.pi)
    checks.append(("r1_pair_sym", plus.r1, 2.0 - _SQRT2, 1e-12))
    checks.append(("r1_pair_antisym", minus.r1, 2.0 * (_SQRT2 - 1.0), 1e-12))
    checks.append(("s_pair_sym", plus.entropy, 0.97866, 1e-5))
    checks.append(("s_pair_antisym", minus.entropy, 0.66129, 1e-5))

    local = entropy_from_delta(CLOSED_FORM.delta0)
    checks.append(("r1_balanced_coin", local.r1, 1.0 / _SQRT2, 1e-12))
    checks.append(("s_balanced_coin", local.entropy, 0.87243, 1e-5))
    checks.append(("delta0_printings", _SQRT2 / 2.0 - 0.5, (_SQRT2 - 1.0) / 2.0, 0.0))

    rows = []
    failures = 0
    for name, computed, target, tol in checks:
        err = abs(computed - target)
        ok = err <= tol
        failures += 0 if ok else 1
        rows.append((name, float(computed), float(target), float(err), "pass" if ok else "fail"))
    header = ("name", "computed", "target", "abs_error", "status")
    write_table(cfg.out, header, rows, cfg.fmt)
    return 0 if failures == 0 else 1


_COMMANDS = {
    "simulate": cmd_simulate,
    "asymptotic": cmd_asymptotic,
    "sweep-localized": cmd_sweep_localized,
    "sweep-h1": cmd_sweep_h1,
    "gaussian-scan": cmd_gaussian_scan,
    "verify": cmd_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description="Hadamard walk on the line: simulation, spectra, and entanglement.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid-n", type=int, default=None, metavar="N",
                        help="wavenumber grid size (even; default 1024 or QWALK_GRID_N)")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="output file (default: stdout)")
    common.add_argument("--format", default=None, choices=("csv", "json"),
                        help="output format (default csv)")
    common.add_argument("--config", default=None, metavar="PATH",
                        help="key = value settings file")

    plot = argparse.ArgumentParser(add_help=False)
    plot.add_argument("--plot", nargs="?", const="", default=None, metavar="PATH",
                      help="also render a figure; without PATH, named after --out")

    ic = argparse.ArgumentParser(add_help=False)
    ic.add_argument("--ic", default=None, choices=("localized", "h1", "gaussian"),
                    help="initial condition family (default localized)")
    ic.add_argument("--alpha", type=float, default=None,
                    help="localized coin angle alpha (default pi/2)")
    ic.add_argument("--beta", type=float, default=None,
                    help="localized coin phase beta (default 0)")
    ic.add_argument("--theta", type=float, default=None,
                    help="pair mixing angle theta (default pi/4)")
    ic.add_argument("--phi", type=float, default=None,
                    help="pair relative phase phi (default 0)")
    ic.add_argument("--sigma", type=float, default=None,
                    help="packet spread sigma (default 2)")

    p = sub.add_parser("simulate", parents=[common, plot, ic],
                       help="walk a state and tabulate entropy and spread per step")
    p.add_argument("--tmax", dest="t_max", type=int, default=None,
                   help="number of steps (default 200)")

    sub.add_parser("asymptotic", parents=[common, ic],
                   help="long-time reduced density by each applicable route")

    p = sub.add_parser("sweep-localized", parents=[common, plot],
                       help="asymptotic entropy over the localized coin angles")
    p.add_argument("--alpha-steps", type=int, default=None, metavar="N",
                   help="grid points over alpha in [-pi, pi) (default 64)")
    p.add_argument("--beta-steps", type=int, default=None, metavar="N",
                   help="grid points over beta in [-pi, pi) (default 64)")

    p = sub.add_parser("sweep-h1", parents=[common, plot],
                       help="asymptotic entropy over the one-hop pair angles")
    p.add_argument("--theta-steps", type=int, default=None, metavar="N",
                   help="grid points over theta in [-pi/2, pi/2) (default 64)")
    p.add_argument("--phi-steps", type=int, default=None, metavar="N",
                   help="grid points over phi in [-pi, pi) (default 64)")

    p = sub.add_parser("gaussian-scan", parents=[common, plot],
                       help="asymptotic entropy against packet spread")
    p.add_argument("--sigmas", type=_parse_sigmas, default=None, metavar="LIST",
                   help="comma-separated sigma values (default 2..32)")

    sub.add_parser("verify", parents=[common],
                   help="check the analytic constant catalog; exit 1 on failure")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _resolve(args)
        return _COMMANDS[cfg.command](cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
