"""Tabular emission (CSV / JSON) and figure rendering for CLI results.

CSV is RFC-4180 flavored: a header row, CRLF line endings, numeric cells
printed with 17 significant digits so values round-trip exactly. Summary
records (sweep extrema, fitted slopes) follow the data as rows whose first
cell starts with '#'. JSON output is an array of row objects, with the
summary appended as a final object tagged "record": "summary".
"""

from __future__ import annotations

import csv
import io
import json
from typing import Optional, Sequence

__all__ = [
    "format_number",
    "render_table",
    "write_table",
    "simulate_figure",
    "sweep_figure",
    "scan_figure",
]


def format_number(value) -> str:
    if isinstance(value, bool):
        raise TypeError("booleans do not belong in numeric output")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_table(
    header: Sequence[str],
    rows: Sequence[Sequence],
    fmt: str,
    footer: Sequence[tuple[str, object]] = (),
) -> str:
    """Render rows to a CSV or JSON string."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_number(v) for v in row])
        for key, value in footer:
            writer.writerow([f"#{key}", format_number(value)])
        return buf.getvalue()
    if fmt == "json":
        records = [dict(zip(header, row)) for row in rows]
        if footer:
            summary = {"record": "summary"}
            summary.update({key: value for key, value in footer})
            records.append(summary)
        return json.dumps(records, indent=2) + "\n"
    raise ValueError(f"unknown output format {fmt!r}")


def write_table(
    path: Optional[str],
    header: Sequence[str],
    rows: Sequence[Sequence],
    fmt: str,
    footer: Sequence[tuple[str, object]] = (),
) -> None:
    """Write a rendered table to a file, or stdout when path is None."""
    text = render_table(header, rows, fmt, footer)
    if path is None:
        import sys

        sys.stdout.write(text)
    else:
        # newline='' so CSV keeps its own CRLF endings untranslated
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def simulate_figure(rows: Sequence[Sequence], path: str) -> None:
    """Entropy and spread against time, from simulate rows."""
    plt = _pyplot()
    t = [r[0] for r in rows]
    s_e = [r[1] for r in rows]
    var = [r[2] for r in rows]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6.4, 6.4), sharex=True)
    ax1.plot(t, s_e, lw=1.2)
    ax1.set_ylabel("entanglement entropy (bits)")
    ax1.set_ylim(-0.02, 1.02)
    ax2.plot(t, var, lw=1.2)
    ax2.set_ylabel("position variance")
    ax2.set_xlabel("step")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def sweep_figure(
    x_label: str,
    y_label: str,
    x_values,
    y_values,
    z_grid,
    path: str,
) -> None:
    """Heat map of a two-parameter entropy surface (z indexed [x, y])."""
    plt = _pyplot()
    import numpy as np

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    mesh = ax.pcolormesh(
        np.asarray(x_values),
        np.asarray(y_values),
        np.asarray(z_grid).T,
        shading="nearest",
        vmin=0.0,
        vmax=1.0,
    )
    ax.set_xlabel(x_label)
    ax.set_ylabel(y_label)
    fig.colorbar(mesh, ax=ax, label="asymptotic entropy (bits)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def scan_figure(rows: Sequence[Sequence], path: str) -> None:
    """Entropy and smaller eigenvalue against sigma, log-log."""
    plt = _pyplot()
    sigma = [r[0] for r in rows]
    s_e = [r[1] for r in rows]
    r2 = [r[2] for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.loglog(sigma, s_e, "o-", label="entropy")
    ax.loglog(sigma, r2, "s-", label="smaller eigenvalue")
    ax.set_xlabel("sigma")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
