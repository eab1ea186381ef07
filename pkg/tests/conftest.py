"""Shared helpers: independent k-space steppers and closed spinor histories.

Everything here deliberately avoids the eigenbasis code path under test,
so the cross-checks in the suite are not self-referential.
"""

import numpy as np

from qwalk import KSpinorField


def walk_matrices(k):
    """Stacked 2x2 one-step matrices of the walk in the wavenumber picture."""
    k = np.asarray(k, dtype=np.float64)
    ek_m = np.exp(-1j * k)
    ek_p = np.exp(1j * k)
    top = np.stack([ek_m, ek_m], axis=-1)
    bottom = np.stack([ek_p, -ek_p], axis=-1)
    return np.stack([top, bottom], axis=-2) / np.sqrt(2.0)


def matrix_power_evolve(field, t):
    """Evolve a field by explicit matrix powers (no eigendecomposition)."""
    power = np.linalg.matrix_power(walk_matrices(field.grid.nodes), t)
    a = power[..., 0, 0] * field.a + power[..., 0, 1] * field.b
    b = power[..., 1, 0] * field.a + power[..., 1, 1] * field.b
    return KSpinorField(field.grid, a, b)


def _dispersion(k):
    k = np.asarray(k, dtype=np.float64)
    omega = np.arcsin(np.sin(k) / np.sqrt(2.0))
    disc = np.sqrt(1.0 + np.cos(k) ** 2)
    return omega, disc


def spinor_history_01(k, t):
    """Closed-form amplitudes at time t for the start (a, b) = (0, 1).

    Written in this package's spinor convention, so the complex values are
    directly comparable with the spectral evolution output.
    """
    omega, disc = _dispersion(k)
    k = np.asarray(k, dtype=np.float64)
    ph_m = np.exp(-1j * omega * t)
    ph_p = np.exp(1j * omega * t)
    sgn = -1.0 if t % 2 else 1.0
    ratio = np.cos(k) / disc
    a = np.exp(-1j * k) * (ph_m - sgn * ph_p) / (2.0 * disc)
    b = 0.5 * (1.0 - ratio) * ph_m + sgn * 0.5 * (1.0 + ratio) * ph_p
    return a, b


def mirrored_history_01(k, t):
    """The same history in the conjugated convention with swapped coin labels.

    Only the moduli are directly comparable with spinor_history_01; the
    complex phases differ by design.
    """
    omega, disc = _dispersion(k)
    k = np.asarray(k, dtype=np.float64)
    ph_m = np.exp(-1j * omega * t)
    ph_p = np.exp(1j * omega * t)
    sgn = -1.0 if t % 2 else 1.0
    ratio = np.cos(k) / disc
    a = 1j * np.exp(1j * k) * (ph_m - sgn * ph_p) / (2.0 * disc)
    b = 0.5 * (1.0 + ratio) * ph_m + sgn * 0.5 * (1.0 - ratio) * ph_p
    return a, b
