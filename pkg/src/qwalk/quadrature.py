"""Uniform periodic quadrature over the wavenumber interval [-pi, pi).

Every integral in this package is a Brillouin-zone average, int dk/2pi f(k),
with a smooth 2pi-periodic integrand. For such integrands the plain uniform
rule (1/N) sum_j f(k_j) converges faster than any power of 1/N, so there is
no adaptive machinery here, just a fixed node set shared by the transforms
and the asymptotic quadratures.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = ["DEFAULT_GRID_N", "PeriodicGrid", "integrate_average"]

DEFAULT_GRID_N = 1024


@dataclass(frozen=True)
class PeriodicGrid:
    """N uniform nodes k_j = -pi + 2*pi*j/N for j = 0..N-1.

    The interval is half-open: -pi is a node, +pi is not. N must be a
    positive even integer so that k = 0 and k = +-pi/2 land exactly on
    nodes (for N divisible by 4) and the transform pairing with position
    states works out.
    """

    n: int = DEFAULT_GRID_N

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise ValueError(f"grid size must be an integer, got {self.n!r}")
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError(f"grid size must be a positive even integer, got {self.n}")

    @cached_property
    def nodes(self) -> np.ndarray:
        k = -np.pi + 2.0 * np.pi * np.arange(self.n) / self.n
        k.flags.writeable = False
        return k


def integrate_average(values) -> complex:
    """Average of samples taken on a PeriodicGrid.

    (1/N) sum_j f(k_j), the discrete form of int_{-pi}^{pi} dk/2pi f(k).
    """
    return np.mean(values)
