"""Exact long-time entanglement from time-independent quadratures.

In the long-time limit the oscillatory cross terms of the reduced coin
density average out and the entries become stationary integrals over the
eigensystem. With F, G the eigenbasis projections of the initial field and
|u| = 1, the general route is

    A = avg( alpha^4 |F|^2 + beta^4 |G|^2 )
    C = avg( alpha^4 |F|^2 |v|^2 + beta^4 |G|^2 |w|^2 )
    B = avg( alpha^4 |F|^2 u v*  + beta^4 |G|^2 u w*  )

For fields whose coin satisfies b~ = i a~ at every k the same integrals
collapse to scalar weights against g(k) = |a~(0)|^2:

    A = avg(Q g),  B = avg(R g),  C = 1 - A

with Q and R given by q_weight and r_weight below. Two initial-condition
families admit fully closed forms (localized_delta / localized_entropy and
h1_eigenvalues); the constants they share live in ClosedFormConstants.

The phase of B depends on where the spinor convention puts the coin phases;
only |B| enters the determinant and hence the spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .entanglement import EntanglementResult, ReducedDensity, entropy, entropy_from_delta
from .quadrature import DEFAULT_GRID_N, PeriodicGrid, integrate_average
from .spectral import eigensystem, fg_factors
from .states import Gaussian, KSpinorField, build_initial, fourier_transform

__all__ = [
    "AsymptoticCoefficients",
    "ClosedFormConstants",
    "CLOSED_FORM",
    "CLOSED_FORM_COEFFICIENTS",
    "q_weight",
    "r_weight",
    "asymptotic_reduced_density",
    "asymptotic_reduced_density_symmetric",
    "localized_delta",
    "localized_entropy",
    "appendix_coefficients",
    "h1_eigenvalues",
    "gaussian_asymptotic_entropy",
]

_SQRT2 = math.sqrt(2.0)

SYMMETRY_TOL = 1e-10
CONSISTENCY_TOL = 1e-10


@dataclass(frozen=True)
class AsymptoticCoefficients:
    """The seven constants behind the localized-coin closed form."""

    c1: float
    c2: float
    c3: float
    b1: float
    b2: float
    b3: float
    b4: float


@dataclass(frozen=True)
class ClosedFormConstants:
    """Radical constants of the two closed-form families."""

    delta0: float
    b0: float
    b_plus: float
    b_minus: float
    b_prime: float


# The whole family is generated from b1 = 1/2 - sqrt2/4 so that the exact
# relations between members (c1 = b1 + 1/2, b2 = -b1, b4 = sqrt2 b1, ...)
# hold as float identities, not merely within round-off. Tests cross-check
# each member against its independent radical printing.
_B1 = 0.5 - _SQRT2 / 4.0

CLOSED_FORM_COEFFICIENTS = AsymptoticCoefficients(
    c1=_B1 + 0.5,
    c2=(_B1 + 0.5) - 2.0 * _B1,
    c3=_B1,
    b1=_B1,
    b2=-_B1,
    b3=_B1,
    b4=_SQRT2 * _B1,
)

# The site-pair constants come straight from their radical forms. They are
# mutually consistent to a couple of ulps, which the quadrature checks cover;
# no exact float identities are claimed within this family.
_B_PLUS = (_SQRT2 - 1.0) ** 2 / 2.0
_B_PRIME = (3.0 * _SQRT2 - 4.0) / 2.0

CLOSED_FORM = ClosedFormConstants(
    delta0=(_SQRT2 - 1.0) / 2.0,
    b0=_B_PLUS + _B_PRIME,
    b_plus=_B_PLUS,
    b_minus=_B_PLUS + 2.0 * _B_PRIME,
    b_prime=_B_PRIME,
)


def q_weight(k):
    """Q(k) = 1 + sin k cos k / (1 + cos^2 k); averages to 1 over the zone."""
    c = np.cos(k)
    return 1.0 + np.sin(k) * c / (1.0 + c * c)


def r_weight(k):
    """R(k) = exp(-ik) sin k / (1 + cos^2 k)."""
    c = np.cos(k)
    return np.exp(-1j * np.asarray(k, dtype=np.float64)) * np.sin(k) / (1.0 + c * c)


def asymptotic_reduced_density(field: KSpinorField) -> ReducedDensity:
    """Long-time reduced density of an arbitrary initial field (general route)."""
    es = eigensystem(field.grid.nodes)
    fg = fg_factors(es, field)
    wa = es.alpha**4 * np.abs(fg.f) ** 2
    wb = es.beta**4 * np.abs(fg.g) ** 2
    a_bar = integrate_average(wa + wb)  # |u| = 1
    c_bar = integrate_average(wa * np.abs(es.v) ** 2 + wb * np.abs(es.w) ** 2)
    b_bar = integrate_average(wa * es.u * np.conj(es.v) + wb * es.u * np.conj(es.w))
    return ReducedDensity(float(a_bar.real), float(c_bar.real), complex(b_bar))


def asymptotic_reduced_density_symmetric(
    weights: Union[KSpinorField, np.ndarray],
    grid: Optional[PeriodicGrid] = None,
) -> ReducedDensity:
    """Long-time reduced density via the scalar Q/R weights.

    Accepts either a KSpinorField whose coin satisfies b~ = i a~ at every
    node (checked to SYMMETRY_TOL; the weights are then |a~|^2, whose grid
    average is 1/2 for a normalized field) or a raw array of weight samples
    on the grid nodes, which is integrated exactly as given.
    """
    if isinstance(weights, KSpinorField):
        if grid is not None and grid != weights.grid:
            raise ValueError("grid argument conflicts with the field's own grid")
        dev = float(np.max(np.abs(weights.b - 1j * weights.a)))
        if dev > SYMMETRY_TOL:
            raise ValueError(
                f"field does not satisfy the symmetric-coin condition b~ = i a~ "
                f"(max deviation {dev:.3e})"
            )
        grid = weights.grid
        w = np.abs(weights.a) ** 2
    else:
        w = np.asarray(weights, dtype=np.float64)
        if w.ndim != 1:
            raise ValueError("weights must be a 1-d array of samples")
        if grid is None:
            grid = PeriodicGrid(w.size)
        elif w.size != grid.n:
            raise ValueError("weights length must match the grid size")
        if not np.isfinite(w).all() or (w < 0.0).any():
            raise ValueError("weights must be finite and nonnegative")
    k = grid.nodes
    a_bar = float(integrate_average(q_weight(k) * w))
    b_bar = complex(integrate_average(r_weight(k) * w))
    return ReducedDensity(a_bar, 1.0 - a_bar, b_bar)


def localized_delta(alpha, beta):
    """Determinant of the long-time coin density for a walker started at the
    origin with coin (cos(alpha), exp(i beta) sin(alpha)):

        Delta(alpha, beta) = Delta0 - 2 b1^2 cos(beta) sin(4 alpha)

    ranging over [Delta0 - 2 b1^2, 1/4]. Accepts scalars or arrays.
    """
    d0 = CLOSED_FORM.delta0
    b1 = CLOSED_FORM_COEFFICIENTS.b1
    return d0 - (2.0 * b1 * b1) * np.cos(beta) * np.sin(4.0 * np.asarray(alpha, dtype=np.float64))


def localized_entropy(alpha: float, beta: float) -> EntanglementResult:
    """Closed-form long-time entanglement for the localized family."""
    return entropy_from_delta(float(localized_delta(alpha, beta)))


def _coefficient_quadratures(grid: PeriodicGrid) -> AsymptoticCoefficients:
    """The seven coefficient integrals evaluated on a grid, unchecked."""
    k = grid.nodes
    es = eigensystem(k)
    a4 = es.alpha**4
    bw4 = es.beta**4
    v2 = np.abs(es.v) ** 2
    w2 = np.abs(es.w) ** 2
    e1 = 1.0 - _SQRT2 * np.cos(es.omega - k)
    e2 = 1.0 + _SQRT2 * np.cos(es.omega + k)
    avg = lambda f: float(integrate_average(f))
    c1 = avg(a4 + bw4)
    c2 = avg(a4 * v2 + bw4 * w2)
    b1 = -avg(a4 * e1 + bw4 * e2)
    b2 = -avg(a4 * v2 * e1 + bw4 * w2 * e2)
    b3 = avg(a4 * e1 * e1 + bw4 * e2 * e2)
    b4 = 2.0 * avg(a4 * np.sin(es.omega - k) ** 2 + bw4 * np.sin(es.omega + k) ** 2)
    return AsymptoticCoefficients(c1=c1, c2=c2, c3=b1, b1=b1, b2=b2, b3=b3, b4=b4)


def appendix_coefficients(grid: Optional[PeriodicGrid] = None) -> AsymptoticCoefficients:
    """Compute the seven coefficients by quadrature.

    Each value is checked against its closed form; a mismatch beyond
    CONSISTENCY_TOL means the eigensystem or the quadrature is broken and
    raises RuntimeError. At the default grid the agreement is at the
    round-off level.
    """
    grid = grid if grid is not None else PeriodicGrid()
    computed = _coefficient_quadratures(grid)
    target = CLOSED_FORM_COEFFICIENTS
    for name in ("c1", "c2", "c3", "b1", "b2", "b3", "b4"):
        got = getattr(computed, name)
        want = getattr(target, name)
        if abs(got - want) > CONSISTENCY_TOL:
            raise RuntimeError(
                f"coefficient {name} quadrature {got!r} disagrees with closed form "
                f"{want!r} beyond {CONSISTENCY_TOL:g} (grid n = {grid.n})"
            )
    return computed


def h1_eigenvalues(theta: float, phi: float) -> EntanglementResult:
    """Closed-form long-time entanglement for the one-hop pair family.

    The spectrum is r_{1,2} = 1/2 +- sqrt((b0 - b' s2t cos(phi))^2
    + 2 (b+ s2t sin(phi))^2) with s2t = sin(2 theta). theta = 0 collapses to
    a single occupied site and reproduces the localized level; theta = pi/4
    with phi = 0 or pi gives the extreme levels of the family.
    """
    theta = float(theta)
    phi = float(phi)
    s2t = math.sin(2.0 * theta)
    x = CLOSED_FORM.b0 - CLOSED_FORM.b_prime * s2t * math.cos(phi)
    y = CLOSED_FORM.b_plus * s2t * math.sin(phi)
    gap = math.sqrt(x * x + 2.0 * y * y)
    return entropy_from_delta(0.25 - gap * gap)


def gaussian_asymptotic_entropy(sigma: float, grid: Optional[PeriodicGrid] = None) -> float:
    """Long-time entanglement entropy of a bell-shaped packet of spread sigma.

    When no grid is given, the default size is doubled until it resolves the
    truncated packet support without aliasing.
    """
    state = build_initial(Gaussian(sigma))
    if grid is None:
        n = DEFAULT_GRID_N
        while n < 2 * state.width:
            n *= 2
        grid = PeriodicGrid(n)
    field = fourier_transform(state, grid)
    return entropy(asymptotic_reduced_density_symmetric(field)).entropy
