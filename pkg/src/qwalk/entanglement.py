"""Reduced coin density operator and the entropy of entanglement.

Tracing the pure walker state over position leaves the 2x2 Hermitian matrix

    rho_c = [[A, B], [B*, C]],   A = sum |a_x|^2, C = sum |b_x|^2,
                                 B = sum a_x b_x*

(sums become grid averages in the wavenumber representation). Its
eigenvalues depend only on the determinant D = AC - |B|^2:

    r_{1,2} = (1 +- sqrt(1 - 4 D)) / 2

and the entropy of entanglement is S = -r1 log2 r1 - r2 log2 r2, in bits,
between 0 (product state) and 1 (maximally mixed coin).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .evolution import step
from .quadrature import integrate_average
from .states import InitialCondition, KSpinorField, PositionState, build_initial

__all__ = [
    "ReducedDensity",
    "EntanglementResult",
    "reduced_density_position",
    "reduced_density_k",
    "entropy",
    "entropy_from_delta",
    "entanglement_history",
]

TRACE_TOL = 1e-9

# Round-off can push the determinant a hair outside [0, 1/4]; values within
# this band are clamped, anything further out is treated as a logic error.
DELTA_CLAMP = 1e-12


@dataclass(frozen=True)
class ReducedDensity:
    """Coin density matrix [[a, b], [conj(b), c]] with a + c = 1."""

    a: float
    c: float
    b: complex

    def __post_init__(self):
        a = float(self.a)
        c = float(self.c)
        b = complex(self.b)
        if not (math.isfinite(a) and math.isfinite(c) and np.isfinite(b)):
            raise ValueError("density entries must be finite")
        if abs(a + c - 1.0) > TRACE_TOL:
            raise ValueError(f"trace must be 1, got a + c = {a + c!r}")
        if a < -TRACE_TOL or a > 1.0 + TRACE_TOL or c < -TRACE_TOL or c > 1.0 + TRACE_TOL:
            raise ValueError(f"diagonal entries must lie in [0, 1], got {a!r}, {c!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "b", b)

    @property
    def delta(self) -> float:
        """Determinant a*c - |b|^2; the single number the spectrum depends on."""
        return self.a * self.c - abs(self.b) ** 2


@dataclass(frozen=True)
class EntanglementResult:
    """Eigenvalue pair (r1 >= r2, r1 + r2 = 1) and the entropy in bits."""

    r1: float
    r2: float
    entropy: float


def entropy_from_delta(delta: float) -> EntanglementResult:
    """Spectrum and entropy for a determinant value in [0, 1/4]."""
    d = float(delta)
    if d < -DELTA_CLAMP or d > 0.25 + DELTA_CLAMP:
        raise ValueError(f"determinant {d!r} outside [0, 1/4]: not a valid coin density")
    d = min(max(d, 0.0), 0.25)
    gap = math.sqrt(1.0 - 4.0 * d)
    r1 = 0.5 * (1.0 + gap)
    r2 = 0.5 * (1.0 - gap)
    ent = 0.0
    for r in (r1, r2):
        if r > 0.0:
            ent -= r * math.log2(r)
    return EntanglementResult(r1=r1, r2=r2, entropy=ent)


def entropy(rd: ReducedDensity) -> EntanglementResult:
    """Entropy of entanglement of a reduced coin density."""
    return entropy_from_delta(rd.delta)


def reduced_density_position(state: PositionState) -> ReducedDensity:
    a_w = np.vdot(state.a, state.a).real
    c_w = np.vdot(state.b, state.b).real
    b_w = np.vdot(state.b, state.a)  # sum over x of a_x conj(b_x)
    return ReducedDensity(float(a_w), float(c_w), complex(b_w))


def reduced_density_k(field: KSpinorField) -> ReducedDensity:
    a_w = integrate_average(np.abs(field.a) ** 2)
    c_w = integrate_average(np.abs(field.b) ** 2)
    b_w = integrate_average(field.a * np.conj(field.b))
    return ReducedDensity(float(a_w.real), float(c_w.real), complex(b_w))


def entanglement_history(ic: InitialCondition, t_max: int) -> list[tuple[int, float]]:
    """(t, S_E) for every t from 0 to t_max along the position-space walk."""
    t_max = int(t_max)
    if t_max < 0:
        raise ValueError(f"t_max must be nonnegative, got {t_max}")
    state = build_initial(ic)
    history = []
    for t in range(t_max + 1):
        if t:
            state = step(state)
        history.append((t, entropy(reduced_density_position(state)).entropy))
    return history
