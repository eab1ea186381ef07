"""Walker states on the line, initial-condition families, and transforms.

Conventions used throughout the package:

    |Psi> = sum_x |x> (x) [ a_x |R> + b_x |L> ]

with position amplitudes a_x, b_x stored densely on an integer window
[x_min, x_max]. The wavenumber representation samples

    a~(k) = sum_x exp(-i k x) a_x

on the nodes of a PeriodicGrid, so normalization sum_x (|a_x|^2 + |b_x|^2) = 1
becomes the grid average (1/N) sum_j (|a~_j|^2 + |b~_j|^2) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .quadrature import DEFAULT_GRID_N, PeriodicGrid

__all__ = [
    "CoinSpinor",
    "PositionState",
    "KSpinorField",
    "Localized",
    "H1",
    "Gaussian",
    "Custom",
    "InitialCondition",
    "symmetric_coin",
    "build_initial",
    "fourier_transform",
    "inverse_fourier",
    "position_distribution",
    "variance",
]

# Loose construction guard against genuinely broken inputs. The tight 1e-12
# budgets for transforms and long evolutions are enforced by the test suite;
# a guard that strict would make a state object unusable a hair past the
# point where accumulated round-off is still perfectly benign.
NORM_TOL = 1e-9

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class CoinSpinor:
    """Coin amplitudes: a on |R> (step right), b on |L> (step left)."""

    a: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise ValueError("coin amplitudes must be finite")

    @property
    def norm_squared(self) -> float:
        return abs(self.a) ** 2 + abs(self.b) ** 2


def symmetric_coin() -> CoinSpinor:
    """The coin (|R> + i|L>)/sqrt(2).

    A walker carrying this coin at every occupied site has k-amplitudes with
    b~ = i a~ for all k, the condition under which the asymptotic reduced
    density collapses to the scalar weights q_weight and r_weight.
    """
    return CoinSpinor(1.0 / _SQRT2, 1j / _SQRT2)


@dataclass(frozen=True)
class PositionState:
    """Normalized amplitudes on the dense window [x_min, x_min + len(a) - 1].

    a and b are equal-length complex arrays; sites outside the window are
    implicitly zero. Arrays are copied and frozen at construction, so states
    are immutable and safe to share.
    """

    a: np.ndarray
    b: np.ndarray
    x_min: int

    def __post_init__(self):
        a = np.array(self.a, dtype=np.complex128, copy=True)
        b = np.array(self.b, dtype=np.complex128, copy=True)
        if a.ndim != 1 or b.ndim != 1 or a.size != b.size or a.size == 0:
            raise ValueError("a and b must be equal-length 1-d arrays")
        if not (np.isfinite(a).all() and np.isfinite(b).all()):
            raise ValueError("amplitudes must be finite")
        norm_sq = np.vdot(a, a).real + np.vdot(b, b).real
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: sum of squares = {norm_sq!r}")
        a.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "x_min", int(self.x_min))

    @property
    def width(self) -> int:
        return self.a.size

    @property
    def x_max(self) -> int:
        return self.x_min + self.a.size - 1

    @property
    def sites(self) -> np.ndarray:
        return np.arange(self.x_min, self.x_max + 1)

    def coin_at(self, x: int) -> CoinSpinor:
        """Amplitudes at site x; zero spinor outside the stored window."""
        if self.x_min <= x <= self.x_max:
            i = x - self.x_min
            return CoinSpinor(self.a[i], self.b[i])
        return CoinSpinor(0.0, 0.0)


@dataclass(frozen=True)
class KSpinorField:
    """Spinor samples (a~, b~) on the nodes of a PeriodicGrid.

    Normalization is the Parseval form: the grid average of |a~|^2 + |b~|^2
    equals 1.
    """

    grid: PeriodicGrid
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=np.complex128, copy=True)
        b = np.array(self.b, dtype=np.complex128, copy=True)
        if a.shape != (self.grid.n,) or b.shape != (self.grid.n,):
            raise ValueError("field arrays must match the grid size")
        if not (np.isfinite(a).all() and np.isfinite(b).all()):
            raise ValueError("field values must be finite")
        mean_sq = (np.vdot(a, a).real + np.vdot(b, b).real) / self.grid.n
        if abs(mean_sq - 1.0) > NORM_TOL:
            raise ValueError(
                f"field is not normalized: grid average of squares = {mean_sq!r}"
            )
        a.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


def _check_angle(name: str, value: float, lo: float, hi: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value < lo or value > hi:
        raise ValueError(f"{name} must lie in [{lo:g}, {hi:g}], got {value!r}")
    return value


@dataclass(frozen=True)
class Localized:
    """All weight on site 0 with coin (cos(alpha), exp(i beta) sin(alpha))."""

    alpha: float
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _check_angle("alpha", self.alpha, -math.pi, math.pi))
        object.__setattr__(self, "beta", _check_angle("beta", self.beta, -math.pi, math.pi))


@dataclass(frozen=True)
class H1:
    """Superposition of the two sites one hop from the origin.

    cos(theta)|-1> + exp(-i phi) sin(theta)|+1>, each site carrying the
    symmetric coin. theta = pi/4 with phi = 0 or pi gives the symmetric and
    antisymmetric pair states.
    """

    theta: float
    phi: float

    def __post_init__(self):
        object.__setattr__(self, "theta", _check_angle("theta", self.theta, -math.pi / 2, math.pi / 2))
        object.__setattr__(self, "phi", _check_angle("phi", self.phi, -math.pi, math.pi))


@dataclass(frozen=True)
class Gaussian:
    """Real bell-shaped profile c_x proportional to exp(-x^2/(4 sigma^2)),
    truncated at |x| <= ceil(8 sigma) and renormalized, with the symmetric
    coin at every site."""

    sigma: float

    def __post_init__(self):
        sigma = float(self.sigma)
        if not math.isfinite(sigma) or sigma <= 0.0:
            raise ValueError(f"sigma must be positive, got {sigma!r}")
        object.__setattr__(self, "sigma", sigma)


@dataclass(frozen=True)
class Custom:
    """An explicit, already-normalized PositionState."""

    state: PositionState

    def __post_init__(self):
        if not isinstance(self.state, PositionState):
            raise ValueError("Custom expects a PositionState")


InitialCondition = Union[Localized, H1, Gaussian, Custom]


def build_initial(ic: InitialCondition) -> PositionState:
    """Construct the normalized starting state for an initial-condition family."""
    if isinstance(ic, Localized):
        a0 = math.cos(ic.alpha)
        b0 = complex(math.cos(ic.beta), math.sin(ic.beta)) * math.sin(ic.alpha)
        return PositionState([a0], [b0], 0)
    if isinstance(ic, H1):
        chi = symmetric_coin()
        c_minus = math.cos(ic.theta)
        c_plus = complex(math.cos(ic.phi), -math.sin(ic.phi)) * math.sin(ic.theta)
        a = [c_minus * chi.a, 0.0, c_plus * chi.a]
        b = [c_minus * chi.b, 0.0, c_plus * chi.b]
        return PositionState(a, b, -1)
    if isinstance(ic, Gaussian):
        half = int(math.ceil(8.0 * ic.sigma))
        x = np.arange(-half, half + 1, dtype=np.float64)
        profile = np.exp(-(x * x) / (4.0 * ic.sigma * ic.sigma))
        profile /= np.sqrt(np.sum(profile * profile))
        chi = symmetric_coin()
        return PositionState(profile * chi.a, profile * chi.b, -half)
    if isinstance(ic, Custom):
        return ic.state
    raise ValueError(f"unknown initial condition: {ic!r}")


def _as_grid(grid: Union[int, PeriodicGrid]) -> PeriodicGrid:
    if isinstance(grid, PeriodicGrid):
        return grid
    return PeriodicGrid(grid)


def fourier_transform(state: PositionState, grid: Union[int, PeriodicGrid] = DEFAULT_GRID_N) -> KSpinorField:
    """Sample a~(k) = sum_x exp(-ikx) a_x (and likewise b~) on the grid nodes.

    Uses the FFT: on nodes k_j = -pi + 2*pi*j/N the phase exp(-i k_j x)
    factors into (-1)^x times the standard DFT kernel, so the sum is the FFT
    of the sign-twisted amplitudes wrapped mod N.

    Raises ValueError when the grid cannot resolve the state (N < 2x the
    support width), which would alias the spectrum.
    """
    grid = _as_grid(grid)
    n = grid.n
    if n < 2 * state.width:
        raise ValueError(
            f"grid size {n} is too small for support width {state.width}; "
            f"need at least {2 * state.width} nodes to avoid aliasing"
        )
    xs = state.sites
    idx = np.mod(xs, n)
    sign = np.where(xs % 2 == 0, 1.0, -1.0)
    ca = np.zeros(n, dtype=np.complex128)
    cb = np.zeros(n, dtype=np.complex128)
    ca[idx] = sign * state.a
    cb[idx] = sign * state.b
    return KSpinorField(grid, np.fft.fft(ca), np.fft.fft(cb))


def inverse_fourier(field: KSpinorField, support: tuple[int, int]) -> PositionState:
    """Invert fourier_transform onto the window support = (x_min, x_max).

    The window must contain the true support of the state the field was
    built from and fit within the grid (width <= N); the normalization check
    on the result catches a window that clips real amplitude.
    """
    x_min, x_max = int(support[0]), int(support[1])
    width = x_max - x_min + 1
    n = field.grid.n
    if width < 1:
        raise ValueError(f"empty support window {support!r}")
    if width > n:
        raise ValueError(f"support width {width} exceeds grid capacity {n}")
    ca = np.fft.ifft(field.a)
    cb = np.fft.ifft(field.b)
    xs = np.arange(x_min, x_max + 1)
    idx = np.mod(xs, n)
    sign = np.where(xs % 2 == 0, 1.0, -1.0)
    return PositionState(sign * ca[idx], sign * cb[idx], x_min)


def position_distribution(state: PositionState) -> dict[int, float]:
    """P(x) = |a_x|^2 + |b_x|^2 over the stored window.

    Sites whose probability is exactly zero (e.g. the parity-forbidden
    sublattice after a walk) are omitted from the map.
    """
    probs = np.abs(state.a) ** 2 + np.abs(state.b) ** 2
    xs = state.sites
    return {int(x): float(p) for x, p in zip(xs, probs) if p != 0.0}


def variance(dist: dict[int, float]) -> float:
    """Var(x) = sum x^2 P(x) - (sum x P(x))^2 of a position distribution."""
    xs = np.fromiter(dist.keys(), dtype=np.float64, count=len(dist))
    ps = np.fromiter(dist.values(), dtype=np.float64, count=len(dist))
    m1 = float(np.dot(xs, ps))
    m2 = float(np.dot(xs * xs, ps))
    return m2 - m1 * m1
