"""Dequantization maps, the deformed semirings A_h, and the Hamilton–Jacobi chain.

The heat equation u_t = (h/2) u_xx becomes the (integrated) Burgers equation
w_t + ½ w_x² − (h/2) w_xx = 0 under w = −h ln u, and tends to the
Hamilton–Jacobi equation w_t + ½ w_x² = 0 as h → 0. The resolving operator
of the limit problem is an rmin integral operator (Hopf–Lax).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .analysis import GridFunction, Kernel, RealGrid, integral_operator_apply, legendre_transform
from .errors import (
    GridMismatch,
    GridTooSmall,
    NegativeInput,
    NonConvexHamiltonian,
    NonNegativeInput,
    NonPositiveH,
    ValidationError,
)
from .semiring import INF, NEG_INF, RMAX, RMIN, Maslov

# below this the evolution time counts as zero
T_EPSILON = 1e-12
# slack on discrete second differences when testing convexity
CONVEXITY_SLACK = 1e-12


def _check_h(h) -> None:
    if not h > 0:
        raise NonPositiveH(f"h must be positive, got {h!r}")


def dequantize_value(u: float, h: float) -> float:
    """D_h(u) = h ln u, with D_h(0) = −∞."""
    _check_h(h)
    if u < 0:
        raise NegativeInput(f"D_h is defined on nonnegative reals, got {u!r}")
    if u == 0:
        return NEG_INF
    return h * math.log(u)


def deformed_oplus(w1: float, w2: float, h: float) -> float:
    """h ln(e^{w1/h} + e^{w2/h}) in max-factored form; −∞ is neutral."""
    _check_h(h)
    m = max(w1, w2)
    if m == NEG_INF:
        return NEG_INF
    if m == INF:
        return INF
    return m + h * math.log1p(math.exp(-abs(w1 - w2) / h))


def deformed_oplus_min(w1: float, w2: float, h: float) -> float:
    """−h ln(e^{−w1/h} + e^{−w2/h}); tends to min as h → 0 and +∞ is neutral."""
    return -deformed_oplus(-w1, -w2, h)


def maslov_semiring(h: float) -> Maslov:
    return Maslov(h)


def second_dequantize(w: float, h: float) -> float:
    """v = h ln(−w) on negative reals."""
    _check_h(h)
    if not w < 0:
        raise NonNegativeInput(f"second dequantization needs w < 0, got {w!r}")
    return h * math.log(-w)


# -- Hamilton–Jacobi via Hopf–Lax -------------------------------------------------


@dataclass(frozen=True)
class Quadratic:
    """H(p) = p²/2, whose Lagrangian is L(v) = v²/2."""

    def lagrangian(self, v: np.ndarray) -> np.ndarray:
        return 0.5 * v * v


@dataclass(frozen=True)
class SampledHamiltonian:
    """Convex H sampled on a p-grid (an rmax or real-valued GridFunction)."""

    f: GridFunction
    breakpoints: tuple = field(init=False, repr=False)
    values: tuple = field(init=False, repr=False)

    def __post_init__(self):
        grid = self.f.domain
        if not isinstance(grid, RealGrid) or len(grid) < 2:
            raise ValidationError("a sampled Hamiltonian needs a real grid with at least two points")
        p = np.asarray(grid.points, dtype=float)
        H = np.asarray(self.f.values, dtype=float)
        if not np.all(np.isfinite(H)):
            raise ValidationError("sampled Hamiltonian values must be finite")
        slopes = np.diff(H) / np.diff(p)
        if np.any(np.diff(slopes) < -CONVEXITY_SLACK * np.maximum(1.0, np.abs(slopes[1:]))):
            raise NonConvexHamiltonian("sampled Hamiltonian has a negative second difference")
        # L(v) = sup_p (p v − H(p)) is piecewise linear with kinks at the chord slopes;
        # evaluating it there (a max-plus Legendre transform of −H) fixes it everywhere
        neg_h = GridFunction(RMAX, grid, [-float(x) for x in H])
        kinks = np.unique(slopes)
        Lk = legendre_transform(neg_h, RealGrid(tuple(float(k) for k in kinks))).values
        object.__setattr__(self, "breakpoints", tuple(float(k) for k in kinks))
        object.__setattr__(self, "values", tuple(Lk))

    def lagrangian(self, v: np.ndarray) -> np.ndarray:
        """L(v) inside the covered velocity range, +∞ outside it."""
        bp = np.asarray(self.breakpoints)
        vals = np.asarray(self.values)
        out = np.interp(v, bp, vals) if len(bp) > 1 else np.full_like(v, vals[0], dtype=float)
        return np.where((v < bp[0]) | (v > bp[-1]), INF, out)


Hamiltonian = Union[Quadratic, SampledHamiltonian]


@dataclass(frozen=True)
class CauchyProblem:
    S0: GridFunction
    hamiltonian: Hamiltonian
    t: float

    def __post_init__(self):
        if self.S0.semiring is not RMIN:
            raise GridMismatch(f"initial data must be rmin-valued, got {self.S0.semiring.id}")
        if not isinstance(self.S0.domain, RealGrid):
            raise GridMismatch("initial data must live on a real grid")
        if not self.t >= 0:
            raise ValidationError(f"evolution time must be nonnegative, got {self.t!r}")


def hopf_lax_kernel(problem: CauchyProblem, xgrid: RealGrid) -> Kernel:
    """K_t(x, y) = t·L((x − y)/t) over rmin."""
    t = problem.t
    x = np.asarray(xgrid.points, dtype=float)
    y = np.asarray(problem.S0.domain.points, dtype=float)
    v = (x[:, None] - y[None, :]) / t
    K = t * problem.hamiltonian.lagrangian(v)
    return Kernel(RMIN, xgrid, problem.S0.domain, K.tolist(), check=False)


def hopf_lax_evolve(problem: CauchyProblem, xgrid: RealGrid | None = None) -> GridFunction:
    """S(x, t) = min_y [S0(y) + t·L((x − y)/t)] on ``xgrid`` (default: the S0 grid).

    At t = 0 the operator is the identity: points of ``xgrid`` that are also
    S0 sample points keep their value, all others get 𝟘 = +∞.
    """
    xgrid = problem.S0.domain if xgrid is None else xgrid
    if not isinstance(xgrid, RealGrid):
        raise GridMismatch("Hopf–Lax output grid must be a real grid")
    if problem.t < T_EPSILON:
        lookup = dict(zip(problem.S0.domain.points, problem.S0.values))
        return GridFunction(RMIN, xgrid, [lookup.get(p, INF) for p in xgrid.points], check=False)
    return integral_operator_apply(hopf_lax_kernel(problem, xgrid), problem.S0)


# -- heat equation and the Burgers residual --------------------------------------------


@dataclass(frozen=True)
class HeatSolutionSpec:
    """Gaussian mixture Σ cᵢ (σᵢ² + ht)^{-1/2} exp(−(x − μᵢ)² / (2(σᵢ² + ht)))."""

    components: tuple  # of (amplitude, center, sigma2)
    h: float

    def __post_init__(self):
        _check_h(self.h)
        comps = tuple(tuple(c) for c in self.components)
        for c, mu, sigma2 in comps:
            if not c > 0:
                raise ValidationError(f"amplitudes must be positive, got {c!r}")
            if not sigma2 > 0:
                raise ValidationError(f"widths must be positive, got {sigma2!r}")
        object.__setattr__(self, "components", comps)


def heat_solution_eval(heat: HeatSolutionSpec, x, t):
    """Exact solution of u_t = (h/2) u_xx; works elementwise on arrays."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    u = 0.0
    for c, mu, sigma2 in heat.components:
        var = sigma2 + heat.h * t
        u = u + c / np.sqrt(var) * np.exp(-((x - mu) ** 2) / (2 * var))
    return u


def burgers_residual(w, x: Sequence[float], t: Sequence[float], h: float) -> float:
    """Max interior |w_t + ½ w_x² − (h/2) w_xx| by central differences.

    ``w[n][i]`` is the value at time ``t[n]`` and position ``x[i]``; both
    grids must be uniform. The first and last time layers (and the spatial
    boundary) are excluded.
    """
    _check_h(h)
    W = np.asarray(w, dtype=float)
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    if len(x) < 3 or len(t) < 3:
        raise GridTooSmall("residual needs at least 3 points in x and in t")
    if W.shape != (len(t), len(x)):
        raise GridMismatch(f"w has shape {W.shape}, expected {(len(t), len(x))}")
    dx, dt = np.diff(x), np.diff(t)
    if not (np.allclose(dx, dx[0], rtol=1e-9, atol=0) and np.allclose(dt, dt[0], rtol=1e-9, atol=0)):
        raise GridMismatch("residual needs uniform grids")
    if dx[0] <= 0 or dt[0] <= 0:
        raise GridMismatch("grids must be increasing")
    dx, dt = (x[-1] - x[0]) / (len(x) - 1), (t[-1] - t[0]) / (len(t) - 1)
    core = W[1:-1, 1:-1]
    w_t = (W[2:, 1:-1] - W[:-2, 1:-1]) / (2 * dt)
    w_x = (W[1:-1, 2:] - W[1:-1, :-2]) / (2 * dx)
    w_xx = (W[1:-1, 2:] - 2 * core + W[1:-1, :-2]) / (dx * dx)
    r = w_t + 0.5 * w_x**2 - 0.5 * h * w_xx
    return float(np.max(np.abs(r)))


def dequantized_heat_field(specs: Sequence[HeatSolutionSpec], x, t) -> np.ndarray:
    """w = w₁ ⊕_h w₂ ⊕_h … with wᵢ = −h ln uᵢ, sampled as w[n][i] at (t[n], x[i])."""
    if not specs:
        raise ValidationError("need at least one heat solution")
    h = specs[0].h
    if any(sp.h != h for sp in specs):
        raise ValidationError("all components must share h")
    T, X = np.meshgrid(np.asarray(t, float), np.asarray(x, float), indexing="ij")
    fields = [-h * np.log(heat_solution_eval(sp, X, T)) for sp in specs]
    out = fields[0]
    for w in fields[1:]:
        m = np.minimum(out, w)
        out = m - h * np.log1p(np.exp(-np.abs(out - w) / h))
    return out
