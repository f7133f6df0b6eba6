from __future__ import annotations

import math
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from idemkit import (
    RMAX,
    RMIN,
    CauchyProblem,
    GridFunction,
    GridMismatch,
    GridTooSmall,
    HeatSolutionSpec,
    NegativeInput,
    NonConvexHamiltonian,
    NonNegativeInput,
    NonPositiveH,
    Quadratic,
    RealGrid,
    SampledHamiltonian,
    axioms_report,
    burgers_residual,
    deformed_oplus,
    deformed_oplus_min,
    dequantize_value,
    dequantized_heat_field,
    heat_solution_eval,
    hopf_lax_evolve,
    maslov_semiring,
    second_dequantize,
)

INF = math.inf


def grid(lo, hi, n) -> RealGrid:
    return RealGrid(tuple(float(v) for v in np.linspace(lo, hi, n)))


def test_dequantize_examples():
    assert dequantize_value(1, 0.3) == 0
    assert dequantize_value(0, 0.3) == -INF
    assert dequantize_value(math.e, 2) == pytest.approx(2, rel=1e-15)
    with pytest.raises(NegativeInput):
        dequantize_value(-1, 1)
    with pytest.raises(NonPositiveH):
        dequantize_value(1, 0)


def test_deformed_oplus_examples():
    assert deformed_oplus(0, 0, 1) == pytest.approx(math.log(2), rel=1e-15)
    assert deformed_oplus(3.5, -INF, 0.1) == 3.5
    assert abs(deformed_oplus(0, 5, 0.01) - 5) <= 1e-12
    # the naive form overflows here
    assert deformed_oplus(1000, 999, 0.001) == pytest.approx(1000, abs=1e-12)
    assert deformed_oplus_min(0, 5, 0.01) == pytest.approx(0, abs=1e-12)


def test_maslov_semiring_homomorphism():
    s = maslov_semiring(1)
    assert s.zero == -INF and s.one == 0 and not s.exact
    d = lambda u: dequantize_value(u, 1)
    assert abs(d(5) - s.add(d(2), d(3))) <= 1e-12
    assert abs(d(6) - s.mul(d(2), d(3))) <= 1e-12
    assert abs(maslov_semiring(1e-3).add(1, 2) - 2) <= 1e-9
    with pytest.raises(NonPositiveH):
        maslov_semiring(0)


@pytest.mark.parametrize("h", [1.0, 0.1, 0.01])
def test_maslov_axioms(h):
    assert axioms_report(maslov_semiring(h)).ok


@pytest.mark.parametrize("h", [1.0, 0.1, 0.01])
def test_deformed_oplus_commutative_and_associative(h):
    rng = random.Random(12)
    for _ in range(500):
        a, b, c = (rng.uniform(-10, 10) for _ in range(3))
        assert deformed_oplus(a, b, h) == deformed_oplus(b, a, h)
        left = deformed_oplus(deformed_oplus(a, b, h), c, h)
        right = deformed_oplus(a, deformed_oplus(b, c, h), h)
        assert abs(left - right) <= 1e-12 * max(1.0, abs(left))


def test_second_dequantization():
    assert second_dequantize(-1, 1) == 0
    assert second_dequantize(-math.e**2, 1) == pytest.approx(2, rel=1e-15)
    with pytest.raises(NonNegativeInput):
        second_dequantize(0, 1)
    # min on the w side becomes the deformed (min-form) sum on the v side as h → 0
    rng = random.Random(2)
    h = 1e-3
    for _ in range(200):
        w1, w2 = -rng.uniform(0.5, 50), -rng.uniform(0.5, 50)
        v = second_dequantize(min(w1, w2), h)
        assert v == max(second_dequantize(w1, h), second_dequantize(w2, h))
        assert abs(v - deformed_oplus(second_dequantize(w1, h), second_dequantize(w2, h), h)) <= h * math.log(2) + 1e-9


@given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6), st.sampled_from([1.0, 0.1, 0.01, 1e-5]))
def test_sandwich_property(w1, w2, h):
    m = max(w1, w2)
    assert m <= deformed_oplus(w1, w2, h) <= m + h * math.log(2)


def test_hopf_lax_examples():
    g = grid(-4, 4, 801)
    S0 = GridFunction(RMIN, g, [x * x / 2 for x in g.points])
    S = hopf_lax_evolve(CauchyProblem(S0, Quadratic(), 1.0))
    at2 = S.values[g.points.index(2.0)]
    assert abs(at2 - 1.0) < 1e-3
    assert hopf_lax_evolve(CauchyProblem(S0, Quadratic(), 0.0)) == S0
    x0 = 0.5
    spike = GridFunction(RMIN, g, [0.0 if x == x0 else INF for x in g.points])
    t = 0.7
    S = hopf_lax_evolve(CauchyProblem(spike, Quadratic(), t))
    assert np.allclose(S.values, [(x - x0) ** 2 / (2 * t) for x in g.points], rtol=0, atol=1e-12)


def test_hopf_lax_zero_time_resamples():
    S0 = GridFunction(RMIN, RealGrid((0.0, 1.0, 2.0)), [3, 1, 2])
    out = hopf_lax_evolve(CauchyProblem(S0, Quadratic(), 0.0), RealGrid((1.0, 1.5)))
    assert out.values == (1, INF)


def test_hopf_lax_monotone(rng):
    g = grid(-2, 2, 81)
    for _ in range(10):
        a = [rng.uniform(0, 3) for _ in g.points]
        b = [v + rng.uniform(0, 1) for v in a]
        Ua = hopf_lax_evolve(CauchyProblem(GridFunction(RMIN, g, a), Quadratic(), 0.5))
        Ub = hopf_lax_evolve(CauchyProblem(GridFunction(RMIN, g, b), Quadratic(), 0.5))
        assert all(x <= y for x, y in zip(Ua.values, Ub.values))


def test_sampled_quadratic_hamiltonian_matches_closed_form():
    p = grid(-4, 4, 33)
    H = SampledHamiltonian(GridFunction("real", p, [q * q / 2 for q in p.points]))
    v = np.linspace(-3, 3, 13)
    L = H.lagrangian(v)
    # piecewise-linear L from a sampled H overestimates v²/2 by at most Δp²/8
    assert np.all(L >= v * v / 2 - 1e-12) and np.all(L - v * v / 2 <= 0.25**2 / 8 + 1e-12)
    assert H.lagrangian(np.array([10.0]))[0] == INF


def test_sampled_hamiltonian_drives_hopf_lax():
    p = grid(-6, 6, 49)
    ham = SampledHamiltonian(GridFunction(RMAX, p, [q * q / 2 for q in p.points]))
    x = grid(-2, 2, 41)
    S0 = GridFunction(RMIN, x, [v * v / 2 for v in x.points])
    exact = hopf_lax_evolve(CauchyProblem(S0, Quadratic(), 1.0))
    approx = hopf_lax_evolve(CauchyProblem(S0, ham, 1.0))
    assert np.max(np.abs(np.array(exact.values) - np.array(approx.values))) < 0.02


def test_non_convex_hamiltonian_rejected():
    with pytest.raises(NonConvexHamiltonian):
        SampledHamiltonian(GridFunction(RMAX, RealGrid((-1.0, 0.0, 1.0)), [0, 1, 0]))


def test_cauchy_problem_validation():
    g = RealGrid((0.0, 1.0))
    with pytest.raises(GridMismatch):
        CauchyProblem(GridFunction(RMAX, g, [0, 0]), Quadratic(), 1.0)
    with pytest.raises(ValueError):
        CauchyProblem(GridFunction(RMIN, g, [0, 0]), Quadratic(), -1.0)


def test_heat_solution_closed_form():
    heat = HeatSolutionSpec(((2.0, 0.3, 0.25),), h=0.5)
    assert heat_solution_eval(heat, 0.3, 0.0) == pytest.approx(2.0 / 0.5, rel=1e-15)
    x = np.linspace(-3, 3, 61)
    assert np.all(heat_solution_eval(heat, x, 1.0) > 0)


def _heat_residual(heat, nx, nt):
    x = np.linspace(-2, 2, nx)
    t = np.linspace(0.2, 1.2, nt)
    T, X = np.meshgrid(t, x, indexing="ij")
    u = heat_solution_eval(heat, X, T)
    dx, dt = x[1] - x[0], t[1] - t[0]
    ut = (u[2:, 1:-1] - u[:-2, 1:-1]) / (2 * dt)
    uxx = (u[1:-1, 2:] - 2 * u[1:-1, 1:-1] + u[1:-1, :-2]) / dx**2
    return np.max(np.abs(ut - heat.h / 2 * uxx))


def test_heat_solution_satisfies_heat_equation():
    heat = HeatSolutionSpec(((1.0, 0.0, 0.4), (0.5, 1.0, 0.3)), h=0.5)
    coarse, fine = _heat_residual(heat, 41, 21), _heat_residual(heat, 81, 41)
    assert math.log2(coarse / fine) >= 1.8


def test_burgers_residual_single_solution_converges():
    heat = HeatSolutionSpec(((1.0, 0.0, 0.5),), h=0.5)
    res = []
    for nx, nt in ((41, 21), (81, 41)):
        x, t = np.linspace(-2, 2, nx), np.linspace(0.5, 1.5, nt)
        res.append(burgers_residual(dequantized_heat_field([heat], x, t), x, t, heat.h))
    assert math.log2(res[0] / res[1]) >= 1.8


def test_burgers_residual_edge_cases():
    x, t = np.linspace(0, 1, 5), np.linspace(0, 1, 4)
    assert burgers_residual(np.full((4, 5), 3.25), x, t, 0.5) == 0.0
    with pytest.raises(GridTooSmall):
        burgers_residual(np.zeros((2, 5)), x, t[:2], 0.5)
    with pytest.raises(GridMismatch):
        burgers_residual(np.zeros((4, 5)), [0, 0.1, 0.3, 0.4, 0.5], t, 0.5)
    with pytest.raises(NonPositiveH):
        burgers_residual(np.zeros((4, 5)), x, t, 0.0)
