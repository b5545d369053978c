import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schwarzflow import (
    AnalyticDatum,
    CauchyData,
    Circle,
    Ellipse,
    Line,
    RiemannKernel,
    cauchy_data_from_solution,
    j0_product,
    solve_cauchy_general,
    solve_cauchy_helmholtz,
    solve_cauchy_laplace,
)
from schwarzflow.errors import KernelUnnormalized
from schwarzflow.suites import plane_wave_solution, power_solution
from schwarzflow.verify import Helmholtz, Laplace, pde_residual

CIRCLE = Circle(1.0)
ELLIPSE = Ellipse(2.0, 1.0)
XAXIS = Line()

CIRCLE_POINTS = [1.3 + 0.4j, -0.6 + 0.3j, 0.2 - 1.9j, -1.5 - 1.0j, 0.4 + 0.55j, 2.4j, -2.1 + 0.2j, 0.7 - 0.3j]
ELLIPSE_POINTS = [2.6 + 0.5j, -2.2 + 1.1j, 0.4 + 1.6j, -0.9 - 1.4j, 1.2 - 0.4j, -1.0 + 0.45j, 3.5 + 2.0j, -0.3 - 0.6j]
LINE_POINTS = [0.3 + 0.7j, -1.2 + 1.5j, 0.9 - 0.4j, 2.0 - 1.8j, -0.5 + 0.2j, 1.1 + 2.3j, -1.9 - 0.9j, 0.0 + 1.0j]


def test_constant_solution():
    data = CauchyData(AnalyticDatum.constant(2.5), AnalyticDatum.zero("neumann"))
    for curve, z in ((CIRCLE, 1.7 + 0.2j), (ELLIPSE, 0.5 + 1.5j), (XAXIS, 2 - 1j)):
        assert solve_cauchy_laplace(curve, data, z) == pytest.approx(2.5, abs=1e-14)


def test_circle_re_z_squared_example():
    data = power_solution(CIRCLE, 1.0, 2)
    assert solve_cauchy_laplace(CIRCLE, data, (1.3, 0.4)) == pytest.approx(1.53, abs=1e-10)


@pytest.mark.parametrize("c,n", [(1.0, 2), (-1j, 3), (1.0, 4)])
@pytest.mark.parametrize("curve,points", [(CIRCLE, CIRCLE_POINTS), (ELLIPSE, ELLIPSE_POINTS)])
def test_laplace_manufactured(curve, points, c, n):
    data = power_solution(curve, c, n)
    for z in points:
        assert abs(solve_cauchy_laplace(curve, data, z) - (c * z ** n).real) < 1e-8


@settings(max_examples=20, deadline=None)
@given(st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False),
       st.integers(1, 4), st.floats(1.1, 2.5), st.floats(0.1, 3.0))
def test_laplace_random_harmonic_polynomials(c, n, s, theta):
    z = s * complex(2 * math.cos(theta), math.sin(theta))
    data = power_solution(ELLIPSE, c, n)
    assert abs(solve_cauchy_laplace(ELLIPSE, data, z) - (c * z ** n).real) < 1e-8 * (1 + abs(c) * abs(z) ** n)


@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("curve,points", [(CIRCLE, CIRCLE_POINTS), (XAXIS, LINE_POINTS)])
def test_helmholtz_plane_wave(curve, points, lam):
    data = plane_wave_solution(curve, lam)
    for z in points:
        assert abs(solve_cauchy_helmholtz(curve, data, lam, z) - math.cos(lam * z.real)) < 1e-7


def test_helmholtz_line_cos_y():
    data = plane_wave_solution(XAXIS, 2.0, along="y")
    assert abs(solve_cauchy_helmholtz(XAXIS, data, 2.0, (0.3, 0.7)) - math.cos(1.4)) < 1e-7


def test_helmholtz_lambda_zero_is_laplace():
    for curve, points in ((CIRCLE, CIRCLE_POINTS), (ELLIPSE, ELLIPSE_POINTS), (XAXIS, LINE_POINTS)):
        data = power_solution(curve, 0.3 - 1j, 3)
        for z in points:
            assert abs(solve_cauchy_helmholtz(curve, data, 0.0, z) - solve_cauchy_laplace(curve, data, z)) < 1e-12


def test_general_kernel_consistency():
    lam = 1.0
    data = plane_wave_solution(CIRCLE, lam)
    builtin = RiemannKernel.helmholtz(lam)
    series_only = RiemannKernel(lambda z0, w0, z, w: j0_product(lam ** 2, (z - z0) * (w - w0)))
    unit = RiemannKernel(lambda z0, w0, z, w: np.ones(np.broadcast(z, w).shape, dtype=complex))
    lap = power_solution(CIRCLE, 0.3 - 1j, 2)
    for z in CIRCLE_POINTS:
        ref = solve_cauchy_helmholtz(CIRCLE, data, lam, z)
        assert abs(solve_cauchy_general(CIRCLE, data, builtin, z) - ref) < 1e-10
        assert abs(solve_cauchy_general(CIRCLE, data, series_only, z) - ref) < 1e-8
        assert abs(solve_cauchy_general(CIRCLE, lap, unit, z) - solve_cauchy_laplace(CIRCLE, lap, z)) < 1e-10


def test_general_kernel_with_first_order_terms():
    # u = exp(al z + be w) solves u_zw + A u_z + B u_w + C u = 0 when al be + A al + B be + C = 0
    A, B, al, be = 0.3 + 0.1j, -0.2, 0.5, 0.4j
    C = -(al * be + A * al + B * be)
    kernel = RiemannKernel.constant_coefficients(A, B, C)
    for curve, points in ((CIRCLE, CIRCLE_POINTS), (ELLIPSE, ELLIPSE_POINTS)):
        e = lambda z, w: np.exp(al * z + be * w)
        data = cauchy_data_from_solution(curve, e, lambda z, w: al * e(z, w), lambda z, w: be * e(z, w))
        for z in points:
            assert abs(solve_cauchy_general(curve, data, kernel, z) - cmath.exp(al * z + be * z.conjugate())) < 1e-8


def test_kernel_normalization_is_enforced():
    doubled = RiemannKernel(lambda z0, w0, z, w: 2 * np.ones(np.broadcast(z, w).shape, dtype=complex))
    data = power_solution(CIRCLE, 1.0, 2)
    with pytest.raises(KernelUnnormalized):
        solve_cauchy_general(CIRCLE, data, doubled, 1.5 + 0.5j)


def test_kernel_partials_fall_back_to_contour_derivative():
    lam = 1.5
    explicit = RiemannKernel.helmholtz(lam)
    implicit = RiemannKernel(explicit.R_eval)
    z0, w0, z, w = 0.2 + 0.1j, 0.2 - 0.1j, 1.1 + 0.4j, 0.7 - 0.9j
    for a, b in zip(explicit.partials(z0, w0, z, w), implicit.partials(z0, w0, z, w)):
        assert abs(a - b) < 1e-10


def test_representation_solves_the_pde():
    pts = [complex(2.6 * math.cos(t), 1.6 * math.sin(t)) for t in np.linspace(0.2, 6.1, 16)]
    data = power_solution(ELLIPSE, -1j, 3)
    f = lambda x, y: solve_cauchy_laplace(ELLIPSE, data, (x, y)).real
    assert pde_residual(f, Laplace(), pts).max_error < 1e-5
    lam = 1.0
    data = plane_wave_solution(CIRCLE, lam)
    pts = [1.8 * cmath.exp(1j * t) for t in np.linspace(0.2, 6.1, 16)]
    f = lambda x, y: solve_cauchy_helmholtz(CIRCLE, data, lam, (x, y)).real
    rep = pde_residual(f, Helmholtz(lam), pts, tolerance=1e-4, relative=True)
    assert rep.passed


def test_boundary_recovery_is_at_least_linear():
    data = power_solution(ELLIPSE, 0.5 + 0.5j, 3)
    zs, normals = ELLIPSE.boundary_samples(6)
    for z, n in zip(map(complex, zs), map(complex, normals)):
        phi = complex(data.phi(z, z.conjugate())).real
        errs = [abs(solve_cauchy_laplace(ELLIPSE, data, z + eps * n) - phi) for eps in (1e-2, 1e-3, 1e-4)]
        assert errs[1] <= 0.15 * errs[0] + 1e-12
        assert errs[2] <= 0.15 * errs[1] + 1e-12
