"""Acceptance suite: one PASS/FAIL line per criterion with its pinned tolerance.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import cmath
import contextlib
import io
import math

import numpy as np

from schwarzflow import (
    AnalyticDatum,
    Circle,
    CircleFamily,
    ConfocalEllipseFamily,
    ConstantArea,
    ConstantEccentricity,
    Ellipse,
    EllipseFamily,
    GapConservation,
    GrowthScenario,
    HeleShawParams,
    HelmholtzKernel,
    Line,
    PrescribedRates,
    growth_pressure,
    interfocal_density,
    kinematic_check,
    neumann_jump,
    pde_residual,
    pressure_sink_source,
    solve_cauchy_helmholtz,
    solve_cauchy_laplace,
)
from schwarzflow.cli import main
from schwarzflow.heleshaw import circle_surface_tension, gap_integrand, gap_ratio, harmonic_gap_pressure
from schwarzflow.suites import off_curve_points, plane_wave_solution, power_solution, run_suite
from schwarzflow.verify import Helmholtz

K1 = HeleShawParams(1.0)
D0 = math.sqrt(3)
ELLIPSE_POINTS = [2.6 + 0.5j, -2.2 + 1.1j, 0.4 + 1.6j, -0.9 - 1.4j, 1.2 - 0.4j, -1.0 + 0.45j, 3.5 + 2.0j, -6.0 - 0.2j]


def verdict(number, title, error, tolerance):
    ok = bool(np.isfinite(error) and error < tolerance)
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title}  max_error={error:.3e}  tolerance={tolerance:.0e}")
    assert ok


def test_01_neumann_line():
    err = 0.0
    for alpha in (0.0, 0.7, -1.3):
        psi = AnalyticDatum(lambda z, w, al=alpha: al - 2 * (z - w) / 2j, "neumann")
        for y0 in (0.1, 1.0, 5.0):
            err = max(err, abs(neumann_jump(Line(), psi, (0.4, y0)) - 2 * alpha * y0))
    verdict(1, "Neumann reflection on the x-axis", err, 1e-10)


def test_02_neumann_circle():
    err = 0.0
    for a, beta in ((1.0, 0.5), (2.0, -1.0)):
        psi = AnalyticDatum.constant(beta, "neumann")
        for r0, th in zip((0.3, 0.6, 0.9, 1.2, 1.6, 2.2, 3.0, 4.5), np.linspace(-2.8, 2.9, 8)):
            z0 = a * r0 * cmath.exp(1j * th)
            err = max(err, abs(neumann_jump(Circle(a), psi, z0) - a * beta * math.log(r0 ** 2)))
    verdict(2, "Neumann reflection on circles", err, 1e-9)


def test_03_cauchy_laplace():
    err = 0.0
    for curve in (Circle(1.0), Ellipse(2.0, 1.0)):
        pts = off_curve_points(curve, 16)
        for c, n in ((1.0, 2), (-1j, 3), (1.0, 4)):
            data = power_solution(curve, c, n)
            for z in pts:
                err = max(err, abs(solve_cauchy_laplace(curve, data, z) - (c * z ** n).real))
    verdict(3, "Cauchy representation, harmonic polynomials", err, 1e-8)


def test_04_cauchy_helmholtz():
    err = err0 = 0.0
    for curve in (Circle(1.0), Line()):
        pts = off_curve_points(curve, 8)
        for lam in (0.5, 1.0, 2.0):
            data = plane_wave_solution(curve, lam)
            for z in pts:
                err = max(err, abs(solve_cauchy_helmholtz(curve, data, lam, z) - math.cos(lam * z.real)))
        data = power_solution(curve, 0.3 - 1j, 3)
        for z in pts:
            err0 = max(err0, abs(solve_cauchy_helmholtz(curve, data, 0.0, z) - solve_cauchy_laplace(curve, data, z)))
    ok0 = err0 < 1e-12
    print(f"\n  lambda = 0 against the Laplace representation: max_error={err0:.3e} tolerance=1e-12")
    verdict(4, "Helmholtz representation, plane waves", err if ok0 else math.inf, 1e-7)


def test_05_heleshaw_circle():
    rng = np.random.default_rng(20260501)
    fam = CircleFamily(1.0, PrescribedRates(1.0))
    r = rng.uniform(1.0, 5.0, 20)
    th = rng.uniform(0, 2 * math.pi, 20)
    err = 0.0
    for gamma in (0.0, 0.3):
        params = HeleShawParams(1.0, circle_surface_tension(fam, gamma) if gamma else None)
        for z in r * np.exp(1j * th):
            exact = -0.5 * math.log(abs(z) ** 2) + gamma
            err = max(err, abs(pressure_sink_source(fam, 0.0, params, complex(z)) - exact))
    verdict(5, "Hele-Shaw circle against the log closed form", err, 1e-10)


def test_06_heleshaw_constant_eccentricity():
    fam = EllipseFamily(2.0, 1.0, ConstantEccentricity(0.5))
    a, b, abdot = 2.0, 1.0, 1.0
    err = 0.0
    for z in ELLIPSE_POINTS:
        exact = -(abdot / 2) * (math.log(abs(z + cmath.sqrt(z - D0) * cmath.sqrt(z + D0))) - math.log(a + b))
        err = max(err, abs(pressure_sink_source(fam, 0.0, K1, z) - exact))
    verdict(6, "Hele-Shaw ellipse, constant eccentricity", err, 1e-8)


def chebyshev_flux(fam, k, n=64):
    # mu times sqrt(d^2 - x^2) is a polynomial for both rate laws, so first-kind Gauss-Chebyshev is exact
    d = fam.curve(0.0).d
    x = d * np.cos((2 * np.arange(1, n + 1) - 1) * math.pi / (2 * n))
    params = HeleShawParams(k)
    return math.pi / n * sum(k * interfocal_density(fam, 0.0, params, xi) * math.sqrt(d * d - xi * xi) for xi in x)


def test_07_flux_identity():
    ecc = EllipseFamily(2.0, 1.0, ConstantEccentricity(0.25))
    # a/b = 2 with adot = 0.25 gives (ab)' = 0.25 + 2 * 0.125
    err_ecc = abs(chebyshev_flux(ecc, 1.5) - math.pi * 0.5)
    err_area = abs(chebyshev_flux(EllipseFamily(2.0, 1.0, ConstantArea(0.1)), 1.5))
    print(f"\n  constant eccentricity {err_ecc:.3e}, constant area {err_area:.3e}")
    verdict(7, "flux of the inter-focal density", max(err_ecc, err_area), 1e-8)


def test_08_gap_circle():
    fam = CircleFamily(1.0, GapConservation(1.0, -0.4))
    ratio = gap_ratio(fam, 0.0, K1)
    pts = off_curve_points(Circle(1.0), 16)
    integrand = float(np.max(np.abs(gap_integrand(fam, 0.0, ratio, np.array(pts)))))
    err = max(abs(harmonic_gap_pressure(fam, 0.0, K1, z) - (-1.0 * -0.4 / 4)) for z in pts)
    print(f"\n  largest integrand {integrand:.3e} (bound 1e-12)")
    verdict(8, "gap-driven circle", err if integrand <= 1e-12 else math.inf, 1e-10)


def test_09_gap_confocal():
    a, adot = 2.0, 0.1
    fam = ConfocalEllipseFamily(D0, a, PrescribedRates(adot))
    err = 0.0
    for z in ELLIPSE_POINTS:
        x, y = z.real, z.imag
        exact = ((x * x - y * y) * adot * D0 ** 2 / (a * (a * a - D0 ** 2)) + 2 * adot * a) / 4
        err = max(err, abs(harmonic_gap_pressure(fam, 0.0, K1, z) - exact))
    verdict(9, "gap-driven confocal ellipse", err, 1e-8)


def test_10_growth():
    fam = EllipseFamily(2.0, 1.0, ConstantArea(0.1))
    small = GrowthScenario(fam, 1.0, HelmholtzKernel(1e-4))
    err0 = max(abs(growth_pressure(small, 0.0, z) - pressure_sink_source(fam, 0.0, K1, z)) for z in ELLIPSE_POINTS)
    print(f"\n  lambda -> 0 against the Laplace pressure: max_error={err0:.3e} tolerance=1e-06")
    sc = GrowthScenario(fam, 1.0, HelmholtzKernel(0.5))
    pts = [complex(2.6 * math.cos(t), 2.2 * math.sin(t)) for t in np.linspace(0.1, 6.2, 16)]
    rep = pde_residual(lambda x, y: growth_pressure(sc, 0.0, (x, y)), Helmholtz(0.5), pts,
                       tolerance=1e-4, relative=True)
    verdict(10, "elliptic growth residual and degeneration", rep.max_error if err0 < 1e-6 else math.inf, 1e-4)


def test_11_kinematics():
    err = 0.0
    for fam in (CircleFamily(1.0, PrescribedRates(1.0)), EllipseFamily(2.0, 1.0, ConstantEccentricity(0.5)),
                EllipseFamily(2.0, 1.0, ConstantArea(0.1))):
        f = lambda x, y, fam=fam: pressure_sink_source(fam, 0.0, K1, (x, y))
        err = max(err, kinematic_check(fam, f, 0.0, K1, 16, tolerance=1e-5).max_error)
    verdict(11, "kinematic consistency", err, 1e-5)


def test_12_property_suites(tmp_path):
    wanted = {"curves.on_curve_identity", "curves.reflection_involution", "curves.round_trip",
              "curves.branch_asymptotics", "numerics.path_independence"}
    reports = [r for r in run_suite("curves") + run_suite("numerics") if r.check_name in wanted]
    assert {r.check_name for r in reports} == wanted
    failing = [r.check_name for r in reports if not r.passed]
    with contextlib.redirect_stdout(io.StringIO()):
        code = main(["verify", "--suite", "all", "--out", str(tmp_path)])
    print(f"\n  property checks failing: {failing or 'none'}; verify --suite all exit code {code}")
    worst = max(r.max_error / r.tolerance for r in reports)
    verdict(12, "property suites (error / tolerance)", worst if code == 0 and not failing else math.inf, 1.0)
