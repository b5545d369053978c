"""
Named verification suites: closed-form oracles and invariants of every module.

Each check returns a :class:`~schwarzflow.verify.VerificationReport`;
:func:`run_suite` collects them for the ``verify`` command.
"""

from __future__ import annotations

import cmath
import math
from typing import Callable, Dict, List

import numpy as np

from .cauchy_rep import (
    RiemannKernel,
    cauchy_data_from_solution,
    solve_cauchy_general,
    solve_cauchy_helmholtz,
    solve_cauchy_laplace,
)
from .curves import (
    Circle,
    CircleFamily,
    ConfocalEllipseFamily,
    ConstantArea,
    ConstantEccentricity,
    Ellipse,
    EllipseFamily,
    GapConservation,
    Line,
    PrescribedRates,
    reflect,
)
from .elliptic_growth import GrowthScenario, HelmholtzKernel, growth_pressure
from .heleshaw import (
    HeleShawParams,
    circle_surface_tension,
    flux_balance,
    gap_integrand,
    gap_ratio,
    harmonic_gap_pressure,
    pressure_gap,
    pressure_sink_source,
)
from .complexified import default_tracker
from .numerics import (
    BranchTracker,
    IntegrationPath,
    integrate_path,
    j0_product,
    j0_series,
    sqrt_branch,
)
from .reflection import AnalyticDatum, dirichlet_pair_sum, neumann_jump
from .verify import (
    Helmholtz,
    Laplace,
    Poisson,
    VerificationReport,
    kinematic_check,
    oracle_check,
    pde_residual,
)

SEED = 20240601

CIRCLE = Circle(1.0)
ELLIPSE = Ellipse(2.0, 1.0)
XAXIS = Line()


def _rng():
    return np.random.default_rng(SEED)


def off_curve_points(curve, n, rng=None):
    """Real points on both sides of ``curve``, away from the curve and the singular set."""
    rng = _rng() if rng is None else rng
    pts = []
    while len(pts) < n:
        s = rng.choice([rng.uniform(0.45, 0.8), rng.uniform(1.25, 2.5)])
        th = rng.uniform(0, 2 * math.pi)
        if isinstance(curve, Ellipse):
            z = s * complex(curve.a * math.cos(th), curve.b * math.sin(th))
            if abs(z.imag) < 0.05:
                continue
        elif isinstance(curve, Circle):
            z = s * curve.a * cmath.exp(1j * th)
        else:
            z = complex(rng.uniform(-2, 2), rng.choice([-1, 1]) * rng.uniform(0.2, 2))
        pts.append(z)
    return pts


def annulus_points(curve, n, rng=None):
    """Real points where the closed-form inverse of S inverts S (see ``Curve.in_domain``)."""
    rng = _rng() if rng is None else rng
    pts = []
    while len(pts) < n:
        if isinstance(curve, Ellipse):
            r = rng.uniform(1.05, curve.rho ** 2 * 0.95)
            tau = r * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            z = complex(curve.chart_z(tau))
            if not curve.in_domain(z):
                continue
        else:
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            if abs(z) < 0.2:
                continue
        pts.append(z)
    return pts


def power_solution(curve, c, n):
    """Cauchy data of ``u = Re(c z**n)``."""
    cc = complex(c).conjugate()
    return cauchy_data_from_solution(
        curve,
        lambda z, w: 0.5 * (c * z ** n + cc * w ** n),
        lambda z, w: 0.5 * n * c * z ** (n - 1),
        lambda z, w: 0.5 * n * cc * w ** (n - 1),
    )


def plane_wave_solution(curve, lam, along="x"):
    """Cauchy data of ``u = cos(lam x)`` (or ``cos(lam y)``)."""
    if along == "x":
        return cauchy_data_from_solution(
            curve,
            lambda z, w: np.cos(lam * (z + w) / 2),
            lambda z, w: -0.5 * lam * np.sin(lam * (z + w) / 2),
            lambda z, w: -0.5 * lam * np.sin(lam * (z + w) / 2),
        )
    return cauchy_data_from_solution(
        curve,
        lambda z, w: np.cos(lam * (z - w) / 2j),
        lambda z, w: 0.5j * lam * np.sin(lam * (z - w) / 2j),
        lambda z, w: -0.5j * lam * np.sin(lam * (z - w) / 2j),
    )


# ---------------------------------------------------------------------------
# curves


def check_on_curve_identity():
    errs = []
    for curve in (CIRCLE, Circle(2.5), ELLIPSE, Ellipse(3.0, 0.5)):
        z, _ = curve.boundary_samples(64)
        errs.extend(np.abs(curve.schwarz(z) - np.conj(z)))
    for curve in (XAXIS, Line.from_coefficients(1.0, 2.0, -3.0)):
        z, _ = curve.boundary_samples(64, half_length=5.0)
        errs.extend(np.abs(curve.schwarz(z) - np.conj(z)))
    return VerificationReport.from_errors("curves.on_curve_identity", errs, 1e-12)


def check_round_trip():
    errs = []
    for curve in (CIRCLE, ELLIPSE, Ellipse(3.0, 0.5), Line.from_coefficients(1.0, 2.0, -3.0)):
        for z in annulus_points(curve, 64):
            errs.append(abs(complex(curve.schwarz_inverse(curve.schwarz(z))) - z))
    return VerificationReport.from_errors("curves.round_trip", errs, 1e-10)


def check_involution():
    errs = []
    for curve in (CIRCLE, ELLIPSE, Line.from_coefficients(1.0, 2.0, -3.0)):
        for z in annulus_points(curve, 32):
            errs.append(abs(reflect(curve, reflect(curve, z)).z - z))
    return VerificationReport.from_errors("curves.reflection_involution", errs, 1e-10)


def check_derivative_consistency():
    errs = []
    h = 1e-6
    for curve in (CIRCLE, ELLIPSE):
        for z in annulus_points(curve, 32):
            fd = (complex(curve.schwarz(z + h)) - complex(curve.schwarz(z - h))) / (2 * h)
            exact = complex(curve.schwarz_derivative(z))
            errs.append(abs(fd - exact) / abs(exact))
    return VerificationReport.from_errors("curves.derivative_consistency", errs, 1e-6)


def check_branch_asymptotics():
    errs = []
    for curve in (ELLIPSE, Ellipse(3.0, 0.5)):
        R = 1e3 * curve.d
        for k in range(8):
            z = R * cmath.exp(1j * (k * math.pi / 4 + 0.1))
            errs.append(abs(complex(curve.root(z)) / z - 1))
    # deviation of sqrt(1 - d^2/z^2) from 1 is d^2/(2|z|^2) = 5e-7
    return VerificationReport.from_errors("curves.branch_asymptotics", errs, 1e-6)


def check_schwarz_examples():
    e = ELLIPSE
    computed = [Circle(2.0).schwarz(1 + 1j), e.schwarz(2.0), e.schwarz(math.sqrt(3)),
                Circle(2.0).schwarz_inverse(2 - 2j), XAXIS.schwarz_inverse(3 + 4j),
                e.schwarz_inverse(e.schwarz(1.5 + 0.2j)), Circle(1.0).schwarz_derivative(1j),
                reflect(XAXIS, (1, 2)).z, reflect(CIRCLE, 2.0).z]
    expected = [2 - 2j, 2, 5 * math.sqrt(3) / 3, 1 + 1j, 3 + 4j, 1.5 + 0.2j, 1, 1 - 2j, 0.5]
    return oracle_check("curves.schwarz_examples", computed, expected, 1e-12)


# ---------------------------------------------------------------------------
# numerics


def check_quadrature_examples():
    loop = [cmath.exp(2j * math.pi * k / 16) for k in range(1, 16)]
    computed = [
        integrate_path(lambda z: np.ones_like(z), IntegrationPath(0, 1 + 1j)),
        integrate_path(lambda z: 1 / z, IntegrationPath(1, 1, tuple(loop))),
        integrate_path(lambda z: z ** 2, IntegrationPath(0, 2)),
    ]
    return oracle_check("numerics.quadrature_examples", computed, [1 + 1j, 2j * math.pi, 8 / 3], 1e-10)


def check_path_independence():
    f = lambda z: np.exp(z) * np.cos(2 * z)
    tol = 1e-11
    errs = []
    rng = _rng()
    for _ in range(8):
        a, b = complex(*rng.uniform(-2, 2, 2)), complex(*rng.uniform(-2, 2, 2))
        mid = complex(*rng.uniform(-2, 2, 2))
        v1 = integrate_path(f, IntegrationPath(a, b, tolerance=tol))
        v2 = integrate_path(f, IntegrationPath(a, b, (mid,), tolerance=tol))
        errs.append(abs(v1 - v2))
    return VerificationReport.from_errors("numerics.path_independence", errs, 2 * tol)


def check_j0_series():
    rng = _rng()
    ps = rng.uniform(-20, 20, 16) + 1j * rng.uniform(-20, 20, 16)
    g0, g1, g2 = (np.asarray(j0_series(1.0, ps, n)) for n in range(3))
    errs = list(np.abs(ps * g2 + g1 + g0 / 4))
    errs.append(abs(j0_product(1.0, 4.0) - 0.22389077914123567))
    errs.append(abs(j0_product(3.0, 0.0) - 1))
    errs.append(abs(j0_product(0.0, 17.0 + 3j) - 1))
    return VerificationReport.from_errors("numerics.j0_series_ode", errs, 1e-10)


def check_sqrt_branch():
    errs = []
    tr = BranchTracker(1.0, -1.0)
    errs.append(abs(sqrt_branch(tr, 1.0) + 1))
    tr = BranchTracker(1.0, -1j)
    errs.append(abs(sqrt_branch(tr, -1.0) + 1j))
    tr = BranchTracker(2.0, math.sqrt(2))
    for th in np.linspace(0, 2 * math.pi, 257)[1:]:
        v = 2 + 0.5 * cmath.exp(1j * th)
        r = sqrt_branch(tr, v)
        errs.append(abs(r * r - v) / abs(v))
    # the loop does not enclose 0, so the root returns to its starting sheet
    errs.append(abs(tr.value - math.sqrt(2.5)))
    return VerificationReport.from_errors("numerics.sqrt_branch", errs, 1e-12)


# ---------------------------------------------------------------------------
# reflections


def check_example_line():
    computed, expected, labels = [], [], []
    for alpha in (0.0, 0.7, -1.3):
        psi = AnalyticDatum(lambda z, w, al=alpha: al - 2 * (z - w) / 2j, "neumann")
        for y0 in (0.1, 1.0, 5.0):
            computed.append(neumann_jump(XAXIS, psi, (1.0, y0)))
            expected.append(2 * alpha * y0)
            labels.append(f"alpha={alpha},y0={y0}")
    return oracle_check("reflections.line_neumann", computed, expected, 1e-10, labels)


def check_example_circle():
    computed, expected = [], []
    rng = _rng()
    for a, beta in ((1.0, 0.5), (2.0, -1.0)):
        psi = AnalyticDatum.constant(beta, "neumann")
        for _ in range(8):
            r0 = a * rng.choice([rng.uniform(0.3, 0.9), rng.uniform(1.1, 4.0)])
            z0 = r0 * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            computed.append(neumann_jump(Circle(a), psi, z0))
            expected.append(a * beta * math.log(r0 ** 2 / a ** 2))
    computed.append(neumann_jump(CIRCLE, AnalyticDatum.constant(0.5, "neumann"), math.e))
    expected.append(1.0)
    return oracle_check("reflections.circle_neumann", computed, expected, 1e-9)


def _harmonic_pairs():
    for curve in (CIRCLE, ELLIPSE):
        for c, n in ((1.0, 1), (0.3 - 1j, 2), (-1j, 3), (0.5, 4)):
            yield curve, c, n


def check_dirichlet_identity():
    errs = []
    for curve, c, n in _harmonic_pairs():
        data = power_solution(curve, c, n)
        for z in annulus_points(curve, 16):
            zr = reflect(curve, z).z
            u = lambda q: (c * q ** n).real
            errs.append(abs(dirichlet_pair_sum(curve, data.phi, z) - (u(z) + u(zr))))
    return VerificationReport.from_errors("reflections.dirichlet_identity", errs, 1e-9)


def check_neumann_identity():
    errs = []
    for curve, c, n in _harmonic_pairs():
        data = power_solution(curve, c, n)
        for z in annulus_points(curve, 16):
            zr = reflect(curve, z).z
            u = lambda q: (c * q ** n).real
            errs.append(abs(neumann_jump(curve, data.psi, z) - (u(z) - u(zr))))
    return VerificationReport.from_errors("reflections.neumann_identity", errs, 1e-8)


def check_on_curve_degeneracy():
    errs = []
    for curve in (CIRCLE, ELLIPSE):
        data = power_solution(curve, 0.3 - 1j, 2)
        z, _ = curve.boundary_samples(8)
        for q in z:
            q = complex(q)
            phi = complex(data.phi(q, q.conjugate()))
            errs.append(abs(dirichlet_pair_sum(curve, data.phi, q) - 2 * phi))
            errs.append(abs(neumann_jump(curve, data.psi, q)))
    return VerificationReport.from_errors("reflections.on_curve_degeneracy", errs, 1e-10)


def check_branch_flip():
    errs = []
    for curve in (XAXIS, CIRCLE, ELLIPSE):
        psi = AnalyticDatum(lambda z, w: 1 + 0.2 * z * w, "neumann")
        tr = default_tracker(curve)
        for z in annulus_points(curve, 4):
            v1 = neumann_jump(curve, psi, z, tr)
            v2 = neumann_jump(curve, psi, z, tr.flipped())
            errs.append(abs(v1 + v2))
            errs.append(abs(abs(v1) - abs(v2)))
    return VerificationReport.from_errors("reflections.branch_flip", errs, 1e-12)


# ---------------------------------------------------------------------------
# cauchy


def check_laplace_manufactured():
    computed, expected = [], []
    for curve in (CIRCLE, ELLIPSE):
        for c, n in ((1.0, 2), (-1j, 3), (1.0, 4)):
            data = power_solution(curve, c, n)
            for z in off_curve_points(curve, 16):
                computed.append(solve_cauchy_laplace(curve, data, z))
                expected.append((c * z ** n).real)
    computed.append(solve_cauchy_laplace(CIRCLE, power_solution(CIRCLE, 1.0, 2), 1.3 + 0.4j))
    expected.append(1.53)
    return oracle_check("cauchy.laplace_manufactured", computed, expected, 1e-8)


def check_helmholtz_manufactured():
    computed, expected = [], []
    for lam in (0.5, 1.0, 2.0):
        for curve in (CIRCLE, XAXIS):
            data = plane_wave_solution(curve, lam)
            for z in off_curve_points(curve, 8):
                computed.append(solve_cauchy_helmholtz(curve, data, lam, z))
                expected.append(math.cos(lam * z.real))
    data = plane_wave_solution(XAXIS, 2.0, along="y")
    computed.append(solve_cauchy_helmholtz(XAXIS, data, 2.0, 0.3 + 0.7j))
    expected.append(math.cos(2.0 * 0.7))
    return oracle_check("cauchy.helmholtz_manufactured", computed, expected, 1e-7)


def check_lambda_zero():
    errs = []
    for curve in (CIRCLE, ELLIPSE, XAXIS):
        data = power_solution(curve, 0.3 - 1j, 3)
        for z in off_curve_points(curve, 8):
            errs.append(abs(solve_cauchy_helmholtz(curve, data, 0.0, z)
                            - solve_cauchy_laplace(curve, data, z)))
    return VerificationReport.from_errors("cauchy.lambda_zero_degeneration", errs, 1e-12)


def check_general_kernel():
    errs = []
    lam = 1.0
    data = plane_wave_solution(CIRCLE, lam)
    builtin = RiemannKernel.helmholtz(lam)
    series_only = RiemannKernel(lambda z0, w0, z, w: j0_product(lam ** 2, (z - z0) * (w - w0)))
    unit = RiemannKernel(lambda z0, w0, z, w: np.ones(np.broadcast(z, w).shape, dtype=complex))
    lap = power_solution(CIRCLE, 0.3 - 1j, 2)
    for z in off_curve_points(CIRCLE, 8):
        ref = solve_cauchy_helmholtz(CIRCLE, data, lam, z)
        errs.append(abs(solve_cauchy_general(CIRCLE, data, builtin, z) - ref))
        errs.append(abs(solve_cauchy_general(CIRCLE, data, series_only, z) - ref))
        errs.append(abs(solve_cauchy_general(CIRCLE, lap, unit, z) - solve_cauchy_laplace(CIRCLE, lap, z)))
    return VerificationReport.from_errors("cauchy.general_kernel_consistency", errs, 1e-8)


def check_general_manufactured():
    # u = exp(al z + be w) solves u_zw + A u_z + B u_w + C u = 0 when al be + A al + B be + C = 0
    A, B, al, be = 0.3 + 0.1j, -0.2, 0.5, 0.4j
    C = -(al * be + A * al + B * be)
    kernel = RiemannKernel.constant_coefficients(A, B, C)
    computed, expected = [], []
    for curve in (CIRCLE, ELLIPSE):
        data = cauchy_data_from_solution(curve, lambda z, w: np.exp(al * z + be * w),
                                         lambda z, w: al * np.exp(al * z + be * w),
                                         lambda z, w: be * np.exp(al * z + be * w))
        for z in off_curve_points(curve, 8):
            computed.append(solve_cauchy_general(curve, data, kernel, z))
            expected.append(cmath.exp(al * z + be * z.conjugate()))
    return oracle_check("cauchy.general_manufactured", computed, expected, 1e-8)


# ---------------------------------------------------------------------------
# heleshaw


def circle_closed_form(a, adot, k, z, gamma=0.0):
    return -(a * adot / (2 * k)) * math.log(abs(z) ** 2 / a ** 2) + gamma / a


def eccentric_closed_form(a, b, abdot, k, z):
    d = math.sqrt(a * a - b * b)
    r = cmath.sqrt(z - d) * cmath.sqrt(z + d)
    return -(abdot / (2 * k)) * (math.log(abs(z + r)) - math.log(a + b))


def check_circle_pressure():
    rng = _rng()
    computed, expected = [], []
    for gamma in (0.0, 0.3):
        fam = CircleFamily(1.0, PrescribedRates(1.0))
        params = HeleShawParams(1.0, circle_surface_tension(fam, gamma) if gamma else None)
        for _ in range(20):
            z = rng.uniform(1, 5) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            computed.append(pressure_sink_source(fam, 0.0, params, z))
            expected.append(circle_closed_form(1.0, 1.0, 1.0, z, gamma))
    return oracle_check("heleshaw.circle_pressure", computed, expected, 1e-10)


def check_eccentric_pressure():
    # a/b = 2 frozen, adot = 0.5 gives (ab)' = 1
    fam = EllipseFamily(2.0, 1.0, ConstantEccentricity(0.5))
    params = HeleShawParams(1.0)
    pts = off_curve_points(ELLIPSE, 8)
    computed = [pressure_sink_source(fam, 0.0, params, z) for z in pts]
    expected = [eccentric_closed_form(2.0, 1.0, 1.0, 1.0, z) for z in pts]
    return oracle_check("heleshaw.constant_eccentricity_pressure", computed, expected, 1e-8)


def check_interface_condition():
    errs = []
    params = HeleShawParams(1.0)
    for fam in _sink_source_families():
        z, _ = fam.curve(0.0).boundary_samples(32)
        errs.extend(abs(pressure_sink_source(fam, 0.0, params, q)) for q in z)
    return VerificationReport.from_errors("heleshaw.interface_condition", errs, 1e-8)


def _sink_source_families():
    return (CircleFamily(1.0, PrescribedRates(1.0)),
            EllipseFamily(2.0, 1.0, ConstantEccentricity(0.5)),
            EllipseFamily(2.0, 1.0, ConstantArea(0.1)))


def check_flux_identity():
    params = HeleShawParams(1.0)
    ecc = EllipseFamily(2.0, 1.0, ConstantEccentricity(0.25))
    area = EllipseFamily(2.0, 1.0, ConstantArea(0.1))
    static = EllipseFamily(2.0, 1.0, PrescribedRates(0.0, 0.0))
    f1, r1 = flux_balance(ecc, 0.0, params)
    f2, _ = flux_balance(area, 0.0, params)
    f3, r3 = flux_balance(static, 0.0, params)
    return oracle_check("heleshaw.flux_identity", [f1, r1, f2, f3, r3],
                        [math.pi * 0.5, math.pi * 0.5, 0.0, 0.0, 0.0], 1e-8,
                        ["eccentric flux", "eccentric area rate", "area flux", "static flux", "static rate"])


def check_harmonicity():
    params = HeleShawParams(1.0)
    pts = [complex(3 * math.cos(t), 2.4 * math.sin(t)) for t in np.linspace(0.1, 6.2, 16)]
    errs = []
    for fam in _sink_source_families():
        f = lambda x, y, fam=fam: pressure_sink_source(fam, 0.0, params, (x, y))
        errs.append(pde_residual(f, Laplace(), pts).max_error)
    harmonic = VerificationReport.from_errors("heleshaw.harmonicity", errs, 1e-5)
    fam = CircleFamily(1.0, GapConservation(1.0, -0.4))
    f = lambda x, y: pressure_gap(fam, 0.0, params, (x, y))
    poisson = pde_residual(f, Poisson(gap_ratio(fam, 0.0, params) / params.k), pts,
                           name="heleshaw.gap_poisson")
    return [harmonic, poisson]


def check_gap_circle():
    fam = CircleFamily(1.0, GapConservation(1.0, -0.4))
    params = HeleShawParams(1.0)
    rng = _rng()
    pts = [rng.uniform(0.3, 4) * cmath.exp(1j * rng.uniform(0, 2 * math.pi)) for _ in range(16)]
    ratio = gap_ratio(fam, 0.0, params)
    integrand = np.abs(gap_integrand(fam, 0.0, ratio, np.array(pts)))
    ph = [harmonic_gap_pressure(fam, 0.0, params, z) for z in pts]
    r1 = VerificationReport.from_errors("heleshaw.gap_circle_integrand", integrand, 1e-12)
    r2 = oracle_check("heleshaw.gap_circle_pressure", ph, [0.1] * len(ph), 1e-10)
    return [r1, r2]


def confocal_closed_form(a, adot, d0, k, z):
    x, y = z.real, z.imag
    return ((x * x - y * y) * adot * d0 ** 2 / (a * (a * a - d0 ** 2)) + 2 * adot * a) / (4 * k)


def check_gap_confocal():
    d0 = math.sqrt(3)
    fam = ConfocalEllipseFamily(d0, 2.0, PrescribedRates(0.1))
    params = HeleShawParams(1.0)
    pts = off_curve_points(ELLIPSE, 8)
    computed = [harmonic_gap_pressure(fam, 0.0, params, z) for z in pts]
    expected = [confocal_closed_form(2.0, 0.1, d0, 1.0, z) for z in pts]
    return oracle_check("heleshaw.gap_confocal_pressure", computed, expected, 1e-8)


def check_kinematics():
    params = HeleShawParams(1.0)
    reports = []
    for fam in _sink_source_families():
        f = lambda x, y, fam=fam: pressure_sink_source(fam, 0.0, params, (x, y))
        reports.append(kinematic_check(fam, f, 0.0, params, 16, tolerance=1e-5,
                                       name=f"heleshaw.kinematic.{fam.kind}.{type(fam.rate).__name__}"))
    fam = CircleFamily(1.0, GapConservation(1.0, -0.4))
    f = lambda x, y: pressure_gap(fam, 0.0, params, (x, y))
    reports.append(kinematic_check(fam, f, 0.0, params, 16, tolerance=1e-5,
                                   name="heleshaw.kinematic.gap_circle"))
    return reports


# ---------------------------------------------------------------------------
# growth


def _growth_family():
    return CircleFamily(1.0, PrescribedRates(1.0))


def check_growth_degeneration():
    params = HeleShawParams(1.0)
    errs = []
    for fam in (_growth_family(), EllipseFamily(2.0, 1.0, ConstantArea(0.1))):
        for z in off_curve_points(fam.curve(0.0), 8):
            ref = pressure_sink_source(fam, 0.0, params, z)
            errs.append(abs(growth_pressure(GrowthScenario(fam, 1.0, HelmholtzKernel(0.0)), 0.0, z) - ref))
            errs.append(abs(growth_pressure(GrowthScenario(fam, 1.0, HelmholtzKernel(1e-4)), 0.0, z) - ref))
    return VerificationReport.from_errors("growth.lambda_zero_degeneration", errs, 1e-6)


def check_growth_residual():
    reports = []
    pts = [complex(2.6 * math.cos(t), 2.2 * math.sin(t)) for t in np.linspace(0.1, 6.2, 16)]
    for fam in (_growth_family(), EllipseFamily(2.0, 1.0, ConstantArea(0.1))):
        sc = GrowthScenario(fam, 1.0, HelmholtzKernel(0.5))
        f = lambda x, y, sc=sc: growth_pressure(sc, 0.0, (x, y))
        reports.append(pde_residual(f, Helmholtz(0.5), pts, tolerance=1e-4, relative=True,
                                    name=f"growth.helmholtz_residual.{fam.kind}"))
    return reports


def check_growth_boundary():
    errs = []
    for fam in (_growth_family(), EllipseFamily(2.0, 1.0, ConstantArea(0.1))):
        sc = GrowthScenario(fam, 1.0, HelmholtzKernel(0.5))
        z, _ = fam.curve(0.0).boundary_samples(32)
        errs.extend(abs(growth_pressure(sc, 0.0, q)) for q in z)
    return VerificationReport.from_errors("growth.boundary_vanishing", errs, 1e-7)


def check_growth_kernel_consistency():
    errs = []
    fam = _growth_family()
    for lam in (0.5, 1.0):
        a = GrowthScenario(fam, 1.0, HelmholtzKernel(lam))
        b = GrowthScenario(fam, 1.0, RiemannKernel.helmholtz(lam))
        for z in off_curve_points(fam.curve(0.0), 8):
            errs.append(abs(growth_pressure(a, 0.0, z) - growth_pressure(b, 0.0, z)))
    static = GrowthScenario(CircleFamily(1.0, PrescribedRates(0.0)), 1.0, HelmholtzKernel(0.5))
    errs.extend(abs(growth_pressure(static, 0.0, z)) for z in (2.0, 0.5j, -3 + 1j))
    return VerificationReport.from_errors("growth.kernel_consistency", errs, 1e-10)


SUITES: Dict[str, List[Callable]] = {
    "curves": [check_on_curve_identity, check_round_trip, check_involution,
               check_derivative_consistency, check_branch_asymptotics, check_schwarz_examples],
    "numerics": [check_quadrature_examples, check_path_independence, check_j0_series,
                 check_sqrt_branch],
    "reflections": [check_example_line, check_example_circle, check_dirichlet_identity,
                    check_neumann_identity, check_on_curve_degeneracy, check_branch_flip],
    "cauchy": [check_laplace_manufactured, check_helmholtz_manufactured, check_lambda_zero,
               check_general_kernel, check_general_manufactured],
    "heleshaw": [check_circle_pressure, check_eccentric_pressure, check_interface_condition,
                 check_flux_identity, check_harmonicity, check_gap_circle, check_gap_confocal,
                 check_kinematics],
    "growth": [check_growth_degeneration, check_growth_residual, check_growth_boundary,
               check_growth_kernel_consistency],
}
SUITE_NAMES = ("all", *SUITES)


def run_suite(name: str) -> List[VerificationReport]:
    if name == "all":
        checks = [c for group in SUITES.values() for c in group]
    elif name in SUITES:
        checks = SUITES[name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    reports = []
    for check in checks:
        out = check()
        reports.extend(out if isinstance(out, list) else [out])
    return reports
