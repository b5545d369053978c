import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schwarzflow import (
    CircleFamily,
    ConfocalEllipseFamily,
    ConstantArea,
    ConstantEccentricity,
    CustomRates,
    Ellipse,
    EllipseFamily,
    GapConservation,
    GapLaw,
    HeleShawParams,
    PrescribedRates,
    flux_balance,
    interfocal_density,
    normal_velocity,
    pressure_gap,
    pressure_sink_source,
)
from schwarzflow.errors import NonRealResult, OutOfDomain, OutOfSupport, ScenarioMismatch
from schwarzflow.heleshaw import (
    circle_surface_tension,
    ensure_real,
    gap_integrand,
    gap_ratio,
    harmonic_gap_pressure,
    interfocal_density_from_jump,
    source_structure,
)
from schwarzflow.verify import Laplace, Poisson, kinematic_check, pde_residual

K1 = HeleShawParams(1.0)
D0 = math.sqrt(3)
ELLIPSE_POINTS = [2.6 + 0.5j, -2.2 + 1.1j, 0.4 + 1.6j, -0.9 - 1.4j, 1.2 - 0.4j, -1.0 + 0.45j, 3.5 + 2.0j, -6.0 - 0.2j]
RING = [complex(3 * math.cos(t), 2.4 * math.sin(t)) for t in np.linspace(0.1, 6.2, 16)]


def circle_closed_form(a, adot, k, z, gamma=0.0):
    return -(a * adot / (2 * k)) * math.log(abs(z) ** 2 / a ** 2) + gamma / a


def eccentric_closed_form(a, b, abdot, k, z):
    d = math.sqrt(a * a - b * b)
    r = cmath.sqrt(z - d) * cmath.sqrt(z + d)
    return -(abdot / (2 * k)) * (math.log(abs(z + r)) - math.log(a + b))


def confocal_closed_form(a, adot, d0, k, z):
    x, y = z.real, z.imag
    return ((x * x - y * y) * adot * d0 ** 2 / (a * (a * a - d0 ** 2)) + 2 * adot * a) / (4 * k)


def sink_source_families():
    return [CircleFamily(1.0, PrescribedRates(1.0)),
            EllipseFamily(2.0, 1.0, ConstantEccentricity(0.5)),
            EllipseFamily(2.0, 1.0, ConstantArea(0.1))]


def test_circle_examples():
    fam = CircleFamily(1.0, PrescribedRates(1.0))
    assert pressure_sink_source(fam, 0.0, K1, (math.e, 0)) == pytest.approx(-1.0, abs=1e-12)
    params = HeleShawParams(1.0, circle_surface_tension(fam, 0.3))
    assert pressure_sink_source(fam, 0.0, params, (math.e, 0)) == pytest.approx(-0.7, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(1.0, 5.0), st.floats(0, 2 * math.pi), st.sampled_from([0.0, 0.3]))
def test_circle_closed_form(r, theta, gamma):
    fam = CircleFamily(1.0, PrescribedRates(1.0))
    params = HeleShawParams(1.0, circle_surface_tension(fam, gamma) if gamma else None)
    z = r * cmath.exp(1j * theta)
    assert abs(pressure_sink_source(fam, 0.0, params, z) - circle_closed_form(1.0, 1.0, 1.0, z, gamma)) < 1e-10


def test_circle_logarithmic_structure():
    fam = CircleFamily(1.5, PrescribedRates(0.4))
    k = 0.7
    params = HeleShawParams(k)
    pairs = [(0.5 + 0.2j, 2.0 - 1.0j), (3.0j, -4.0), (0.1 + 0.1j, 1.0 + 7.0j)]
    for z, zz in pairs:
        diff = pressure_sink_source(fam, 0.0, params, z) - pressure_sink_source(fam, 0.0, params, zz)
        assert abs(diff + (1.5 * 0.4 / (2 * k)) * math.log(abs(z) ** 2 / abs(zz) ** 2)) < 1e-9
    # no angular dependence
    values = [pressure_sink_source(fam, 0.0, params, 2.2 * cmath.exp(1j * t)) for t in np.linspace(0, 6, 7)]
    assert np.ptp(values) < 1e-12


def test_constant_eccentricity_closed_form():
    # a/b = 2 frozen and adot = 0.5 give (ab)' = a adot = 1
    fam = EllipseFamily(2.0, 1.0, ConstantEccentricity(0.5))
    for z in ELLIPSE_POINTS:
        assert abs(pressure_sink_source(fam, 0.0, K1, z) - eccentric_closed_form(2.0, 1.0, 1.0, 1.0, z)) < 1e-8


def test_symmetric_points_agree():
    # the field of a symmetric family is even in x and in y
    fam = EllipseFamily(2.0, 1.0, ConstantArea(0.1))
    for z in (3.5 + 0.0j, 2.4 + 0.0j, 1.0 + 2.0j, 0.5 + 0.7j):
        ref = pressure_sink_source(fam, 0.0, K1, z)
        for q in (-z.conjugate(), z.conjugate(), -z):
            assert abs(pressure_sink_source(fam, 0.0, K1, q) - ref) < 1e-10


def test_interface_condition():
    for fam in sink_source_families():
        zs, _ = fam.curve(0.0).boundary_samples(32)
        assert max(abs(pressure_sink_source(fam, 0.0, K1, z)) for z in zs) < 1e-8


def test_harmonicity_and_gap_poisson():
    for fam in sink_source_families():
        f = lambda x, y, fam=fam: pressure_sink_source(fam, 0.0, K1, (x, y))
        assert pde_residual(f, Laplace(), RING).max_error < 1e-5
    fam = CircleFamily(1.0, GapConservation(1.0, -0.4))
    f = lambda x, y: pressure_gap(fam, 0.0, K1, (x, y))
    assert pde_residual(f, Poisson(-0.4), RING).max_error < 1e-5


def test_kinematic_consistency():
    for fam in sink_source_families():
        f = lambda x, y, fam=fam: pressure_sink_source(fam, 0.0, K1, (x, y))
        assert kinematic_check(fam, f, 0.0, K1, 16, tolerance=1e-5).passed


def test_kinematics_at_later_time():
    fam = EllipseFamily(2.0, 1.0, ConstantArea(0.1))
    f = lambda x, y: pressure_sink_source(fam, 1.5, K1, (x, y))
    assert kinematic_check(fam, f, 1.5, K1, 16, tolerance=1e-5).passed


def test_realness_check():
    assert ensure_real(1.0 + 1e-12j) == 1.0
    with pytest.raises(NonRealResult):
        ensure_real(1.0 + 1e-3j)


def test_pressure_needs_real_points():
    from schwarzflow import ComplexPoint

    fam = CircleFamily(1.0, PrescribedRates(1.0))
    with pytest.raises(OutOfDomain):
        pressure_sink_source(fam, 0.0, K1, ComplexPoint(2.0, 1.0))


def test_gap_circle_example():
    fam = CircleFamily(1.0, GapConservation(1.0, -0.4))
    pts = np.array([0.3 + 0.2j, 1.7 - 0.4j, -2.5 + 3.0j, 0.9j, -0.6, 3.3 + 0.1j])
    ratio = gap_ratio(fam, 0.0, K1)
    assert ratio == pytest.approx(-0.4)
    assert np.max(np.abs(gap_integrand(fam, 0.0, ratio, pts))) <= 1e-12
    for z in pts:
        assert abs(harmonic_gap_pressure(fam, 0.0, K1, z) - 0.1) < 1e-10
        assert abs(pressure_gap(fam, 0.0, K1, z) - (0.1 - 0.1 * abs(z) ** 2)) < 1e-10


def test_gap_confocal_example():
    fam = ConfocalEllipseFamily(D0, 2.0, PrescribedRates(0.1))
    # without a gap law hdot/h comes from volume conservation
    a, b = fam.shape(0.0)
    assert gap_ratio(fam, 0.0, K1) == pytest.approx(-fam.area_rate(0.0) / (math.pi * a * b))
    for z in ELLIPSE_POINTS:
        assert abs(harmonic_gap_pressure(fam, 0.0, K1, z) - confocal_closed_form(2.0, 0.1, D0, 1.0, z)) < 1e-8
    f = lambda x, y: pressure_gap(fam, 0.0, K1, (x, y))
    assert pde_residual(f, Poisson(gap_ratio(fam, 0.0, K1)), RING).max_error < 1e-5


def test_gap_with_static_plates_is_sink_source():
    fam = EllipseFamily(2.0, 1.0, ConstantArea(0.1))
    params = HeleShawParams(1.0, gap_law=GapLaw(1.0, 0.0))
    for z in ELLIPSE_POINTS[:4]:
        assert pressure_gap(fam, 0.0, params, z) == pytest.approx(pressure_sink_source(fam, 0.0, K1, z), abs=1e-12)


def test_normal_velocity():
    fam = CircleFamily(1.0, PrescribedRates(0.5))
    for th in np.linspace(0, 6, 5):
        assert normal_velocity(fam, 0.0, cmath.exp(1j * th)) == pytest.approx(0.5, abs=1e-12)
    static = EllipseFamily(2.0, 1.0)
    assert normal_velocity(static, 0.0, 2.0) == 0
    with pytest.raises(OutOfDomain):
        normal_velocity(fam, 0.0, 1.5)


def test_normal_velocity_matches_level_set():
    fam = EllipseFamily(2.0, 1.0, ConstantArea(0.1))
    assert normal_velocity(fam, 0.0, 2.0) == pytest.approx(0.1, abs=1e-6)
    dt = 1e-6
    for th in (0.3, 1.2, 2.5, 4.0):
        x, y = 2 * math.cos(th), math.sin(th)

        def F(t):
            a, b = fam.shape(t)
            return x * x / a ** 2 + y * y / b ** 2 - 1

        Ft = (F(dt) - F(-dt)) / (2 * dt)
        grad = math.hypot(2 * x / 4, 2 * y / 1)
        assert abs(normal_velocity(fam, 0.0, complex(x, y)) - (-Ft / grad)) < 1e-6


def test_interfocal_density_examples():
    area = EllipseFamily(2.0, 1.0, ConstantArea(0.1))
    for x in (D0 / math.sqrt(2), -D0 / math.sqrt(2)):
        assert abs(interfocal_density(area, 0.0, K1, x)) < 1e-14
    ecc = EllipseFamily(2.0, 1.0, ConstantEccentricity(0.2))
    expected = (2 * 2 * 1 / 3) * (0.3 / D0)
    assert interfocal_density(ecc, 0.0, K1, 0.0) == pytest.approx(expected, rel=1e-14)
    frozen = EllipseFamily(2.0, 1.0, ConstantArea(0.0))
    assert all(interfocal_density(frozen, 0.0, K1, x) == 0 for x in (-1.0, 0.0, 0.5))


def test_interfocal_density_errors():
    ecc = EllipseFamily(2.0, 1.0, ConstantEccentricity(0.2))
    with pytest.raises(OutOfSupport):
        interfocal_density(ecc, 0.0, K1, D0)
    with pytest.raises(OutOfSupport):
        interfocal_density(ecc, 0.0, K1, -2.0)
    with pytest.raises(ScenarioMismatch):
        interfocal_density(CircleFamily(1.0, PrescribedRates(1.0)), 0.0, K1, 0.0)


@pytest.mark.parametrize("fam", [EllipseFamily(2.0, 1.0, ConstantArea(0.1)),
                                 EllipseFamily(2.0, 1.0, ConstantEccentricity(0.2)),
                                 EllipseFamily(3.0, 1.0, ConstantArea(-0.2))])
def test_density_closed_forms_match_the_jump(fam):
    params = HeleShawParams(0.8)
    for x in np.linspace(-0.95, 0.95, 9) * fam.curve(0.0).d:
        assert interfocal_density(fam, 0.0, params, x) == pytest.approx(
            interfocal_density_from_jump(fam, 0.0, params, x), rel=1e-10, abs=1e-13)


def test_density_is_minus_the_jump_of_dp_dy():
    fam = EllipseFamily(2.0, 1.0, ConstantArea(0.1))
    h, eps = 1e-7, 1e-6

    def dpdy(x, y):
        return (pressure_sink_source(fam, 0.0, K1, (x, y + h)) - pressure_sink_source(fam, 0.0, K1, (x, y - h))) / (2 * h)

    for x in (0.3, -1.0, 1.2):
        jump = dpdy(x, eps) - dpdy(x, -eps)
        assert abs(jump + interfocal_density(fam, 0.0, K1, x)) < 1e-5


def test_general_rate_law_density():
    fam = EllipseFamily(2.0, 1.0, PrescribedRates(0.1, 0.3))
    x = 0.4
    mu = interfocal_density(fam, 0.0, K1, x)
    assert mu == interfocal_density_from_jump(fam, 0.0, K1, x)
    flux, rate = flux_balance(fam, 0.0, K1)
    assert abs(flux - rate) < 1e-8


def test_flux_balance():
    f, r = flux_balance(EllipseFamily(2.0, 1.0, ConstantEccentricity(0.25)), 0.0, K1)
    assert abs(f - math.pi * 0.5) < 1e-8 and abs(r - math.pi * 0.5) < 1e-14
    f, _ = flux_balance(EllipseFamily(2.0, 1.0, ConstantArea(0.1)), 0.0, K1)
    assert abs(f) < 1e-8
    assert flux_balance(EllipseFamily(2.0, 1.0), 0.0, K1) == (0.0, 0.0)


def test_custom_rates_flux():
    fam = EllipseFamily(2.0, 1.0, CustomRates(lambda t: 2.0 + 0.1 * t * t + 0.2 * t, lambda t: 1.0 + 0.05 * t))
    flux, rate = flux_balance(fam, 0.5, HeleShawParams(2.0))
    assert abs(flux - rate) < 1e-7


def test_source_structure():
    fam = CircleFamily(1.0, PrescribedRates(1.0))
    inf, point = source_structure(fam, 0.0, K1)
    assert point.kind == "point_log" and point.strength == pytest.approx(-1.0)
    assert inf.kind == "infinity_log"
    # p = strength * ln|z| + const for the circle
    p1 = pressure_sink_source(fam, 0.0, K1, 2.0)
    p2 = pressure_sink_source(fam, 0.0, K1, 5.0)
    assert p1 - p2 == pytest.approx(point.strength * math.log(2 / 5))
    ell = EllipseFamily(2.0, 1.0, ConstantArea(0.1))
    _, seg = source_structure(ell, 0.0, K1)
    assert seg.kind == "interfocal_density" and seg.d == pytest.approx(D0)
    assert seg.distance(1.0 + 0.5j) == pytest.approx(0.5)
    assert seg.distance(3.0) == pytest.approx(3.0 - D0)


def test_params_validation():
    with pytest.raises(ValueError):
        HeleShawParams(0.0)
    with pytest.raises(OutOfDomain):
        GapLaw(1.0, -1.0).h(2.0)
    assert isinstance(Ellipse(2.0, 1.0).d, float)
