"""
Pressure fields of Hele-Shaw flows with a moving analytic interface.

For a two-color flow (equal mobility ``k`` on both sides) the pressure
continues analytically across ``Gamma(t)`` and is obtained from the Cauchy
representation with ``phi`` the surface-tension datum and
``psi = -v_n / k``. Writing ``v_n`` through the Schwarz function turns the
Neumann integrand into ``-S_t / (4k)``::

    p = (phi(C) + phi(B)) / 2 - (1/4k) integral_{S~(zbar)}^{z} S_t(s, t) ds

A time-dependent plate gap ``h(t)`` adds the source ``hdot/(k h)`` to the
Laplacian; subtracting ``hdot/(4kh) |z|**2`` leaves a harmonic remainder that is
represented the same way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .complexified import ChartPath
from .curves import (
    ConstantArea,
    ConstantEccentricity,
    MovingFamily,
    _EllipseLike,
    as_point,
)
from .errors import (
    NonRealResult,
    OutOfDomain,
    OutOfSupport,
    RateLawUnderdetermined,
    ScenarioMismatch,
)
from .numerics import DEFAULT_TOLERANCE, IntegrationPath, integrate_path
from .reflection import AnalyticDatum

REAL_TOL = 1e-8
ON_CURVE_TOL = 1e-10


def ensure_real(value, what="pressure", tol=REAL_TOL) -> float:
    """Return ``value.real`` after checking the imaginary part is negligible."""
    value = complex(value)
    if abs(value.imag) > tol * (1 + abs(value.real)):
        raise NonRealResult(f"{what} has imaginary part {value.imag:.3e} (real part {value.real:.6g})")
    return value.real


@dataclass(frozen=True)
class GapLaw:
    """Plate gap ``h(t) = h0 + hdot t``."""

    h0: float
    hdot: float

    def h(self, t):
        h = self.h0 + self.hdot * t
        if h <= 0:
            raise OutOfDomain(f"gap width must stay positive, h({t}) = {h}")
        return h

    def ratio(self, t):
        """``hdot / h``."""
        return self.hdot / self.h(t)


@dataclass(frozen=True)
class HeleShawParams:
    """Mobility ``k = h**2 / (12 nu)``, optional surface-tension datum and gap law."""

    k: float = 1.0
    surface_tension_phi: Optional[AnalyticDatum] = None
    gap_law: Optional[GapLaw] = None

    def __post_init__(self):
        if not (self.k > 0 and math.isfinite(self.k)):
            raise ValueError(f"mobility k must be positive, got {self.k}")


def circle_surface_tension(family: MovingFamily, gamma: float) -> AnalyticDatum:
    """Datum ``phi = gamma / a(t)`` (Laplace pressure jump of a circle)."""
    def phi(z, w, t):
        a, _ = family.shape(0.0 if t is None else t)
        return np.full(np.broadcast(z, w).shape, gamma / a, dtype=complex)

    return AnalyticDatum(phi, takes_time=True)


@dataclass(frozen=True)
class SourceStructure:
    """Singular support of a pressure field.

    ``kind`` is ``"point_log"`` (``location``, ``strength``),
    ``"interfocal_density"`` (``d``, ``density``) or ``"infinity_log"``
    (``strength``). ``strength`` is the coefficient of ``ln|z - location|``
    in the pressure near the source (of ``ln|z|`` as ``|z| -> oo``).
    """

    kind: str
    strength: float = 0.0
    location: complex = 0j
    d: float = 0.0
    density: Optional[Callable[[float], float]] = None

    def distance(self, z) -> float:
        """Distance from ``z`` to the support (infinity counts as never close)."""
        z = complex(z)
        if self.kind == "point_log":
            return abs(z - self.location)
        if self.kind == "interfocal_density":
            x = min(max(z.real, -self.d), self.d)
            return abs(z - x)
        return math.inf


def source_structure(family: MovingFamily, t: float, params: HeleShawParams):
    """Sources of the sink/source pressure inside ``Gamma(t)`` and at infinity."""
    rate = family.area_rate(t)
    strength = -rate / (2 * math.pi * params.k)
    out = [SourceStructure("infinity_log", strength=strength)]
    if family.kind == "circle":
        out.append(SourceStructure("point_log", strength=strength))
    else:
        d = family.curve(t).d
        out.append(SourceStructure("interfocal_density", d=d,
                                   density=lambda x: interfocal_density(family, t, params, x)))
    return out


def _sink_source_value(family, t, params, p, tolerance):
    p = as_point(p)
    if not p.is_real():
        raise OutOfDomain("pressure is evaluated at real points only")
    curve = family.curve(t)
    path = ChartPath.build(curve, p, tolerance)
    phi = params.surface_tension_phi
    pair = 0.0
    if phi is not None:
        pair = complex(phi(path.z_low, p.w, t)) + complex(phi(p.z, path.w_up, t))
    integral = path.integrate(lambda tau: family.schwarz_dot_dz_chart(tau, t))
    return 0.5 * pair - integral / (4 * params.k)


def pressure_sink_source(family: MovingFamily, t: float, params: HeleShawParams, p,
                         tolerance: float = DEFAULT_TOLERANCE) -> float:
    """Pressure of the sink/source-driven flow at the real point ``p``."""
    return ensure_real(_sink_source_value(family, t, params, p, tolerance))


def gap_ratio(family: MovingFamily, t: float, params: HeleShawParams) -> float:
    """``hdot/h`` from the gap law, or from volume conservation ``(ab)'/(ab) + hdot/h = 0``."""
    if params.gap_law is not None:
        return params.gap_law.ratio(t)
    own = family.gap_ratio(t)
    if own is not None:
        return own
    a, b = family.shape(t)
    if a * b == 0:
        raise RateLawUnderdetermined("volume conservation needs a non-degenerate area")
    return -family.area_rate(t) / (math.pi * a * b)


def gap_integrand(family: MovingFamily, t: float, ratio: float, s):
    """``S_t(s) + (hdot/h) S(s)`` at plane points ``s``."""
    curve = family.curve(t)
    tau = curve.chart(s)
    out = family.schwarz_dot_chart(tau, t) + ratio * curve.chart_w(tau)
    return out if np.ndim(out) else complex(out)


def harmonic_gap_pressure(family: MovingFamily, t: float, params: HeleShawParams, p,
                          tolerance: float = DEFAULT_TOLERANCE) -> float:
    """Harmonic part ``p_h = p - (hdot/4kh)(x**2 + y**2)`` of the gap-driven pressure."""
    p = as_point(p)
    if not p.is_real():
        raise OutOfDomain("pressure is evaluated at real points only")
    ratio = gap_ratio(family, t, params)
    k = params.k
    curve = family.curve(t)
    path = ChartPath.build(curve, p, tolerance)

    def integrand(tau):
        return family.schwarz_dot_dz_chart(tau, t) + ratio * curve.chart_w(tau) * curve.chart_dz(tau)

    value = -ratio / (4 * k) * p.w * path.z_low - path.integrate(integrand) / (4 * k)
    return ensure_real(value)


def pressure_gap(family: MovingFamily, t: float, params: HeleShawParams, p,
                 tolerance: float = DEFAULT_TOLERANCE) -> float:
    """Pressure of the gap-driven flow, solving ``Delta p = hdot/(k h)``."""
    p = as_point(p)
    ratio = gap_ratio(family, t, params)
    ph = harmonic_gap_pressure(family, t, params, p, tolerance)
    return ph + ratio / (4 * params.k) * abs(p.z) ** 2


def normal_velocity(family: MovingFamily, t: float, z_on_curve) -> float:
    """Outward normal speed ``v_n = -i S_t / (2 sqrt(S'))`` of ``Gamma(t)`` at ``z_on_curve``."""
    curve = family.curve(t)
    z = complex(z_on_curve)
    if abs(complex(curve.schwarz(z)) - z.conjugate()) > ON_CURVE_TOL * max(1.0, curve.scale):
        raise OutOfDomain(f"{z} is not on the curve at t={t}")
    root = complex(curve.sqrt_schwarz_derivative(z))
    vn = -1j * complex(family.schwarz_dot(z, t)) / (2 * root)
    return ensure_real(vn, "normal velocity", 1e-10)


def _require_ellipse(family):
    if not isinstance(family, _EllipseLike):
        raise ScenarioMismatch("inter-focal densities exist for ellipse families only")


def interfocal_density(family: MovingFamily, t: float, params: HeleShawParams, x) -> float:
    """Density of sources on ``(-d, d)`` equivalent to the sink/source pressure.

    Closed forms for constant eccentricity and constant area; any other
    ellipse family uses the jump of ``dp/dy`` across the segment,
    ``mu = -Im S_t(x + i0) / k``.
    """
    _require_ellipse(family)
    curve = family.curve(t)
    d = curve.d
    x = float(x)
    if abs(x) >= d:
        raise OutOfSupport(f"|x| = {abs(x)} is outside the inter-focal segment (d = {d})")
    a, b = family.shape(t)
    adot, bdot = family.rates(t)
    k = params.k
    q = math.sqrt(d * d - x * x)
    rate = family.rate
    if isinstance(rate, ConstantEccentricity):
        d_ddot = a * adot - b * bdot
        return 2 * a * b / (d * d * k) * d_ddot / q
    if isinstance(rate, ConstantArea):
        dd_dot = 2 * a * adot - 2 * b * bdot
        return a * b * dd_dot / (k * d ** 4) * (2 * x * x - d * d) / q
    return interfocal_density_from_jump(family, t, params, x)


def interfocal_density_from_jump(family: MovingFamily, t: float, params: HeleShawParams, x) -> float:
    """``-Im S_t(x + i0, t) / k``, valid for every ellipse family."""
    _require_ellipse(family)
    curve = family.curve(t)
    d = curve.d
    if abs(x) >= d:
        raise OutOfSupport(f"|x| = {abs(x)} is outside the inter-focal segment (d = {d})")
    # upper rim of the cut: zeta on the unit circle in the upper half plane
    tau = complex(x / d, math.sqrt(d * d - x * x) / d)
    return -complex(family.schwarz_dot_chart(tau, t)).imag / params.k


def flux_balance(family: MovingFamily, t: float, params: HeleShawParams,
                 tolerance: float = 1e-12):
    """``(integral of k mu over (-d, d), pi (ab)')``.

    The substitution ``x = d sin(theta)`` cancels the inverse square-root
    endpoint behaviour of ``mu``.
    """
    _require_ellipse(family)
    d = family.curve(t).d
    k = params.k

    def integrand(theta):
        theta = np.real(theta)
        x = d * np.sin(theta)
        vals = [k * interfocal_density(family, t, params, xi) for xi in x]
        return np.array(vals) * d * np.cos(theta)

    flux = integrate_path(integrand, IntegrationPath(-math.pi / 2, math.pi / 2, tolerance=tolerance))
    return ensure_real(flux, "flux"), family.area_rate(t)
