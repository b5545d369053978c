"""
Real-analytic curves represented by their Schwarz functions.

A curve ``Gamma`` is stored through ``S`` with ``S(z) = conj(z)`` on
``Gamma``. Besides the plane formulas, every curve carries a *chart* of its
complexification ``Gamma_C = {(z, S(z))}``: a parameter ``tau`` together with
single-valued maps ``tau -> z`` and ``tau -> w``. For lines and circles the
chart parameter is ``z`` itself. For the ellipse it is the Joukowski variable
``zeta`` with ``z = d/2 (zeta + 1/zeta)``; there ``S`` becomes
``w = d/2 (zeta/rho**2 + rho**2/zeta)`` with ``rho = (a + b)/d`` and the branch
cut of ``sqrt(z**2 - d**2)`` disappears. Path integrals over ``Gamma_C`` are
done in the chart.

Moving families (circle, ellipse, confocal ellipse) add the time derivative
``S_t`` for several rate laws.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .errors import BranchCutHit, OutOfDomain, RateLawUnderdetermined, SingularPoint

FOCUS_TOL = 1e-9
CUT_TOL = 1e-12


def _scalar_or_array(x):
    x = np.asarray(x)
    return complex(x) if x.ndim == 0 else x


@dataclass(frozen=True)
class ComplexPoint:
    """A point of C^2 in characteristic coordinates ``z = x + iy``, ``w = x - iy``."""

    z: complex
    w: complex

    @classmethod
    def from_xy(cls, x, y):
        return cls(complex(x, y), complex(x, -y))

    @classmethod
    def from_z(cls, z):
        z = complex(z)
        return cls(z, z.conjugate())

    @property
    def x(self):
        return (self.z + self.w) / 2

    @property
    def y(self):
        return (self.z - self.w) / 2j

    def is_real(self, tol=1e-12):
        return abs(self.w - self.z.conjugate()) <= tol * max(1.0, abs(self.z))

    def __iter__(self):
        yield self.z
        yield self.w


def as_point(p) -> ComplexPoint:
    """Accept a ComplexPoint, a complex ``z`` (real point) or an ``(x, y)`` pair."""
    if isinstance(p, ComplexPoint):
        return p
    if isinstance(p, (tuple, list)) and len(p) == 2:
        return ComplexPoint.from_xy(float(p[0]), float(p[1]))
    return ComplexPoint.from_z(complex(p))


class Curve:
    """Common interface; concrete curves are :class:`Line`, :class:`Circle`, :class:`Ellipse`."""

    kind = "curve"
    #: points of the chart plane where the integrands may blow up
    chart_singularities: tuple = ()

    @property
    def chart_branch_points(self) -> tuple:
        """Chart points where ``S'`` vanishes or blows up, so ``sqrt(S')`` branches."""
        return ()

    @property
    def scale(self) -> float:
        return 1.0

    @property
    def chart_detour(self) -> float:
        return 0.1 * self.scale

    # plane formulas -------------------------------------------------------
    def schwarz(self, z):
        return _scalar_or_array(self.chart_w(self.chart(z)))

    def schwarz_inverse(self, w):
        return _scalar_or_array(self.chart_z(self.chart_lower(w)))

    def sqrt_schwarz_derivative(self, z):
        """``sqrt(S'(z))`` on the branch whose on-curve values give the outward normal."""
        return _scalar_or_array(self.chart_sqrt_dS(self.chart(z)))

    def normal(self, z):
        """Unit normal at ``z`` on the curve (as a complex number), ``-i conj(sqrt S')``."""
        return _scalar_or_array(-1j * np.conj(self.sqrt_schwarz_derivative(z)))

    def in_domain(self, z) -> bool:
        return True

    # seed of the sqrt(S') branch ----------------------------------------
    @property
    def seed_point(self) -> complex:
        raise NotImplementedError

    def branch_route(self, tau_from, tau_to, n=64):
        """Chart checkpoints from ``tau_from`` to ``tau_to`` used to continue sqrt(S')."""
        return np.linspace(tau_from, tau_to, n + 1)

    def boundary_samples(self, n):
        """``n`` points on the curve by parameter, with their outward normals."""
        raise NotImplementedError

    # chart ------------------------------------------------------------------
    def chart(self, z):
        raise NotImplementedError

    def chart_lower(self, w):
        """Chart parameter of the point ``(S~(w), w)`` of Gamma_C."""
        raise NotImplementedError

    def chart_of_pair(self, z, w):
        """Chart parameter of ``(z, w)`` on Gamma_C, analytic in both arguments."""
        return self.chart(z)

    def chart_z(self, tau):
        raise NotImplementedError

    def chart_w(self, tau):
        raise NotImplementedError

    def chart_dz(self, tau):
        raise NotImplementedError

    def chart_dw(self, tau):
        raise NotImplementedError

    def chart_sqrt_dS(self, tau):
        raise NotImplementedError


@dataclass(frozen=True)
class Line(Curve):
    """Line with Schwarz function ``S(z) = m z + q``, ``|m| = 1``."""

    m: complex = 1.0
    q: complex = 0.0
    kind = "line"

    def __post_init__(self):
        object.__setattr__(self, "m", complex(self.m))
        object.__setattr__(self, "q", complex(self.q))
        if abs(abs(self.m) - 1.0) > 1e-12:
            raise ValueError(f"line slope factor must have |m| = 1, got {self.m}")

    @classmethod
    def from_coefficients(cls, alpha, beta, delta):
        """Line ``alpha x + beta y + delta = 0``."""
        n2 = alpha * alpha + beta * beta
        if n2 == 0:
            raise ValueError("alpha and beta cannot both vanish")
        m = complex(beta * beta - alpha * alpha, 2 * alpha * beta) / n2
        q = complex(-2 * alpha * delta, 2 * beta * delta) / n2
        return cls(m, q)

    @property
    def tangent(self):
        return complex(np.exp(-0.5j * np.angle(self.m)))

    @property
    def seed_point(self):
        return self.base_point

    @property
    def base_point(self):
        """Point of the line closest to the origin."""
        n = 1j * self.tangent
        lam = (1j * self.q / (2 * self.m * self.tangent)).real
        return lam * n

    def schwarz_derivative(self, z):
        return _scalar_or_array(np.full(np.shape(z), self.m))

    def boundary_samples(self, n, half_length=1.0):
        s = np.linspace(-half_length, half_length, n)
        z = self.base_point + s * self.tangent
        return z, np.full(n, complex(self.normal(z[0])))

    def chart(self, z):
        return np.asarray(z, dtype=complex)

    def chart_lower(self, w):
        return (np.asarray(w, dtype=complex) - self.q) / self.m

    def chart_z(self, tau):
        return np.asarray(tau, dtype=complex)

    def chart_w(self, tau):
        return self.m * np.asarray(tau, dtype=complex) + self.q

    def chart_dz(self, tau):
        return np.ones(np.shape(tau), dtype=complex)

    def chart_dw(self, tau):
        return np.full(np.shape(tau), self.m)

    def chart_sqrt_dS(self, tau):
        # x-axis convention sqrt(1) = -1: the normal is +y
        return np.full(np.shape(tau), -np.sqrt(self.m))


def _arc_then_radial(tau_from, tau_to, n=64):
    tau_from, tau_to = complex(tau_from), complex(tau_to)
    r0 = abs(tau_from)
    th0, th1 = np.angle(tau_from), np.angle(tau_to)
    dth = (th1 - th0 + np.pi) % (2 * np.pi) - np.pi
    m = max(2, int(np.ceil(abs(dth) / (np.pi / 64))))
    arc = r0 * np.exp(1j * (th0 + dth * np.linspace(0.0, 1.0, m + 1)))
    radial = np.exp(np.linspace(np.log(r0), np.log(abs(tau_to)), n + 1)[1:]) * np.exp(1j * th1)
    return np.concatenate([arc, radial])


@dataclass(frozen=True)
class Circle(Curve):
    """Circle ``|z| = a`` centred at the origin, ``S(z) = a**2 / z``."""

    a: float
    kind = "circle"
    chart_singularities = (0j,)

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"circle radius must be positive, got {self.a}")

    @property
    def scale(self):
        return float(self.a)

    @property
    def seed_point(self):
        return complex(self.a)

    def in_domain(self, z):
        return complex(z) != 0

    def _check(self, z):
        z = np.asarray(z, dtype=complex)
        if np.any(z == 0):
            raise OutOfDomain("the circle's Schwarz function is singular at z = 0")
        return z

    def schwarz_derivative(self, z):
        z = self._check(z)
        return _scalar_or_array(-self.a ** 2 / z ** 2)

    def branch_route(self, tau_from, tau_to, n=64):
        return _arc_then_radial(tau_from, tau_to, n)

    def boundary_samples(self, n):
        theta = 2 * np.pi * np.arange(n) / n
        e = np.exp(1j * theta)
        return self.a * e, e

    def chart(self, z):
        return self._check(z)

    def chart_lower(self, w):
        w = np.asarray(w, dtype=complex)
        if np.any(w == 0):
            raise OutOfDomain("inverse Schwarz function of the circle is singular at w = 0")
        return self.a ** 2 / w

    def chart_z(self, tau):
        return np.asarray(tau, dtype=complex)

    def chart_w(self, tau):
        return self.a ** 2 / np.asarray(tau, dtype=complex)

    def chart_dz(self, tau):
        return np.ones(np.shape(tau), dtype=complex)

    def chart_dw(self, tau):
        return -self.a ** 2 / np.asarray(tau, dtype=complex) ** 2

    def chart_sqrt_dS(self, tau):
        return -1j * self.a / np.asarray(tau, dtype=complex)


@dataclass(frozen=True)
class Ellipse(Curve):
    """Ellipse ``x**2/a**2 + y**2/b**2 = 1`` with ``a > b > 0``.

    ``S(z) = ((a**2 + b**2) z - 2ab sqrt(z**2 - d**2)) / d**2`` with the root
    cut along the inter-focal segment and asymptotic to ``z`` at infinity.
    """

    a: float
    b: float
    kind = "ellipse"
    chart_singularities = (0j,)

    def __post_init__(self):
        if not (self.a > self.b > 0):
            raise ValueError(f"ellipse needs a > b > 0, got a={self.a}, b={self.b}")

    @property
    def d(self):
        return math.sqrt(self.a * self.a - self.b * self.b)

    @property
    def rho(self):
        return (self.a + self.b) / self.d

    @property
    def scale(self):
        return float(self.a)

    @property
    def chart_detour(self):
        return 0.1

    @property
    def chart_branch_points(self):
        # S' is infinite at the foci (tau = +-1) and zero at z = +-(a**2 + b**2)/d
        r2 = self.rho ** 2
        return (1.0 + 0j, -1.0 + 0j, complex(r2), complex(-r2))

    @property
    def seed_point(self):
        return complex(self.a)

    def root(self, z):
        """Principal ``sqrt(z**2 - d**2)``: cut on ``[-d, d]``, ``~ z`` at infinity."""
        # adding 0j turns a -0.0 imaginary part into +0.0 so both factors agree
        z = np.asarray(z, dtype=complex) + 0j
        return np.sqrt(z - self.d) * np.sqrt(z + self.d)

    def _check(self, z):
        z = np.asarray(z, dtype=complex)
        d = self.d
        on_cut = (np.abs(z.imag) <= CUT_TOL * d) & (np.abs(z.real) < d * (1 - FOCUS_TOL))
        if np.any(on_cut):
            raise BranchCutHit("point on the inter-focal branch cut (-d, d)")
        return z

    def _check_foci(self, z):
        if np.any(np.minimum(np.abs(z - self.d), np.abs(z + self.d)) < FOCUS_TOL * self.d):
            raise SingularPoint("S' is singular at the foci")

    def schwarz(self, z):
        z = self._check(z)
        a, b, d2 = self.a, self.b, self.d ** 2
        return _scalar_or_array(((a * a + b * b) * z - 2 * a * b * self.root(z)) / d2)

    def schwarz_inverse(self, w):
        return self.schwarz(w)

    def schwarz_derivative(self, z):
        z = self._check(z)
        self._check_foci(z)
        a, b, d2 = self.a, self.b, self.d ** 2
        return _scalar_or_array(((a * a + b * b) - 2 * a * b * z / self.root(z)) / d2)

    def in_domain(self, z):
        """Confocal annulus ``1 < |zeta| < rho**2`` where the closed-form S~ inverts S."""
        try:
            tau = complex(self.chart(z))
        except BranchCutHit:
            return False
        return 1.0 + 1e-9 < abs(tau) < self.rho ** 2 * (1 - 1e-9)

    def branch_route(self, tau_from, tau_to, n=64):
        return _arc_then_radial(tau_from, tau_to, n)

    def boundary_samples(self, n):
        theta = 2 * np.pi * np.arange(n) / n
        z = self.a * np.cos(theta) + 1j * self.b * np.sin(theta)
        nrm = np.cos(theta) / self.a + 1j * np.sin(theta) / self.b
        return z, nrm / np.abs(nrm)

    def chart(self, z):
        z = self._check(z)
        return (z + self.root(z)) / self.d

    def chart_lower(self, w):
        return self.rho ** 2 / self.chart(w)

    def chart_of_pair(self, z, w):
        # on Gamma_C the root is linear in (z, w): r = (A z - D w) / (2P)
        z = np.asarray(z, dtype=complex)
        w = np.asarray(w, dtype=complex)
        a, b, d = self.a, self.b, self.d
        r = ((a * a + b * b) * z - d * d * w) / (2 * a * b)
        return (z + r) / d

    def chart_z(self, tau):
        tau = np.asarray(tau, dtype=complex)
        return 0.5 * self.d * (tau + 1 / tau)

    def chart_root(self, tau):
        """``sqrt(z**2 - d**2)`` continued onto whichever sheet ``tau`` lies."""
        tau = np.asarray(tau, dtype=complex)
        return 0.5 * self.d * (tau - 1 / tau)

    def chart_w(self, tau):
        tau = np.asarray(tau, dtype=complex)
        r2 = self.rho ** 2
        return 0.5 * self.d * (tau / r2 + r2 / tau)

    def chart_dz(self, tau):
        tau = np.asarray(tau, dtype=complex)
        return 0.5 * self.d * (1 - 1 / tau ** 2)

    def chart_dw(self, tau):
        tau = np.asarray(tau, dtype=complex)
        r2 = self.rho ** 2
        return 0.5 * self.d * (1 / r2 - r2 / tau ** 2)

    def chart_sqrt_dS(self, tau):
        # analytic on the annulus 1 < |tau| < rho**2 and equal to -i at tau = rho
        tau = np.asarray(tau, dtype=complex)
        r = self.rho
        return -1j * (r / tau) * np.sqrt(1 - tau ** 2 / r ** 4) / np.sqrt(1 - 1 / tau ** 2)


def schwarz(curve: Curve, z):
    """``S(z)`` for ``curve``."""
    return curve.schwarz(z)


def schwarz_inverse(curve: Curve, w):
    """``S~(w)``, the inverse Schwarz function."""
    return curve.schwarz_inverse(w)


def schwarz_derivative(curve: Curve, z):
    """``S'(z)``."""
    return curve.schwarz_derivative(z)


def reflect(curve: Curve, p) -> ComplexPoint:
    """Anticonformal reflection in the curve, ``R(z) = conj(S(z))``."""
    p = as_point(p)
    return ComplexPoint.from_z(complex(np.conj(curve.schwarz(p.z))))


# ---------------------------------------------------------------------------
# rate laws and moving families


@dataclass(frozen=True)
class PrescribedRates:
    """``a(t) = a0 + adot t`` (and ``b(t) = b0 + bdot t`` for free ellipses)."""

    adot: float = 0.0
    bdot: Optional[float] = None


@dataclass(frozen=True)
class ConstantEccentricity:
    """``a/b`` frozen at its initial value, ``a(t) = a0 + adot t``."""

    adot: float


@dataclass(frozen=True)
class ConstantArea:
    """``a b`` frozen at its initial value, ``a(t) = a0 + adot t``."""

    adot: float


@dataclass(frozen=True)
class GapConservation:
    """Circle driven by a gap ``h(t) = h0 + hdot t`` with ``a**2 h`` conserved."""

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
class CustomRates:
    """Arbitrary ``a(t)``, ``b(t)``.

    ``adot``, ``bdot`` come from central differences with step :func:`fd_step`;
    ``S_t`` is exact in ``(a, b, adot, bdot)``, so no difference of ``S``
    itself is taken.
    """

    a_of_t: Callable[[float], float]
    b_of_t: Optional[Callable[[float], float]] = None


RateLaw = Union[PrescribedRates, ConstantEccentricity, ConstantArea, GapConservation, CustomRates]


def fd_step(t):
    return max(1e-6, 1e-6 * abs(t))


def _central(f, t):
    dt = fd_step(t)
    return (f(t + dt) - f(t - dt)) / (2 * dt)


@dataclass(frozen=True)
class FamilyState:
    curve: Curve
    a: float
    b: float
    adot: float
    bdot: float


class MovingFamily:
    """Time-parameterised curve with ``S_t``; see the concrete families."""

    kind = "family"
    rate: RateLaw

    def shape(self, t):
        raise NotImplementedError

    def rates(self, t):
        raise NotImplementedError

    def curve(self, t=0.0) -> Curve:
        raise NotImplementedError

    def state(self, t=0.0) -> FamilyState:
        a, b = self.shape(t)
        adot, bdot = self.rates(t)
        return FamilyState(self.curve(t), a, b, adot, bdot)

    @property
    def uses_finite_differences(self):
        return isinstance(self.rate, CustomRates)

    def area(self, t=0.0):
        a, b = self.shape(t)
        return math.pi * a * b

    def area_rate(self, t=0.0):
        a, b = self.shape(t)
        adot, bdot = self.rates(t)
        return math.pi * (adot * b + a * bdot)

    def gap_ratio(self, t=0.0):
        """``hdot/h`` if the rate law is gap-driven, else ``None``."""
        if isinstance(self.rate, GapConservation):
            return self.rate.ratio(t)
        return None

    def schwarz_dot_chart(self, tau, t):
        raise NotImplementedError

    def schwarz_dot_dz_chart(self, tau, t):
        """``S_t * dz/dtau`` on the chart of ``curve(t)``."""
        curve = self.curve(t)
        return self.schwarz_dot_chart(tau, t) * curve.chart_dz(tau)

    def schwarz_dot(self, z, t):
        curve = self.curve(t)
        return _scalar_or_array(self.schwarz_dot_chart(curve.chart(z), t))

    def is_static(self, t=0.0):
        adot, bdot = self.rates(t)
        return adot == 0 and bdot == 0


@dataclass(frozen=True)
class CircleFamily(MovingFamily):
    a0: float
    rate: RateLaw = PrescribedRates()
    kind = "circle"

    def __post_init__(self):
        if not self.a0 > 0:
            raise ValueError("circle radius must be positive")
        if isinstance(self.rate, (ConstantEccentricity, ConstantArea)):
            raise RateLawUnderdetermined(f"{type(self.rate).__name__} does not apply to circles")

    def _radius(self, t):
        r = self.rate
        if isinstance(r, PrescribedRates):
            a = self.a0 + r.adot * t
        elif isinstance(r, GapConservation):
            a = self.a0 * math.sqrt(r.h(0.0) / r.h(t))
        else:
            a = float(r.a_of_t(t))
        if not a > 0:
            raise OutOfDomain(f"circle radius non-positive at t={t}")
        return a

    def shape(self, t=0.0):
        a = self._radius(t)
        return a, a

    def rates(self, t=0.0):
        r = self.rate
        if isinstance(r, PrescribedRates):
            adot = r.adot
        elif isinstance(r, GapConservation):
            adot = -0.5 * r.ratio(t) * self._radius(t)
        else:
            adot = _central(self._radius, t)
        return adot, adot

    def curve(self, t=0.0):
        return Circle(self._radius(t))

    def schwarz_dot_chart(self, tau, t):
        tau = np.asarray(tau, dtype=complex)
        a = self._radius(t)
        adot, _ = self.rates(t)
        return 2 * a * adot / tau


class _EllipseLike(MovingFamily):

    def curve(self, t=0.0):
        a, b = self.shape(t)
        if not a > b > 0:
            raise OutOfDomain(f"family leaves a > b > 0 at t={t} (a={a}, b={b})")
        return Ellipse(a, b)

    def schwarz_dot_parts(self, t):
        """Coefficients of ``S_t = (A' z - 2P' r + P D'/r)/D - (D'/D) S``."""
        a, b = self.shape(t)
        adot, bdot = self.rates(t)
        A_dot = 2 * a * adot + 2 * b * bdot
        P, P_dot = a * b, adot * b + a * bdot
        D, D_dot = a * a - b * b, 2 * a * adot - 2 * b * bdot
        return A_dot, P, P_dot, D, D_dot

    def schwarz_dot_chart(self, tau, t):
        curve = self.curve(t)
        tau = np.asarray(tau, dtype=complex)
        z = curve.chart_z(tau)
        r = curve.chart_root(tau)
        A_dot, P, P_dot, D, D_dot = self.schwarz_dot_parts(t)
        w = curve.chart_w(tau)
        out = (A_dot * z - 2 * P_dot * r) / D - D_dot * w / D
        if D_dot != 0:
            if np.any(r == 0):
                raise SingularPoint("S_t is singular at the foci of a non-confocal family")
            out = out + P * D_dot / (r * D)
        return out

    def schwarz_dot_dz_chart(self, tau, t):
        curve = self.curve(t)
        tau = np.asarray(tau, dtype=complex)
        z, r, w, dz = curve.chart_z(tau), curve.chart_root(tau), curve.chart_w(tau), curve.chart_dz(tau)
        A_dot, P, P_dot, D, D_dot = self.schwarz_dot_parts(t)
        # dz/r = dtau/tau exactly, which keeps the foci regular
        return ((A_dot * z - 2 * P_dot * r) * dz + P * D_dot / tau) / D - D_dot * w * dz / D


@dataclass(frozen=True)
class EllipseFamily(_EllipseLike):
    a0: float
    b0: float
    rate: RateLaw = PrescribedRates(0.0, 0.0)
    kind = "ellipse"

    def __post_init__(self):
        if not self.a0 > self.b0 > 0:
            raise ValueError("ellipse family needs a0 > b0 > 0")

    @property
    def ratio(self):
        return self.a0 / self.b0

    @property
    def area_product(self):
        return self.a0 * self.b0

    def _a(self, t):
        r = self.rate
        if isinstance(r, CustomRates):
            return float(r.a_of_t(t))
        if isinstance(r, GapConservation):
            raise RateLawUnderdetermined("a gap law alone does not fix a(t), b(t) for a free ellipse")
        return self.a0 + r.adot * t

    def _b(self, t):
        r = self.rate
        if isinstance(r, PrescribedRates):
            if r.bdot is None:
                raise RateLawUnderdetermined("ellipse family with PrescribedRates needs bdot")
            return self.b0 + r.bdot * t
        if isinstance(r, ConstantEccentricity):
            return self._a(t) / self.ratio
        if isinstance(r, ConstantArea):
            return self.area_product / self._a(t)
        if isinstance(r, CustomRates):
            if r.b_of_t is None:
                raise RateLawUnderdetermined("CustomRates for an ellipse needs b_of_t")
            return float(r.b_of_t(t))
        raise RateLawUnderdetermined(f"{type(r).__name__} does not determine b(t)")

    def shape(self, t=0.0):
        return self._a(t), self._b(t)

    def rates(self, t=0.0):
        r = self.rate
        if isinstance(r, CustomRates):
            return _central(self._a, t), _central(self._b, t)
        a = self._a(t)
        if isinstance(r, PrescribedRates):
            self._b(t)
            return r.adot, r.bdot
        if isinstance(r, ConstantEccentricity):
            return r.adot, r.adot / self.ratio
        if isinstance(r, ConstantArea):
            return r.adot, -self.area_product * r.adot / (a * a)
        raise RateLawUnderdetermined(f"{type(r).__name__} does not determine the rates")


@dataclass(frozen=True)
class ConfocalEllipseFamily(_EllipseLike):
    """Ellipses with fixed foci ``+-d0``; ``b(t) = sqrt(a(t)**2 - d0**2)``."""

    d0: float
    a0: float
    rate: RateLaw = PrescribedRates(0.0)
    kind = "confocal_ellipse"

    def __post_init__(self):
        if not self.a0 > self.d0 > 0:
            raise ValueError("confocal family needs a0 > d0 > 0")
        if isinstance(self.rate, PrescribedRates) and self.rate.bdot is not None:
            raise RateLawUnderdetermined("bdot is implied by the confocal constraint; omit it")
        if not isinstance(self.rate, (PrescribedRates, CustomRates)):
            raise RateLawUnderdetermined(
                f"{type(self.rate).__name__} does not apply to a confocal family; prescribe adot")

    def _a(self, t):
        r = self.rate
        if isinstance(r, CustomRates):
            return float(r.a_of_t(t))
        return self.a0 + r.adot * t

    def _b(self, t):
        a = self._a(t)
        if not a > self.d0:
            raise OutOfDomain(f"confocal family degenerates at t={t}")
        return math.sqrt(a * a - self.d0 ** 2)

    def shape(self, t=0.0):
        return self._a(t), self._b(t)

    def rates(self, t=0.0):
        a, b = self.shape(t)
        if isinstance(self.rate, CustomRates):
            adot = _central(self._a, t)
        else:
            adot = self.rate.adot
        return adot, a * adot / b


def schwarz_time_derivative(family: MovingFamily, z, t=0.0):
    """``S_t(z, t)`` at fixed ``z``."""
    return family.schwarz_dot(z, t)
