"""
Reflection of harmonic functions in an analytic curve.

For ``u`` harmonic near ``Gamma`` with trace ``phi`` and normal derivative
``psi`` the point ``P`` and its mirror image ``R(P)`` are tied by

* ``u(P) + u(R(P)) = phi(S~(w0), w0) + phi(z0, S(z0))``,
* ``u(P) - u(R(P)) = i * integral_{S~(w0)}^{z0} psi(z, S(z)) sqrt(S'(z)) dz``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .complexified import ChartPath
from .curves import ComplexPoint, Curve, as_point
from .numerics import DEFAULT_TOLERANCE, BranchTracker

DIRICHLET = "dirichlet"
NEUMANN = "neumann"


@dataclass(frozen=True)
class AnalyticDatum:
    """Boundary datum continued to C^2: ``eval(z, w)`` or ``eval(z, w, t)``.

    ``eval`` must accept numpy arrays. Analyticity is the caller's contract;
    :func:`cauchy_riemann_defect` spot-checks it.
    """

    eval: Callable
    label: str = DIRICHLET
    takes_time: bool = False

    def __post_init__(self):
        if self.label not in (DIRICHLET, NEUMANN):
            raise ValueError(f"label must be {DIRICHLET!r} or {NEUMANN!r}")

    def __call__(self, z, w, t=None):
        z = np.asarray(z, dtype=complex)
        w = np.asarray(w, dtype=complex)
        out = self.eval(z, w, t) if self.takes_time else self.eval(z, w)
        out = np.broadcast_to(np.asarray(out, dtype=complex), np.broadcast(z, w).shape)
        return out if out.ndim else complex(out)

    @classmethod
    def constant(cls, value, label=DIRICHLET):
        return cls(lambda z, w: np.full(np.broadcast(z, w).shape, complex(value)), label)

    @classmethod
    def zero(cls, label=DIRICHLET):
        return cls.constant(0.0, label)


def cauchy_riemann_defect(datum: AnalyticDatum, points, h=1e-6, t=None) -> float:
    """Largest violation of the Cauchy-Riemann equations in ``z`` and ``w``.

    At each ``(z, w)`` the derivative along the real and imaginary directions
    must agree: ``f_x = -i f_y`` in each argument separately. Returned
    relative to ``1 + |f_x|``.
    """
    worst = 0.0
    for z, w in points:
        for dz, dw in ((1, 0), (0, 1)):
            def f(step):
                return datum(z + step * dz, w + step * dw, t)
            fx = (f(h) - f(-h)) / (2 * h)
            fy = (f(1j * h) - f(-1j * h)) / (2 * h)
            worst = max(worst, abs(fx + 1j * fy) / (1 + abs(fx)))
    return worst


def check_analytic(datum: AnalyticDatum, curve: Curve, n=8, tol=1e-5, t=None) -> float:
    """Spot-check ``datum`` at ``n`` points of Gamma_C; raise ``ValueError`` on failure."""
    z, _ = curve.boundary_samples(n)
    pts = [(zi, complex(curve.schwarz(zi))) for zi in z]
    defect = cauchy_riemann_defect(datum, pts, t=t)
    if defect > tol:
        raise ValueError(f"datum {datum.label!r} fails the Cauchy-Riemann spot check "
                         f"(defect {defect:.2e})")
    return defect


@dataclass(frozen=True)
class StudyRectangle:
    """``p00 = (z0, w0)``, ``p10 = (S~(w0), w0)``, ``p01 = (z0, S(z0))``, ``p11 = (S~(w0), S(z0))``."""

    p00: ComplexPoint
    p10: ComplexPoint
    p01: ComplexPoint
    p11: ComplexPoint

    def reflected_point(self) -> ComplexPoint:
        """``R(P)`` as a real point, read from the z-coordinate of ``p11``."""
        return ComplexPoint.from_z(self.p11.z)


def study_rectangle(curve: Curve, p) -> StudyRectangle:
    p = as_point(p)
    z_low = complex(curve.schwarz_inverse(p.w))
    w_up = complex(curve.schwarz(p.z))
    return StudyRectangle(p, ComplexPoint(z_low, p.w), ComplexPoint(p.z, w_up),
                          ComplexPoint(z_low, w_up))


def dirichlet_pair_sum(curve: Curve, phi: AnalyticDatum, p, t=None) -> complex:
    """``phi(S~(w0), w0) + phi(z0, S(z0))``, i.e. ``u(P) + u(R(P))``."""
    path = ChartPath.build(curve, p)
    return _pair_sum(path, phi, t)


def _pair_sum(path: ChartPath, phi: AnalyticDatum, t=None) -> complex:
    p = path.point
    return complex(phi(path.z_low, p.w, t)) + complex(phi(p.z, path.w_up, t))


def neumann_jump(curve: Curve, psi: AnalyticDatum, p, branch: Optional[BranchTracker] = None,
                 tolerance: float = DEFAULT_TOLERANCE, t=None) -> complex:
    """``i * integral psi(z, S(z)) sqrt(S') dz`` from ``S~(w0)`` to ``z0``, i.e. ``u(P) - u(R(P))``.

    ``branch`` selects the root of ``S'``; the default gives the outward
    normal (see :func:`schwarzflow.complexified.default_tracker`).
    """
    path = ChartPath.build(curve, p, tolerance)
    return 1j * _psi_integral(path, psi, branch, t)


def _psi_integral(path: ChartPath, psi: AnalyticDatum, branch=None, t=None, weight=None):
    curve = path.curve
    root = path.sqrt_dS(branch)

    def integrand(tau):
        z, w = curve.chart_z(tau), curve.chart_w(tau)
        val = psi(z, w, t) * root(tau) * curve.chart_dz(tau)
        if weight is not None:
            val = val * weight(z, w)
        return val

    return path.integrate(integrand)
