"""
Solutions of Cauchy problems off an analytic curve.

Given ``u = phi`` and ``du/dn = psi`` on ``Gamma``, the solution at
``P = (z0, w0)`` is written as the value at the two Study-rectangle corners on
``Gamma_C`` plus a path integral along ``Gamma_C`` between them:

* Laplace: ``u = (phi(C) + phi(B))/2 + (i/2) integral psi sqrt(S') dz``;
* Helmholtz ``u_zw + lambda**2 u/4 = 0``: the same with the Bessel kernel
  ``J0(lambda sqrt((z - z0)(w - w0)))`` inside the integral and an extra
  ``phi * omega*(J0)`` term, ``omega*(f) = i(f_z dz - f_w dw)``;
* ``u_zw + A u_z + B u_w + C u = 0``: the same driven by a Riemann kernel.

Here ``B = (z0, S(z0))`` and ``C = (S~(w0), w0)``; integrals run from ``C``
to ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .complexified import ChartPath
from .curves import Curve
from .errors import KernelUnnormalized
from .numerics import (
    DEFAULT_TOLERANCE,
    BranchTracker,
    IntegrationPath,
    contour_derivative,
    integrate_path,
    j0_product,
    j0_product_partials,
    j0_series,
)
from .reflection import DIRICHLET, NEUMANN, AnalyticDatum, _pair_sum, _psi_integral

NORMALIZATION_TOL = 1e-8


@dataclass(frozen=True)
class CauchyData:
    """Trace ``phi`` and normal derivative ``psi`` of the sought solution on Gamma."""

    phi: AnalyticDatum = field(default_factory=lambda: AnalyticDatum.zero(DIRICHLET))
    psi: AnalyticDatum = field(default_factory=lambda: AnalyticDatum.zero(NEUMANN))


@dataclass(frozen=True)
class RiemannKernel:
    """Riemann function of ``u_zw + A u_z + B u_w + C u``.

    ``R_eval(z0, w0, z, w)`` must be vectorised in ``z, w``. ``A_coeff`` and
    ``B_coeff`` are ``(z, w) -> complex``; ``None`` means zero. Partial
    derivatives ``R_dz``, ``R_dw`` (same signature as ``R_eval``) are optional;
    without them a Cauchy-integral derivative is used.
    """

    R_eval: Callable
    A_coeff: Optional[Callable] = None
    B_coeff: Optional[Callable] = None
    lambda2: Optional[complex] = None
    R_dz: Optional[Callable] = None
    R_dw: Optional[Callable] = None

    @classmethod
    def helmholtz(cls, lam):
        """``J0(lam sqrt((z - z0)(w - w0)))`` for ``Delta u + lam**2 u = 0``."""
        l2 = float(lam) ** 2

        def R(z0, w0, z, w):
            return j0_product(l2, (np.asarray(z) - z0) * (np.asarray(w) - w0))

        def Rz(z0, w0, z, w):
            return j0_product_partials(l2, z, w, z0, w0)[0]

        def Rw(z0, w0, z, w):
            return j0_product_partials(l2, z, w, z0, w0)[1]

        return cls(R, lambda2=l2, R_dz=Rz, R_dw=Rw)

    @classmethod
    def constant_coefficients(cls, A, B, C):
        """Kernel of ``u_zw + A u_z + B u_w + C u`` with constant coefficients.

        ``R = exp(B (z - z0) + A (w - w0)) g((z - z0)(w - w0))`` where ``g`` is
        the Bessel series with ``lambda2 = 4 (C - A B)``.
        """
        A, B, C = complex(A), complex(B), complex(C)
        l2 = 4 * (C - A * B)

        def parts(z0, w0, z, w):
            dz = np.asarray(z, dtype=complex) - z0
            dw = np.asarray(w, dtype=complex) - w0
            e = np.exp(B * dz + A * dw)
            return dz, dw, e, j0_series(l2, dz * dw, 0), j0_series(l2, dz * dw, 1)

        def R(z0, w0, z, w):
            _, _, e, g, _ = parts(z0, w0, z, w)
            return e * g

        def Rz(z0, w0, z, w):
            _, dw, e, g, g1 = parts(z0, w0, z, w)
            return e * (B * g + dw * g1)

        def Rw(z0, w0, z, w):
            dz, _, e, g, g1 = parts(z0, w0, z, w)
            return e * (A * g + dz * g1)

        return cls(R, A_coeff=lambda z, w: A + 0 * z, B_coeff=lambda z, w: B + 0 * z,
                   lambda2=l2, R_dz=Rz, R_dw=Rw)

    def value(self, z0, w0, z, w):
        return self.R_eval(z0, w0, z, w)

    def partials(self, z0, w0, z, w):
        if self.R_dz is not None and self.R_dw is not None:
            return self.R_dz(z0, w0, z, w), self.R_dw(z0, w0, z, w)
        z = np.asarray(z, dtype=complex)
        w = np.asarray(w, dtype=complex)
        rz = contour_derivative(lambda s: self.R_eval(z0, w0, s, w), z)
        rw = contour_derivative(lambda s: self.R_eval(z0, w0, z, s), w)
        return rz, rw

    def check_normalization(self, z0, w0, z_low, w_up, tol=NORMALIZATION_TOL):
        """Compare ``R`` on the characteristics through ``(z0, w0)`` with its exponential law."""
        def expected(coeff, start, end, fixed, along_w):
            if coeff is None or start == end:
                return 1.0 + 0j
            if along_w:
                f = lambda s: coeff(np.full_like(s, fixed), s)
            else:
                f = lambda s: coeff(s, np.full_like(s, fixed))
            return complex(np.exp(integrate_path(f, IntegrationPath(start, end))))

        checks = (
            (complex(self.R_eval(z0, w0, z0, w_up)), expected(self.A_coeff, w0, w_up, z0, True)),
            (complex(self.R_eval(z0, w0, z_low, w0)), expected(self.B_coeff, z0, z_low, w0, False)),
        )
        for got, want in checks:
            if abs(got - want) > tol * max(1.0, abs(want)):
                raise KernelUnnormalized(f"kernel value {got} differs from {want} on a characteristic")


def solve_cauchy_laplace(curve: Curve, data: CauchyData, p, branch: Optional[BranchTracker] = None,
                         tolerance: float = DEFAULT_TOLERANCE) -> complex:
    """Harmonic ``u`` with ``u = phi``, ``du/dn = psi`` on ``curve``, evaluated at ``p``."""
    path = ChartPath.build(curve, p, tolerance)
    pair = _pair_sum(path, data.phi)
    return 0.5 * pair + 0.5j * _psi_integral(path, data.psi, branch)


def solve_cauchy_helmholtz(curve: Curve, data: CauchyData, lam, p,
                           branch: Optional[BranchTracker] = None,
                           tolerance: float = DEFAULT_TOLERANCE) -> complex:
    """Solution of ``Delta u + lam**2 u = 0`` with Cauchy data on ``curve``, at ``p``."""
    path = ChartPath.build(curve, p, tolerance)
    z0, w0 = path.point
    l2 = float(lam) ** 2
    root = path.sqrt_dS(branch)

    def integrand(tau):
        z, w = curve.chart_z(tau), curve.chart_w(tau)
        dz, dw = curve.chart_dz(tau), curve.chart_dw(tau)
        J = j0_product(l2, (z - z0) * (w - w0))
        Jz, Jw = j0_product_partials(l2, z, w, z0, w0)
        omega = 1j * (Jz * dz - Jw * dw)
        return data.phi(z, w) * omega + J * data.psi(z, w) * root(tau) * dz

    return 0.5 * _pair_sum(path, data.phi) + 0.5j * path.integrate(integrand)


def solve_cauchy_general(curve: Curve, data: CauchyData, kernel: RiemannKernel, p,
                         branch: Optional[BranchTracker] = None,
                         tolerance: float = DEFAULT_TOLERANCE) -> complex:
    """Solution of ``u_zw + A u_z + B u_w + C u = 0`` from its Riemann kernel.

    ``u = (R phi)(B)/2 + (R phi)(C)/2
    + (i/2) integral [R psi sqrt(S') dz + phi omega*(R)]
    + integral R phi (B_coeff dz - A_coeff dw)``.
    """
    path = ChartPath.build(curve, p, tolerance)
    z0, w0 = path.point
    z_low, w_up = path.z_low, path.w_up
    kernel.check_normalization(z0, w0, z_low, w_up)
    root = path.sqrt_dS(branch)

    def integrand(tau):
        z, w = curve.chart_z(tau), curve.chart_w(tau)
        dz, dw = curve.chart_dz(tau), curve.chart_dw(tau)
        R = kernel.value(z0, w0, z, w)
        Rz, Rw = kernel.partials(z0, w0, z, w)
        phi = data.phi(z, w)
        val = 0.5j * (R * data.psi(z, w) * root(tau) * dz + phi * 1j * (Rz * dz - Rw * dw))
        drift = 0.0
        if kernel.B_coeff is not None:
            drift = drift + kernel.B_coeff(z, w) * dz
        if kernel.A_coeff is not None:
            drift = drift - kernel.A_coeff(z, w) * dw
        return val + R * phi * drift

    corners = (complex(kernel.value(z0, w0, z0, w_up)) * complex(data.phi(z0, w_up))
               + complex(kernel.value(z0, w0, z_low, w0)) * complex(data.phi(z_low, w0)))
    return 0.5 * corners + path.integrate(integrand)


def cauchy_data_from_solution(curve: Curve, u, u_z, u_w) -> CauchyData:
    """Cauchy data of a known solution ``u(z, w)`` with partials ``u_z``, ``u_w``.

    ``psi = -i (u_z - u_w S') / sqrt(S')`` is written as a function of
    ``(z, w)`` through the curve chart, so it stays analytic on all of Gamma_C
    and uses the library's branch of ``sqrt(S')``.
    """
    def psi(z, w):
        tau = curve.chart_of_pair(z, w)
        dS = curve.chart_dw(tau) / curve.chart_dz(tau)
        return -1j * (u_z(z, w) - u_w(z, w) * dS) / curve.chart_sqrt_dS(tau)

    return CauchyData(AnalyticDatum(u, DIRICHLET), AnalyticDatum(psi, NEUMANN))
