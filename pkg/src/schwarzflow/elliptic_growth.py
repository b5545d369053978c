"""
Pressure of elliptic growth: a free boundary driven through a screened field.

With ``p = 0`` on ``Gamma(t)`` and ``-k dp/dn = v_n`` the pressure is the
Cauchy solution of ``L p = 0`` with zero trace. For ``L = Delta + lambda**2``
it reads

    p(z0, w0) = -(1/4k) integral_{S~(w0)}^{z0} S_t(z) J0(lambda sqrt((z - z0)(S(z) - w0))) dz

and for a general operator ``J0`` is replaced by its Riemann function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .cauchy_rep import RiemannKernel
from .complexified import ChartPath
from .curves import MovingFamily, as_point
from .errors import OutOfDomain
from .heleshaw import ensure_real
from .numerics import DEFAULT_TOLERANCE, j0_product

GROWTH_REAL_TOL = 1e-9


@dataclass(frozen=True)
class HelmholtzKernel:
    """Screened operator ``Delta + lam**2``."""

    lam: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.lam):
            raise ValueError("lambda must be finite")


@dataclass(frozen=True)
class GrowthScenario:
    family: MovingFamily
    k: float = 1.0
    kernel: Union[HelmholtzKernel, RiemannKernel] = HelmholtzKernel()

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError(f"mobility k must be positive, got {self.k}")


def growth_pressure(scenario: GrowthScenario, t: float, p,
                    tolerance: float = DEFAULT_TOLERANCE) -> float:
    """Pressure at the real point ``p`` and time ``t``."""
    p = as_point(p)
    if not p.is_real():
        raise OutOfDomain("pressure is evaluated at real points only")
    family = scenario.family
    curve = family.curve(t)
    path = ChartPath.build(curve, p, tolerance)
    z0, w0 = p.z, p.w
    kernel = scenario.kernel
    if isinstance(kernel, HelmholtzKernel):
        l2 = kernel.lam ** 2

        def weight(z, w):
            return j0_product(l2, (z - z0) * (w - w0))
    else:
        kernel.check_normalization(z0, w0, path.z_low, path.w_up)

        def weight(z, w):
            return kernel.value(z0, w0, z, w)

    def integrand(tau):
        z, w = curve.chart_z(tau), curve.chart_w(tau)
        return family.schwarz_dot_dz_chart(tau, t) * weight(z, w)

    value = -path.integrate(integrand) / (4 * scenario.k)
    return ensure_real(value, "growth pressure", GROWTH_REAL_TOL)
