"""
Paths on the complexified curve ``Gamma_C = {(z, S(z))}``.

Every representation formula integrates from ``(S~(w0), w0)`` to
``(z0, S(z0))`` along ``Gamma_C``. The path is built in the curve's chart
parameter ``tau`` (see :mod:`schwarzflow.curves`), where both coordinates are
single-valued, so no branch cut of ``S`` can be crossed by accident.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .curves import ComplexPoint, Curve, as_point
from .errors import BranchJump, SingularPoint
from .numerics import (
    DEFAULT_TOLERANCE,
    PATH_CLEARANCE,
    BranchTracker,
    IntegrationPath,
    integrate_path,
    track_roots,
)

SIGN_TOL = 1e-8


def default_tracker(curve: Curve) -> BranchTracker:
    """Branch seed used by the library: ``sqrt(S')`` giving the outward normal.

    Line: ``sqrt(1) = -1`` on the x-axis. Circle: ``-i a / z``. Ellipse:
    ``-i`` at ``z = a``, continued through the confocal annulus.
    """
    z = curve.seed_point
    return BranchTracker(z, complex(curve.sqrt_schwarz_derivative(z)))


def branch_sign(curve: Curve, tracker: BranchTracker) -> int:
    """``+1`` if ``tracker`` is seeded on the library branch, ``-1`` if on the other."""
    canonical = complex(curve.chart_sqrt_dS(curve.chart(tracker.seed_point)))
    ratio = tracker.seed_value / canonical
    if abs(ratio - 1) < SIGN_TOL:
        return 1
    if abs(ratio + 1) < SIGN_TOL:
        return -1
    raise BranchJump(f"seed value {tracker.seed_value} is not a square root of S' "
                     f"at {tracker.seed_point}")


def _segment_distance(p, a, b):
    seg = b - a
    if seg == 0:
        return abs(p - a)
    u = min(1.0, max(0.0, ((p - a) * seg.conjugate()).real / abs(seg) ** 2))
    return abs(p - (a + u * seg))


@dataclass(frozen=True)
class ChartPath:
    """Oriented path on Gamma_C from ``(S~(w0), w0)`` to ``(z0, S(z0))``."""

    curve: Curve
    point: ComplexPoint
    tau_low: complex
    tau_up: complex
    path: IntegrationPath

    @classmethod
    def build(cls, curve: Curve, p, tolerance: float = DEFAULT_TOLERANCE) -> "ChartPath":
        p = as_point(p)
        tau_up = complex(curve.chart(p.z))
        tau_low = complex(curve.chart_lower(p.w))
        path = IntegrationPath.straight(tau_low, tau_up, avoid=curve.chart_singularities,
                                        detour=curve.chart_detour, tolerance=tolerance)
        return cls(curve, p, tau_low, tau_up, path)

    @property
    def z_low(self) -> complex:
        """``S~(w0)``."""
        return complex(self.curve.chart_z(self.tau_low))

    @property
    def w_up(self) -> complex:
        """``S(z0)``."""
        return complex(self.curve.chart_w(self.tau_up))

    def integrate(self, integrand: Callable[[np.ndarray], np.ndarray]) -> complex:
        """``integral integrand(tau) dtau`` along the path (chart Jacobians are the caller's)."""
        return integrate_path(integrand, self.path)

    def sqrt_dS(self, tracker: Optional[BranchTracker] = None) -> Callable[[np.ndarray], np.ndarray]:
        """``sqrt(S')`` along the path, continued from ``tracker``'s seed.

        The closed-form root of the curve is multiplied by the seed's sign and
        then verified by explicit continuation: from the seed along the route
        of :meth:`Curve.branch_route` to the start of the path and along the
        path itself. Any disagreement raises :class:`BranchJump`; a route that
        runs through a zero or pole of ``S'`` raises :class:`SingularPoint`.
        """
        curve = self.curve
        if tracker is None:
            tracker = default_tracker(curve)
        sign = branch_sign(curve, tracker)
        tau_seed = complex(curve.chart(tracker.seed_point))
        route = np.concatenate([curve.branch_route(tau_seed, self.tau_low),
                                self.path.checkpoints()])
        for b in curve.chart_branch_points:
            if any(_segment_distance(b, lo, hi) <= PATH_CLEARANCE * max(1.0, abs(b))
                   for lo, hi in zip(route[:-1], route[1:])):
                raise SingularPoint(
                    "continuing sqrt(S') to this point runs through a branch point; "
                    "the representation is two-valued across this ray")
        expected = sign * curve.chart_sqrt_dS(route)
        walker = BranchTracker(tracker.seed_point, tracker.seed_value)
        tracked = track_roots(walker, expected)
        if not np.allclose(tracked, expected, rtol=1e-8, atol=0.0):
            raise BranchJump("sqrt(S') changes sheet between the seed and the integration path")
        return lambda tau: sign * curve.chart_sqrt_dS(tau)
