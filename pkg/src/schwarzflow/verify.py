"""
Independent checks of computed fields: finite-difference PDE residuals,
boundary-condition recovery and the kinematic condition ``-k dp/dn = v_n``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .curves import Curve, MovingFamily
from .errors import StencilCrossesSingularity
from .heleshaw import HeleShawParams, normal_velocity
from .reflection import AnalyticDatum

Field = Callable[[float, float], float]


@dataclass
class VerificationReport:
    check_name: str
    samples: int
    max_error: float
    tolerance: float
    passed: bool
    details: list = field(default_factory=list)

    @classmethod
    def from_errors(cls, name, errors, tolerance, details=()):
        errors = [float(e) for e in errors]
        worst = max(errors) if errors else 0.0
        passed = bool(errors) and all(math.isfinite(e) for e in errors) and worst <= tolerance
        return cls(name, len(errors), worst, float(tolerance), passed, list(details))

    def to_dict(self):
        return asdict(self)

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


@dataclass(frozen=True)
class Laplace:
    """``Delta u = 0``."""

    def residual(self, lap, u, x, y):
        return lap


@dataclass(frozen=True)
class Helmholtz:
    """``Delta u + lam**2 u = 0``."""

    lam: float

    def residual(self, lap, u, x, y):
        return lap + self.lam ** 2 * u


@dataclass(frozen=True)
class Poisson:
    """``Delta u = rhs``; ``rhs`` is a number or a function of ``(x, y)``."""

    rhs: Union[float, Callable[[float, float], float]]

    def residual(self, lap, u, x, y):
        f = self.rhs(x, y) if callable(self.rhs) else self.rhs
        return lap - f


Operator = Union[Laplace, Helmholtz, Poisson]


def _as_xy(p):
    if isinstance(p, complex):
        return p.real, p.imag
    if np.isscalar(p):
        return float(p), 0.0
    return float(p[0]), float(p[1])


def pde_residual(field: Field, operator: Operator, points: Sequence, h: float = 1e-4,
                 tolerance: float = 1e-5, relative: bool = False,
                 distance_to_singular: Optional[Callable[[float, float], float]] = None,
                 name: str = "pde_residual") -> VerificationReport:
    """Five-point-stencil residual of ``operator`` applied to ``field``.

    With ``relative`` the error at each point is ``|residual| / (1 + |u|)``.
    ``distance_to_singular(x, y)`` guards the stencil: points closer than
    ``10 h`` to the singular set raise :class:`StencilCrossesSingularity`.
    """
    errors, details = [], []
    for p in points:
        x, y = _as_xy(p)
        if distance_to_singular is not None and distance_to_singular(x, y) <= 10 * h:
            raise StencilCrossesSingularity(f"stencil at ({x}, {y}) with h={h} reaches the singular set")
        u = field(x, y)
        lap = (field(x + h, y) + field(x - h, y) + field(x, y + h) + field(x, y - h) - 4 * u) / h ** 2
        res = abs(operator.residual(lap, u, x, y))
        err = res / (1 + abs(u)) if relative else res
        errors.append(err)
        details.append({"x": x, "y": y, "value": float(u), "residual": float(res)})
    return VerificationReport.from_errors(name, errors, tolerance, details)


def boundary_check(field: Field, curve: Curve, phi: Optional[AnalyticDatum],
                   psi: Optional[AnalyticDatum] = None, n_samples: int = 32,
                   step: Optional[float] = None, tolerance: float = 1e-6, t=None,
                   name: str = "boundary_check") -> VerificationReport:
    """Compare the trace of ``field`` with ``phi`` and its normal derivative with ``psi``.

    Samples are equally spaced in the curve parameter. The normal derivative
    is a central difference across the curve with step ``1e-5 * scale``.
    ``None`` data are skipped.
    """
    step = 1e-5 * curve.scale if step is None else step
    zs, normals = curve.boundary_samples(n_samples)
    errors, details = [], []
    for z, n in zip(zs, normals):
        z, n = complex(z), complex(n)
        row = {"x": z.real, "y": z.imag}
        err = 0.0
        if phi is not None:
            trace = field(z.real, z.imag)
            want = complex(phi(z, z.conjugate(), t)).real
            row["trace_error"] = abs(trace - want)
            err = max(err, row["trace_error"])
        if psi is not None:
            zp, zm = z + step * n, z - step * n
            dn = (field(zp.real, zp.imag) - field(zm.real, zm.imag)) / (2 * step)
            want = complex(psi(z, z.conjugate(), t)).real
            row["normal_error"] = abs(dn - want)
            err = max(err, row["normal_error"])
        errors.append(err)
        details.append(row)
    return VerificationReport.from_errors(name, errors, tolerance, details)


def kinematic_check(family: MovingFamily, pressure: Field, t: float, params: HeleShawParams,
                    n_samples: int = 16, step: Optional[float] = None, tolerance: float = 1e-5,
                    name: str = "kinematic_check") -> VerificationReport:
    """Compare ``-k dp/dn`` across ``Gamma(t)`` with the interface normal speed.

    Errors are relative to the largest ``|v_n|`` over the samples (``v_n``
    changes sign on a constant-area ellipse, so a pointwise relative error is
    meaningless there); for a static interface they are absolute.
    """
    curve = family.curve(t)
    step = 1e-5 * curve.scale if step is None else step
    zs, normals = curve.boundary_samples(n_samples)
    rows = []
    for z, n in zip(zs, normals):
        z, n = complex(z), complex(n)
        zp, zm = z + step * n, z - step * n
        dn = (pressure(zp.real, zp.imag) - pressure(zm.real, zm.imag)) / (2 * step)
        rows.append((z, -params.k * dn, normal_velocity(family, t, z)))
    scale = max(abs(v) for _, _, v in rows)
    scale = scale if scale > 0 else 1.0
    errors = [abs(got - want) / scale for _, got, want in rows]
    details = [{"x": z.real, "y": z.imag, "minus_k_dpdn": got, "v_n": want} for z, got, want in rows]
    return VerificationReport.from_errors(name, errors, tolerance, details)


def oracle_check(name: str, computed: Sequence[complex], expected: Sequence[complex],
                 tolerance: float, labels: Optional[Sequence] = None) -> VerificationReport:
    """Absolute differences between computed values and a closed-form oracle."""
    computed, expected = list(computed), list(expected)
    labels = list(labels) if labels is not None else list(range(len(computed)))
    errors = [abs(complex(c) - complex(e)) for c, e in zip(computed, expected)]
    details = [{"label": str(l), "computed": repr(complex(c)), "expected": repr(complex(e))}
               for l, c, e in zip(labels, computed, expected)]
    return VerificationReport.from_errors(name, errors, tolerance, details)
