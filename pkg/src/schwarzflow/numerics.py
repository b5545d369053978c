"""
Numerical kernels shared by every representation formula.

* :func:`integrate_path` -- adaptive Gauss-Kronrod (7/15) quadrature of a
  complex integrand along a polyline in the complex plane.
* :class:`BranchTracker` / :func:`sqrt_branch` -- square roots continued
  along a sequence of arguments.
* :func:`j0_product` and friends -- the entire series of
  ``J0(sqrt(lambda2 * prod))`` written in the product variable, so no square
  root is ever taken.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    BranchJump,
    SchwarzFlowError,
    SeriesDiverged,
    SingularPanel,
    ToleranceNotMet,
)

DEFAULT_TOLERANCE = 1e-11
PATH_CLEARANCE = 1e-9

# Kronrod 15-point rule on [-1, 1]; Gauss 7-point nodes are every other node.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[[13, 11, 9]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class IntegrationPath:
    """Polyline ``start -> waypoints... -> end`` with an absolute error target."""

    start: complex
    end: complex
    waypoints: tuple = ()
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def endpoints(self):
        return (self.start, self.end)

    @property
    def vertices(self):
        return (complex(self.start), *map(complex, self.waypoints), complex(self.end))

    def segments(self):
        v = self.vertices
        return list(zip(v[:-1], v[1:]))

    @property
    def length(self):
        return sum(abs(b - a) for a, b in self.segments())

    def checkpoints(self, per_segment=64):
        """Points along the path in travel order (start and end included)."""
        pts = [complex(self.start)]
        s = np.linspace(0.0, 1.0, per_segment + 1)[1:]
        for a, b in self.segments():
            pts.extend(a + s * (b - a))
        return np.array(pts)

    @classmethod
    def straight(cls, start, end, avoid=(), clearance=PATH_CLEARANCE, detour=None,
                 tolerance=DEFAULT_TOLERANCE):
        """Segment ``start -> end``, bent around points in ``avoid``.

        A singular point closer than ``detour`` to the segment gets a waypoint
        at distance ``detour`` on the side the segment already passes, so the
        detoured path stays homotopic to the original one. A segment passing
        exactly through a point is bent to its left.
        """
        start, end = complex(start), complex(end)
        waypoints = []
        for s in avoid:
            s = complex(s)
            if abs(start - s) <= clearance or abs(end - s) <= clearance:
                raise SingularPanel(f"path endpoint within {clearance:g} of singular point {s}")
            if detour is None:
                continue
            seg = end - start
            if seg == 0:
                continue
            u = ((s - start) * seg.conjugate()).real / abs(seg) ** 2
            if not 0.0 < u < 1.0:
                continue
            foot = start + u * seg
            dist = abs(foot - s)
            if dist >= detour:
                continue
            direction = (foot - s) / dist if dist > clearance else 1j * seg / abs(seg)
            waypoints.append((u, s + detour * direction))
        waypoints.sort(key=lambda item: item[0])
        return cls(start, end, tuple(w for _, w in waypoints), tolerance)


def _panel(f, a, b):
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = mid + half * NODES
    try:
        fx = np.asarray(f(x), dtype=complex)
    except SeriesDiverged:
        raise
    except (SchwarzFlowError, ArithmeticError) as exc:
        raise SingularPanel(f"integrand failed on panel [{a}, {b}]: {exc}") from exc
    if fx.shape != x.shape:
        fx = np.broadcast_to(fx, x.shape)
    if not np.all(np.isfinite(fx)):
        raise SingularPanel(f"non-finite integrand on panel [{a}, {b}]")
    kron = half * np.dot(KRONROD_WEIGHTS, fx)
    gauss = half * np.dot(GAUSS_WEIGHTS, fx)
    absval = abs(half) * np.dot(KRONROD_WEIGHTS, np.abs(fx))
    return kron, abs(kron - gauss), absval


def integrate_path(f: Callable[[np.ndarray], np.ndarray], path: IntegrationPath,
                   max_panels: int = 4000) -> complex:
    """Integrate ``f`` along ``path``.

    ``f`` receives a 1-D complex array of nodes and must return values of the
    same shape. Panels are bisected globally, worst error first, until the
    summed Kronrod-Gauss error estimate drops below ``path.tolerance`` (or the
    rounding floor of the sum, whichever is larger).
    """
    heap = []
    counter = 0
    total_err = 0.0
    total_abs = 0.0
    for a, b in path.segments():
        if a == b:
            continue
        val, err, absval = _panel(f, a, b)
        heap.append((-err, counter, a, b, val, err, absval))
        counter += 1
        total_err += err
        total_abs += absval
    heapq.heapify(heap)

    def target():
        return max(path.tolerance, 50.0 * _EPS * total_abs)

    while heap and total_err > target():
        if len(heap) >= max_panels:
            estimate = _sum_panels(heap)
            raise ToleranceNotMet("panel budget exhausted", estimate, total_err)
        _, _, a, b, val, err, absval = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if abs(b - a) < 1e-14 * max(1.0, abs(a)):
            estimate = _sum_panels(heap) + val
            raise ToleranceNotMet("panel width underflow", estimate, total_err)
        total_err -= err
        total_abs -= absval
        for lo, hi in ((a, m), (m, b)):
            v, e, av = _panel(f, lo, hi)
            heapq.heappush(heap, (-e, counter, lo, hi, v, e, av))
            counter += 1
            total_err += e
            total_abs += av
        total_err = max(total_err, 0.0)
    return _sum_panels(heap)


def _sum_panels(heap):
    # fixed order (creation counter) keeps the result bit-reproducible
    vals = [item[4] for item in sorted(heap, key=lambda item: item[1])]
    return complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))


class BranchTracker:
    """State of a square root continued from ``seed_value`` at ``seed_point``.

    Not thread-safe; use :meth:`clone` to continue along several paths.
    """

    def __init__(self, seed_point: complex, seed_value: complex):
        if seed_value == 0:
            raise BranchJump("cannot seed a square-root branch with 0")
        self.seed_point = complex(seed_point)
        self.seed_value = complex(seed_value)
        self.value = self.seed_value

    def clone(self) -> "BranchTracker":
        other = BranchTracker(self.seed_point, self.seed_value)
        other.value = self.value
        return other

    def flipped(self) -> "BranchTracker":
        """A fresh tracker seeded with the opposite root."""
        return BranchTracker(self.seed_point, -self.seed_value)

    def reset(self):
        self.value = self.seed_value

    def __repr__(self):
        return f"BranchTracker(seed_point={self.seed_point!r}, seed_value={self.seed_value!r})"


def sqrt_branch(tracker: BranchTracker, value: complex) -> complex:
    """Square root of ``value`` continuous with the tracker's last root.

    The root closer to the previous one is chosen. If it still turns by a
    quarter turn or more the step was too large to decide continuity and
    :class:`BranchJump` is raised.
    """
    value = complex(value)
    if value == 0:
        raise BranchJump("square root continued through zero")
    root = complex(np.sqrt(value))
    prev = tracker.value
    if (root * prev.conjugate()).real < 0:
        root = -root
    if (root * prev.conjugate()).real <= 1e-12 * abs(root) * abs(prev):
        raise BranchJump(f"step to {value} too large to continue sqrt from {prev}")
    tracker.value = root
    return root


def track_sqrt(tracker: BranchTracker, values: Sequence[complex]) -> np.ndarray:
    """Continue ``tracker`` through ``values`` in order; returns the roots."""
    return np.array([sqrt_branch(tracker, v) for v in values], dtype=complex)


def track_roots(tracker: BranchTracker, roots: Sequence[complex]) -> np.ndarray:
    """Like :func:`track_sqrt` for candidate roots already known up to sign."""
    return track_sqrt(tracker, np.asarray(roots, dtype=complex) ** 2)


_SERIES_CAP = 200
_SERIES_RTOL = 1e-17
_CANCELLATION_LIMIT = 1e15


def j0_series(lambda2: float, prod, derivative: int = 0):
    """``d^n/dprod^n`` of ``g(prod) = sum_k (-lambda2*prod/4)^k / (k!)^2``.

    ``g(prod) = J0(sqrt(lambda2*prod))``; the n-th derivative is
    ``sum_{k>=n} c^k prod^(k-n) / ((k-n)! k!)`` with ``c = -lambda2/4``.
    """
    p = np.asarray(prod, dtype=complex)
    c = -0.25 * complex(lambda2)
    n = int(derivative)
    if c == 0.0:
        out = np.full(p.shape, 1.0 + 0j) if n == 0 else np.zeros(p.shape, dtype=complex)
        return out if out.ndim else complex(out)
    # leading term k = n: c^n / (0! n!)
    term = np.full(p.shape, c ** n / math.factorial(n), dtype=complex)
    total = term.copy()
    biggest = np.abs(term)
    x = c * p
    prev_mag = np.abs(term)
    converged = False
    # huge products overflow before the cap; that case ends in SeriesDiverged
    with np.errstate(over="ignore", invalid="ignore"):
        for j in range(1, _SERIES_CAP):
            # term_j = term_{j-1} * c*p / (j * (j+n))
            term = term * x / (j * (j + n))
            total = total + term
            mag = np.abs(term)
            biggest = np.maximum(biggest, mag)
            if np.all(mag < _SERIES_RTOL * (1.0 + np.abs(total))) and np.all(mag <= prev_mag):
                converged = True
                break
            prev_mag = mag
    if not converged:
        raise SeriesDiverged(f"J0 series not converged after {_SERIES_CAP} terms "
                             f"(max |lambda2*prod/4| = {np.max(np.abs(x)):.3g})")
    if np.any(biggest > _CANCELLATION_LIMIT * (1.0 + np.abs(total))):
        raise SeriesDiverged("J0 series lost all significant digits to cancellation")
    return total if total.ndim else complex(total)


def j0_product(lambda2: float, prod):
    """``J0(lambda * sqrt(prod))`` with ``lambda2 = lambda**2``, via its entire series."""
    return j0_series(lambda2, prod, 0)


def j0_product_partials(lambda2: float, z, w, z0, w0):
    """``(d/dz, d/dw)`` of ``J0(lambda*sqrt((z-z0)(w-w0)))``."""
    dz = np.asarray(z, dtype=complex) - z0
    dw = np.asarray(w, dtype=complex) - w0
    g1 = np.asarray(j0_series(lambda2, dz * dw, 1))
    out = (dw * g1, dz * g1)
    if out[0].ndim == 0:
        return complex(out[0]), complex(out[1])
    return out


def contour_derivative(f: Callable, z, radius: float = 1e-2, n: int = 16):
    """First derivative of an analytic ``f`` by the trapezoidal Cauchy integral.

    Error is O(radius**n) for entire functions, far below central differences.
    """
    z = np.asarray(z, dtype=complex)
    roots = np.exp(2j * np.pi * np.arange(n) / n)
    acc = np.zeros(z.shape, dtype=complex)
    for r in roots:
        acc = acc + np.asarray(f(z + radius * r), dtype=complex) / r
    out = acc / (n * radius)
    return out if out.ndim else complex(out)
