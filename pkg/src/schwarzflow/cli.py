"""
Command line interface.

    schwarzflow run --config scenario.json --out DIR
    schwarzflow density --config scenario.json --out DIR
    schwarzflow verify --suite all --out DIR

Scenario files are JSON. ``SCHWARZFLOW_THREADS`` sets the number of worker
threads used to sample grids (default 1).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import os
import platform
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from . import __version__
from .cauchy_rep import solve_cauchy_helmholtz, solve_cauchy_laplace
from .curves import (
    Circle,
    CircleFamily,
    ConfocalEllipseFamily,
    ConstantArea,
    ConstantEccentricity,
    Curve,
    Ellipse,
    EllipseFamily,
    GapConservation,
    Line,
    MovingFamily,
    PrescribedRates,
    _EllipseLike,
)
from .elliptic_growth import GrowthScenario, HelmholtzKernel, growth_pressure
from .errors import ConfigInvalid, RateLawUnderdetermined, ScenarioMismatch, SchwarzFlowError
from .heleshaw import (
    GapLaw,
    HeleShawParams,
    circle_surface_tension,
    flux_balance,
    gap_ratio,
    interfocal_density,
    pressure_gap,
    pressure_sink_source,
)
from .numerics import DEFAULT_TOLERANCE
from .reflection import AnalyticDatum
from .suites import SUITE_NAMES, plane_wave_solution, power_solution, run_suite
from .verify import Helmholtz, Laplace, Poisson, VerificationReport, boundary_check, kinematic_check, pde_residual

log = logging.getLogger("schwarzflow")

SCENARIOS = ("sink_source", "gap", "elliptic_growth", "cauchy_demo")
THREADS_ENV = "SCHWARZFLOW_THREADS"
MAX_ERROR_FRACTION = 0.10
DENSITY_POINTS = 512


# ---------------------------------------------------------------------------
# config parsing


def _get(obj: dict, key: str, path: str, kind=float, default=Ellipsis):
    name = f"{path}.{key}" if path else key
    if key not in obj:
        if default is Ellipsis:
            raise ConfigInvalid(name, "missing")
        return default
    value = obj[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigInvalid(name, f"expected a number, got {value!r}")
        value = float(value)
        if not math.isfinite(value):
            raise ConfigInvalid(name, "must be finite")
    elif kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigInvalid(name, f"expected an integer, got {value!r}")
    elif kind is str:
        if not isinstance(value, str):
            raise ConfigInvalid(name, f"expected a string, got {value!r}")
    elif kind is dict:
        if not isinstance(value, dict):
            raise ConfigInvalid(name, "expected an object")
    return value


@dataclass
class Grid:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    def points(self):
        """Grid points row by row, starting at ``(x_min, y_min)``."""
        xs = np.linspace(self.x_min, self.x_max, self.nx)
        ys = np.linspace(self.y_min, self.y_max, self.ny)
        return [(float(x), float(y)) for y in ys for x in xs]


@dataclass
class ScenarioConfig:
    scenario: str
    family: Optional[MovingFamily]
    curve: Curve
    k: float
    gamma: float
    lam: float
    gap: Optional[GapLaw]
    times: List[float]
    grid: Grid
    exclusion_radius: float
    tolerance: float
    outputs: Dict[str, str]
    verify: List[str]
    solution: Dict[str, Any]
    raw: Dict[str, Any] = field(default_factory=dict)

    @property
    def params(self) -> HeleShawParams:
        phi = None
        if self.gamma:
            if self.family is None or self.family.kind != "circle":
                raise ConfigInvalid("physics.gamma", "surface tension is supported for circle families")
            phi = circle_surface_tension(self.family, self.gamma)
        return HeleShawParams(self.k, phi, self.gap)


def _parse_rate(spec: dict, path: str):
    law = _get(spec, "law", path, str)
    if law == "prescribed":
        return PrescribedRates(_get(spec, "adot", path), _get(spec, "bdot", path, default=None))
    if law == "constant_eccentricity":
        return ConstantEccentricity(_get(spec, "adot", path))
    if law == "constant_area":
        return ConstantArea(_get(spec, "adot", path))
    if law == "gap_conservation":
        return GapConservation(_get(spec, "h0", path), _get(spec, "hdot", path))
    raise ConfigInvalid(f"{path}.law", f"unknown rate law {law!r}")


def _parse_family(spec: dict) -> MovingFamily:
    kind = _get(spec, "kind", "family", str)
    rate = _parse_rate(_get(spec, "rate", "family", dict, {"law": "prescribed", "adot": 0.0}), "family.rate")
    if kind == "ellipse" and isinstance(rate, PrescribedRates) and rate.bdot is None:
        raise ConfigInvalid("family.rate.bdot", "required for a prescribed ellipse family")
    try:
        if kind == "circle":
            family = CircleFamily(_get(spec, "a0", "family"), rate)
        elif kind == "ellipse":
            family = EllipseFamily(_get(spec, "a0", "family"), _get(spec, "b0", "family"), rate)
        elif kind == "confocal_ellipse":
            family = ConfocalEllipseFamily(_get(spec, "d0", "family"), _get(spec, "a0", "family"), rate)
        else:
            raise ConfigInvalid("family.kind", f"unknown family {kind!r}")
    except ConfigInvalid:
        raise
    except RateLawUnderdetermined as exc:
        raise ConfigInvalid("family.rate", str(exc)) from exc
    except (ValueError, SchwarzFlowError) as exc:
        raise ConfigInvalid("family", str(exc)) from exc
    try:
        family.rates(0.0)
    except SchwarzFlowError as exc:
        raise ConfigInvalid("family.rate", str(exc)) from exc
    return family


def _parse_curve(spec: dict) -> Curve:
    kind = _get(spec, "kind", "curve", str)
    try:
        if kind == "circle":
            return Circle(_get(spec, "a", "curve"))
        if kind == "ellipse":
            return Ellipse(_get(spec, "a", "curve"), _get(spec, "b", "curve"))
        if kind == "line":
            return Line.from_coefficients(_get(spec, "alpha", "curve", default=0.0),
                                          _get(spec, "beta", "curve", default=1.0),
                                          _get(spec, "delta", "curve", default=0.0))
    except ValueError as exc:
        raise ConfigInvalid("curve", str(exc)) from exc
    raise ConfigInvalid("curve.kind", f"unknown curve {kind!r}")


def _parse_grid(spec: dict) -> Grid:
    g = Grid(*(_get(spec, key, "grid") for key in ("x_min", "x_max", "y_min", "y_max")),
             _get(spec, "nx", "grid", int), _get(spec, "ny", "grid", int))
    if g.nx < 2:
        raise ConfigInvalid("grid.nx", f"must be at least 2, got {g.nx}")
    if g.ny < 2:
        raise ConfigInvalid("grid.ny", f"must be at least 2, got {g.ny}")
    if not g.x_min < g.x_max:
        raise ConfigInvalid("grid.x_max", "must exceed grid.x_min")
    if not g.y_min < g.y_max:
        raise ConfigInvalid("grid.y_max", "must exceed grid.y_min")
    return g


def parse_config(raw: dict) -> ScenarioConfig:
    """Validate a scenario dictionary; errors name the offending field."""
    if not isinstance(raw, dict):
        raise ConfigInvalid("<root>", "expected a JSON object")
    scenario = _get(raw, "scenario", "", str)
    if scenario not in SCENARIOS:
        raise ConfigInvalid("scenario", f"must be one of {', '.join(SCENARIOS)}")
    physics = _get(raw, "physics", "", dict, {})
    k = _get(physics, "k", "physics", default=1.0)
    if not k > 0:
        raise ConfigInvalid("physics.k", "must be positive")
    gamma = _get(physics, "gamma", "physics", default=0.0)
    lam = _get(physics, "lambda", "physics", default=0.0)
    gap = None
    if "hdot" in physics or "h0" in physics:
        h0 = _get(physics, "h0", "physics", default=1.0)
        if not h0 > 0:
            raise ConfigInvalid("physics.h0", "must be positive")
        gap = GapLaw(h0, _get(physics, "hdot", "physics"))

    family = None
    solution = {}
    if scenario == "cauchy_demo":
        curve = _parse_curve(_get(raw, "curve", "", dict))
        solution = _get(raw, "solution", "", dict, {"kind": "re_power", "n": 2})
        _get(solution, "kind", "solution", str)
    else:
        family = _parse_family(_get(raw, "family", "", dict))
    times_raw = raw.get("time", 0.0)
    times_list = times_raw if isinstance(times_raw, list) else [times_raw]
    if not times_list:
        raise ConfigInvalid("time", "empty time list")
    times = []
    for i, t in enumerate(times_list):
        if isinstance(t, bool) or not isinstance(t, (int, float)) or not math.isfinite(t):
            raise ConfigInvalid("time" if len(times_list) == 1 and not isinstance(times_raw, list)
                                else f"time[{i}]", f"expected a finite number, got {t!r}")
        times.append(float(t))
    if family is not None:
        for i, t in enumerate(times):
            try:
                family.curve(t)
            except SchwarzFlowError as exc:
                raise ConfigInvalid(f"time[{i}]" if isinstance(times_raw, list) else "time", str(exc))
        curve = family.curve(times[0])

    grid = _parse_grid(_get(raw, "grid", "", dict))
    exclusion = _get(raw, "exclusion_radius", "", default=0.05)
    if exclusion < 0:
        raise ConfigInvalid("exclusion_radius", "must be non-negative")
    tol = _get(raw, "tolerance", "", default=DEFAULT_TOLERANCE)
    if not tol > 0:
        raise ConfigInvalid("tolerance", "must be positive")
    outputs = _get(raw, "outputs", "", dict, {})
    for key in outputs:
        if key not in ("field_csv", "density_csv", "density_json", "report_json"):
            raise ConfigInvalid(f"outputs.{key}", "unknown output")
        _get(outputs, key, "outputs", str)
    outputs = {"field_csv": "field.csv", "report_json": "report.json",
               "density_csv": "density.csv", "density_json": "flux.json", **outputs}
    verify = raw.get("verify", [])
    if not isinstance(verify, list) or any(v not in ("boundary", "kinematic", "pde") for v in verify):
        raise ConfigInvalid("verify", "expected a list drawn from boundary, kinematic, pde")
    if scenario == "gap" and gap is None and family.gap_ratio(times[0]) is None:
        log.info("gap scenario without a gap law: hdot/h follows from volume conservation")
    return ScenarioConfig(scenario, family, curve, k, gamma, lam, gap, times, grid, exclusion, tol,
                          outputs, list(verify), solution, raw)


def load_config(path) -> ScenarioConfig:
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigInvalid("<file>", f"invalid JSON: {exc}") from exc
    return parse_config(raw)


# ---------------------------------------------------------------------------
# field evaluation


def _distance_to_support(cfg: ScenarioConfig, t: float) -> Callable[[complex], float]:
    curve = cfg.family.curve(t) if cfg.family is not None else cfg.curve
    if isinstance(curve, Ellipse):
        d = curve.d
        return lambda z: abs(z - min(max(z.real, -d), d))
    if isinstance(curve, Circle):
        return abs
    return lambda z: math.inf


def _field_function(cfg: ScenarioConfig, t: float) -> Callable[[float, float], float]:
    tol = cfg.tolerance
    if cfg.scenario == "sink_source":
        params = cfg.params
        return lambda x, y: pressure_sink_source(cfg.family, t, params, (x, y), tol)
    if cfg.scenario == "gap":
        params = cfg.params
        return lambda x, y: pressure_gap(cfg.family, t, params, (x, y), tol)
    if cfg.scenario == "elliptic_growth":
        sc = GrowthScenario(cfg.family, cfg.k, HelmholtzKernel(cfg.lam))
        return lambda x, y: growth_pressure(sc, t, (x, y), tol)
    data, exact = _demo_solution(cfg)
    if cfg.lam:
        return lambda x, y: solve_cauchy_helmholtz(cfg.curve, data, cfg.lam, (x, y), tolerance=tol).real
    return lambda x, y: solve_cauchy_laplace(cfg.curve, data, (x, y), tolerance=tol).real


def _demo_solution(cfg: ScenarioConfig):
    sol = cfg.solution
    kind = sol["kind"]
    if kind in ("re_power", "im_power"):
        n = _get(sol, "n", "solution", int, 2)
        c = 1.0 if kind == "re_power" else -1j
        return power_solution(cfg.curve, c, n), lambda x, y: (c * complex(x, y) ** n).real
    if kind == "cos_x":
        lam = cfg.lam
        return plane_wave_solution(cfg.curve, lam), lambda x, y: math.cos(lam * x)
    raise ConfigInvalid("solution.kind", f"unknown manufactured solution {kind!r}")


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ConfigInvalid(THREADS_ENV, f"expected an integer, got {raw!r}")
    return max(1, n)


def sample_field(cfg: ScenarioConfig, t: float):
    """Evaluate the scenario's field on the grid; returns rows and masking counts."""
    f = _field_function(cfg, t)
    dist = _distance_to_support(cfg, t)
    pts = cfg.grid.points()

    def evaluate(pt):
        x, y = pt
        if dist(complex(x, y)) <= cfg.exclusion_radius:
            return x, y, None, "excluded"
        try:
            return x, y, float(f(x, y)), None
        except (SchwarzFlowError, ArithmeticError) as exc:
            return x, y, None, f"{type(exc).__name__}: {exc}"

    n = thread_count()
    if n > 1:
        with ThreadPoolExecutor(n) as pool:
            rows = list(pool.map(evaluate, pts))
    else:
        rows = [evaluate(p) for p in pts]
    return rows


def write_field_csv(path: Path, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "y", "value", "masked"])
        for x, y, v, reason in rows:
            w.writerow([repr(x), repr(y), "" if v is None else repr(v), 0 if reason is None else 1])


def _suffixed(name: str, index: int, count: int) -> str:
    if count == 1:
        return name
    p = Path(name)
    return f"{p.stem}_{index}{p.suffix}"


def _run_verifications(cfg: ScenarioConfig, t: float, f) -> List[VerificationReport]:
    out = []
    if cfg.family is None:
        if "boundary" in cfg.verify:
            data, _ = _demo_solution(cfg)
            out.append(boundary_check(f, cfg.curve, data.phi, data.psi, 32, tolerance=1e-5))
        if "pde" in cfg.verify:
            op = Helmholtz(cfg.lam) if cfg.lam else Laplace()
            out.append(pde_residual(f, op, _probe_points(cfg, t), tolerance=1e-4, relative=True))
        return out
    params = cfg.params
    curve = cfg.family.curve(t)
    if "kinematic" in cfg.verify:
        if cfg.scenario == "elliptic_growth":
            sc = GrowthScenario(cfg.family, cfg.k, HelmholtzKernel(cfg.lam))
            f_k = lambda x, y: growth_pressure(sc, t, (x, y), cfg.tolerance)
            out.append(kinematic_check(cfg.family, f_k, t, HeleShawParams(cfg.k), 16, tolerance=1e-5))
        else:
            out.append(kinematic_check(cfg.family, f, t, params, 16, tolerance=1e-5))
    if "boundary" in cfg.verify:
        phi = params.surface_tension_phi if cfg.scenario == "sink_source" else None
        trace = phi if phi is not None else AnalyticDatum.zero()
        out.append(boundary_check(f, curve, trace, None, 32, tolerance=1e-8, t=t))
    if "pde" in cfg.verify:
        if cfg.scenario == "gap":
            op = Poisson(gap_ratio(cfg.family, t, params) / cfg.k)
        elif cfg.scenario == "elliptic_growth":
            op = Helmholtz(cfg.lam)
        else:
            op = Laplace()
        out.append(pde_residual(f, op, _probe_points(cfg, t), tolerance=1e-4, relative=True))
    return out


def _probe_points(cfg: ScenarioConfig, t: float):
    curve = cfg.family.curve(t) if cfg.family is not None else cfg.curve
    # odd samples keep the probes off the symmetry axes
    if isinstance(curve, Line):
        zs, normals = curve.boundary_samples(32, 2.0)
    else:
        zs, normals = curve.boundary_samples(32)
    return [complex(z + 0.5 * curve.scale * n) for z, n in zip(zs[1::2], normals[1::2])]


def run_scenario(cfg: ScenarioConfig, out_dir) -> int:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    started = time.time()
    report: Dict[str, Any] = {
        "metadata": {"version": __version__, "python": platform.python_version(),
                     "started": time.strftime("%Y-%m-%dT%H:%M:%S%z"), "threads": thread_count(), "timings": []},
        "scenario": cfg.raw,
        "tolerance": cfg.tolerance,
        "times": [],
    }
    status = 0
    for i, t in enumerate(cfg.times):
        t0 = time.time()
        rows = sample_field(cfg, t)
        name = _suffixed(cfg.outputs["field_csv"], i, len(cfg.times))
        write_field_csv(out / name, rows)
        excluded = sum(1 for r in rows if r[3] == "excluded")
        failed = [r for r in rows if r[3] not in (None, "excluded")]
        fraction = len(failed) / len(rows)
        entry = {"t": t, "field_csv": name, "points": len(rows), "excluded": excluded,
                 "errors": len(failed), "error_fraction": fraction,
                 "error_samples": [{"x": r[0], "y": r[1], "error": r[3]} for r in failed[:10]]}
        if fraction > MAX_ERROR_FRACTION:
            entry["status"] = "too many failed grid points"
            status = 1
        checks = _run_verifications(cfg, t, _field_function(cfg, t))
        entry["verification"] = [c.to_dict() for c in checks]
        if any(not c.passed for c in checks):
            status = 1
        report["times"].append(entry)
        # wall-clock data lives in the metadata block only
        report["metadata"]["timings"].append({"t": t, "seconds": round(time.time() - t0, 3)})
    report["metadata"]["seconds"] = round(time.time() - started, 3)
    report["exit_status"] = status
    (out / cfg.outputs["report_json"]).write_text(json.dumps(report, indent=2, default=str) + "\n")
    return status


def sample_density(cfg: ScenarioConfig, out_dir) -> int:
    """Write the inter-focal density on sine-spaced points and the flux balance line."""
    if not isinstance(cfg.family, _EllipseLike):
        raise ScenarioMismatch("density sampling needs an ellipse family")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    t = cfg.times[0]
    params = HeleShawParams(cfg.k)
    d = cfg.family.curve(t).d
    theta = -math.pi / 2 + (np.arange(DENSITY_POINTS) + 0.5) * math.pi / DENSITY_POINTS
    with open(out / cfg.outputs["density_csv"], "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "mu"])
        for th in theta:
            x = d * math.sin(th)
            w.writerow([repr(x), repr(interfocal_density(cfg.family, t, params, x))])
    flux, area_rate = flux_balance(cfg.family, t, params)
    line = {"t": t, "flux": flux, "area_rate": area_rate,
            "ratio": flux / area_rate if area_rate else None}
    text = json.dumps(line)
    (out / cfg.outputs["density_json"]).write_text(text + "\n")
    print(text)
    return 0


def verify_suite(name: str, out_dir) -> int:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    reports = run_suite(name)
    for r in reports:
        (out / f"{r.check_name}.json").write_text(r.to_json(indent=2) + "\n")
        print(f"{'PASS' if r.passed else 'FAIL'} {r.check_name} max_error={r.max_error:.3e} "
              f"tolerance={r.tolerance:.1e}")
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schwarzflow", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="sample a scenario's field on a grid")
    run.add_argument("--config", required=True)
    run.add_argument("--out", required=True)
    dens = sub.add_parser("density", help="sample the inter-focal source density of an ellipse scenario")
    dens.add_argument("--config", required=True)
    dens.add_argument("--out", required=True)
    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", default="all", choices=SUITE_NAMES)
    ver.add_argument("--out", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "verify":
            return verify_suite(args.suite, args.out)
        cfg = load_config(args.config)
        if args.command == "run":
            return run_scenario(cfg, args.out)
        return sample_density(cfg, args.out)
    except ConfigInvalid as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return 2
    except (SchwarzFlowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
