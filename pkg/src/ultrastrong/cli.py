"""
Command-line runner producing CSV tables and run manifests.

Usage::

    python -m ultrastrong <experiment> [--config FILE] [--key value ...]

Experiments: ground-amplitudes, ground-sweep, squeezing, closed-dynamics,
open-dynamics. The config file is flat ``key = value`` text with the same
keys as the flags; flags win over the file.

Exit status: 0 success, 2 invalid input, 3 unstable coupling, 4 cutoff
saturation.
"""
from __future__ import annotations

import argparse
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .dynamics import EvolutionConfig, evolve
from .exceptions import CutoffSaturationError, InstabilityError
from .hilbert import FockCutoff, expectation, number_ops, vacuum
from .measures import (
    QuadratureSpec,
    log_negativity,
    min_quadrature_variance,
    quadrature_variance_numeric,
)
from .model import ModelParams, normal_mode_analysis
from .spectrum import ground_state_numeric

EXPERIMENTS = ("ground-amplitudes", "ground-sweep", "squeezing", "closed-dynamics", "open-dynamics")
EXIT_OK, EXIT_INVALID, EXIT_UNSTABLE, EXIT_SATURATED = 0, 2, 3, 4

PURE_DRIFT_TOL = 1e-6
MASTER_DRIFT_TOL = 1e-4
THETA_POINTS = 64
# default steps keep the dt-halving drift of every recorded column below 1e-7
CLOSED_DT, OPEN_DT = 0.005, 0.01
# the cutoff check of open runs covers the transient, where its drift peaks
MASTER_CHECK_WINDOW = 200.0


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    experiment: str
    omega_a: float = 1.0
    omega_b: float = 1.0
    g: float = None
    g_grid: tuple = None
    gamma_a: float = None
    gamma_b: float = None
    cutoff_a: int = None
    cutoff_b: int = None
    t_max: float = None
    dt: float = None
    record_every: int = None
    engine: str = None
    out_path: str = None
    convergence_check: bool = True

    def resolve(self):
        """Fill experiment-dependent defaults and validate; returns ``self``."""
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"experiment: must be one of {EXPERIMENTS}, got {self.experiment!r}")
        open_run = self.experiment == "open-dynamics"
        if self.experiment == "ground-sweep":
            if not self.g_grid:
                raise ConfigError("g_grid: ground-sweep needs a non-empty comma-separated list")
        elif self.experiment == "squeezing":
            if self.g is None and not self.g_grid:
                raise ConfigError("g, g_grid: squeezing needs g (angle sweep) or g_grid (minimum vs g)")
        else:
            if self.g is None:
                self.g = 0.2
            if self.g_grid:
                raise ConfigError(f"g_grid: not used by {self.experiment}; set g")
        default_gamma = 0.01 if open_run else 0.0
        self.gamma_a = default_gamma if self.gamma_a is None else self.gamma_a
        self.gamma_b = self.gamma_a if self.gamma_b is None else self.gamma_b
        default_cut = 12 if open_run else 30
        self.cutoff_a = default_cut if self.cutoff_a is None else self.cutoff_a
        self.cutoff_b = self.cutoff_a if self.cutoff_b is None else self.cutoff_b
        self.cutoff = FockCutoff(self.cutoff_a, self.cutoff_b)
        if self.out_path is None:
            self.out_path = f"{self.experiment}.csv"
        for g in [self.g] if self.g is not None else []:
            self.params(g)
        for g in self.g_grid or ():
            self.params(g)

        if self.experiment.endswith("dynamics"):
            self.engine = self.engine or ("micro" if open_run else "closed")
            if open_run and self.engine not in ("micro", "phenom"):
                raise ConfigError(f"engine: open-dynamics needs 'micro' or 'phenom', got {self.engine!r}")
            if not open_run and self.engine != "closed":
                raise ConfigError(f"engine: closed-dynamics needs 'closed', got {self.engine!r}")
            if open_run and self.gamma_a <= 0 and self.gamma_b <= 0 and self.t_max is None:
                raise ConfigError("t_max: required when both decay rates are zero")
            p = self.params(self.g)
            fastest = max(p.omega_a, p.omega_b, normal_mode_analysis(p).omega_A)
            if self.dt is None:
                base = OPEN_DT if open_run else CLOSED_DT
                # faster modes get a proportionally smaller step
                self.dt = base * min(1.0, 1.25 / fastest)
            if self.t_max is None:
                self.t_max = 10.0 / max(self.gamma_a, self.gamma_b) if open_run else 50.0
            if self.record_every is None:
                self.record_every = 25
            self.evolution = EvolutionConfig(self.t_max, self.dt, self.record_every, self.engine)
            self.evolution.check_resolution(p)
        return self

    def params(self, g):
        return ModelParams(self.omega_a, self.omega_b, g, self.gamma_a, self.gamma_b)

    def items(self):
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            if f.name == "g_grid":
                value = ",".join(repr(float(v)) for v in value)
            out[f.name] = value
        return out


# ------------------------------------------------------------------ parsing

_FIELD_TYPES = {
    "omega_a": float,
    "omega_b": float,
    "g": float,
    "gamma_a": float,
    "gamma_b": float,
    "cutoff_a": int,
    "cutoff_b": int,
    "t_max": float,
    "dt": float,
    "record_every": int,
    "engine": str,
    "out_path": str,
}


def _parse_bool(text):
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"expected true/false, got {text!r}")


def _parse_grid(text):
    parts = [s for s in (t.strip() for t in str(text).split(",")) if s]
    return tuple(float(s) for s in parts)


def _convert(key, text):
    try:
        if key == "g_grid":
            return _parse_grid(text)
        if key == "convergence_check":
            return _parse_bool(text) if isinstance(text, str) else bool(text)
        conv = _FIELD_TYPES[key]
        if conv is int:
            value = float(text)
            if value != int(value):
                raise ValueError(f"expected an integer, got {text!r}")
            return int(value)
        return conv(text)
    except KeyError:
        raise ConfigError(f"{key}: unknown key") from None
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


def read_config(path):
    """Parse a flat ``key = value`` file; ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "experiment":
            values[key] = value
            continue
        values[key] = _convert(key, value)
    return values


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ultrastrong",
        description="Ground-state, squeezing and dynamics tables for two coupled oscillators.",
    )
    parser.add_argument("experiment", choices=EXPERIMENTS)
    parser.add_argument("--config", help="flat key = value file")
    for key in list(_FIELD_TYPES) + ["g_grid", "convergence_check"]:
        parser.add_argument(f"--{key}", f"--{key.replace('_', '-')}", dest=key, default=None)
    return parser


def config_from_args(argv):
    args = build_parser().parse_args(argv)
    values = read_config(args.config) if args.config else {}
    if values.get("experiment", args.experiment) != args.experiment:
        raise ConfigError(
            f"experiment: config file says {values['experiment']!r}, command says {args.experiment!r}"
        )
    values["experiment"] = args.experiment
    for key in list(_FIELD_TYPES) + ["g_grid", "convergence_check"]:
        flag = getattr(args, key)
        if flag is not None:
            values[key] = _convert(key, flag)
    return RunConfig(**values).resolve()


# -------------------------------------------------------------- experiments


def _ground_observables(p, cutoff):
    psi = ground_state_numeric(p, cutoff)
    na, nb = number_ops(cutoff)
    return psi, expectation(na, psi).real, expectation(nb, psi).real


def _amplitude_table(cfg, cutoff):
    psi = ground_state_numeric(cfg.params(cfg.g), cutoff)
    grid = np.abs(psi.grid)
    return [(m, n, grid[m, n]) for m in range(cutoff.n_a) for n in range(cutoff.n_b)]


def _sweep_table(cfg, cutoff):
    def point(g):
        psi, na, nb = _ground_observables(cfg.params(g), cutoff)
        return (g, 0.5 * (na + nb), log_negativity(psi))

    with ThreadPoolExecutor() as pool:
        return list(pool.map(point, cfg.g_grid))


def _squeezing_table(cfg, cutoff):
    if cfg.g_grid:

        def point(g):
            psi = ground_state_numeric(cfg.params(g), cutoff)
            return (g, min_quadrature_variance(psi, "a")[1])

        with ThreadPoolExecutor() as pool:
            return list(pool.map(point, cfg.g_grid))
    psi = ground_state_numeric(cfg.params(cfg.g), cutoff)
    thetas = np.linspace(0.0, 2 * math.pi, THETA_POINTS, endpoint=False)
    return [(t, quadrature_variance_numeric(psi, QuadratureSpec("a", t))) for t in thetas]


_STATIC = {
    "ground-amplitudes": (("m", "n", "abs_amp"), _amplitude_table),
    "ground-sweep": (("g", "n_avg", "logneg"), _sweep_table),
    "squeezing": (None, _squeezing_table),
}


def _table_drift(rows, rows_big, key_cols):
    """Largest change of value columns between two cutoffs, matching rows on key columns."""
    big = {tuple(r[:key_cols]): r[key_cols:] for r in rows_big}
    drift = 0.0
    for r in rows:
        other = big.get(tuple(r[:key_cols]))
        if other is not None:
            drift = max(drift, max(abs(x - y) for x, y in zip(r[key_cols:], other)))
    return drift


def _write_rows(path, header, rows):
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.12g}"


def run(cfg):
    """
    Execute a resolved :class:`RunConfig`; writes the CSV and the manifest.

    Returns the manifest as a dict.
    """
    start = time.perf_counter()
    verdict, drift, window = "skipped", float("nan"), None
    if cfg.experiment in _STATIC:
        header, table = _STATIC[cfg.experiment]
        if header is None:
            header = ("g", "variance_min") if cfg.g_grid else ("theta", "variance")
        rows = table(cfg, cfg.cutoff)
        _write_rows(cfg.out_path, header, rows)
        if cfg.convergence_check:
            rows_big = table(cfg, cfg.cutoff.grown(10))
            key_cols = 2 if cfg.experiment == "ground-amplitudes" else 1
            drift = _table_drift(rows, rows_big, key_cols)
            verdict = "pass" if drift < PURE_DRIFT_TOL else "fail"
        tol = PURE_DRIFT_TOL
    else:
        p = cfg.params(cfg.g)
        open_run = cfg.experiment == "open-dynamics"
        state0 = vacuum(cfg.cutoff)
        if open_run:
            state0 = state0.to_density()
        series = evolve(p, state0, cfg.evolution)
        series.to_csv(cfg.out_path)
        tol = MASTER_DRIFT_TOL if open_run else PURE_DRIFT_TOL
        if cfg.convergence_check:
            big_cut = cfg.cutoff.grown(4 if open_run else 10)
            state_big = vacuum(big_cut)
            check_cfg = cfg.evolution
            if open_run:
                state_big = state_big.to_density()
                window = min(cfg.t_max, MASTER_CHECK_WINDOW)
                check_cfg = EvolutionConfig(window, cfg.dt, cfg.record_every, cfg.engine)
            drift = _series_drift(series, evolve(p, state_big, check_cfg))
            verdict = "pass" if drift < tol else "fail"
            window = float(check_cfg.n_steps * check_cfg.dt)
    manifest = dict(cfg.items())
    if cfg.g is not None:
        manifest.update(_nm_fields("nm_", cfg.params(cfg.g)))
    for i, g in enumerate(cfg.g_grid or ()):
        manifest.update(_nm_fields(f"nm{i}_", cfg.params(g)))
    manifest["convergence_verdict"] = verdict
    manifest["convergence_drift"] = drift
    manifest["convergence_tolerance"] = tol
    if window is not None:
        manifest["convergence_window"] = window
    manifest["wall_clock_s"] = time.perf_counter() - start
    write_manifest(manifest_path(cfg.out_path), manifest)
    return manifest


def _series_drift(series, check):
    """Largest n_a, n_b or N difference at the times both series recorded."""
    idx = np.searchsorted(series.times, check.times)
    idx = np.clip(idx, 0, len(series.times) - 1)
    same = np.abs(series.times[idx] - check.times) < 1e-9
    idx = idx[same]
    return max(
        float(np.max(np.abs(getattr(series, k)[idx] - getattr(check, k)[same])))
        for k in ("n_a", "n_b", "logneg")
    )


def _nm_fields(prefix, p):
    return {f"{prefix}{k}": v for k, v in normal_mode_analysis(p).as_dict().items()}


def manifest_path(out_path):
    return str(out_path) + ".manifest"


def write_manifest(path, manifest):
    with open(path, "w", newline="\n") as fh:
        for key, value in manifest.items():
            text = _fmt(value) if isinstance(value, float) else str(value).lower() if isinstance(value, bool) else str(value)
            fh.write(f"{key} = {text}\n")


def load_manifest(path, check=True):
    """
    Load a manifest. With ``check`` the normal-mode fields are tested against
    the trace and determinant identities of the frequencies.
    """
    out = {}
    for line in Path(path).read_text().splitlines():
        if "=" in line:
            key, value = (s.strip() for s in line.split("=", 1))
            try:
                out[key] = float(value)
            except ValueError:
                out[key] = value
    if check:
        prefixes = sorted({k[: -len("omega_A")] for k in out if k.startswith("nm") and k.endswith("_omega_A")})
        for prefix in prefixes:
            _check_normal_modes(path, out, prefix)
    return out


def _check_normal_modes(path, out, prefix):
    wa, wb = out["omega_a"], out["omega_b"]
    wA, wB, xi = (out[prefix + k] for k in ("omega_A", "omega_B", "xi"))
    # values were written with 12 significant digits
    if abs(wA**2 + wB**2 - wa**2 - wb**2) > 1e-9 * (wa**2 + wb**2):
        raise ValueError(f"{path}: {prefix}omega_A^2 + omega_B^2 != omega_a^2 + omega_b^2")
    if abs(wA**2 * wB**2 - (wa**2 * wb**2 - xi**2)) > 1e-9 * wa**2 * wb**2:
        raise ValueError(f"{path}: {prefix}omega_A^2 omega_B^2 != omega_a^2 omega_b^2 - xi^2")
    if not wA >= wB > 0:
        raise ValueError(f"{path}: {prefix}omega_A >= omega_B > 0 violated")
    if out.get(prefix + "alpha_1", 0) < 0 or out.get(prefix + "alpha_2", 0) < 0:
        raise ValueError(f"{path}: {prefix}alpha: negative effective decay rate")


def main(argv=None):
    try:
        cfg = config_from_args(sys.argv[1:] if argv is None else argv)
        manifest = run(cfg)
    except InstabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except CutoffSaturationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SATURATED
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(
        f"wrote {cfg.out_path} ({cfg.experiment}); convergence {manifest['convergence_verdict']}",
        file=sys.stderr,
    )
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
