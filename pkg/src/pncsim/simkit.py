"""Monte Carlo sweep runner, statistics, and result emission.

Trials are partitioned into fixed-size batches; batch b of SNR point s draws
its generator from SeedSequence(master_seed, spawn_key=(s, b)). The set of
batches executed depends only on accumulated counts, so results (and emitted
files) are byte-identical for any worker count.
"""

from __future__ import annotations

import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np
from scipy import stats

from . import analytics, backend, schemes
from .block_code import SUPPORTED_CODES, make_bch
from .phy import ChannelParams, pnc_threshold
from .schemes import SchemeKind, TrialOutcome
from .sources import CorrelationModel

TRIALS_PER_BATCH = 16384

CSV_HEADER = (
    "snr_db,scheme,n,k,trials,bler_sim,bler_ci_low,bler_ci_high,"
    "bler_exact,bler_asym,throughput,throughput_ci_low,throughput_ci_high"
)


@dataclass
class SweepConfig:
    """One sweep: a scheme/code pair across an SNR grid."""

    scheme: SchemeKind = SchemeKind.SCPNC
    code: tuple[int, int] = (15, 5)
    snr_db_grid: tuple[float, ...] = tuple(float(x) for x in range(0, 15, 2))
    min_trials: int = 10_000
    max_trials: int = 1_000_000
    target_relative_ci: float = 0.05
    master_seed: int = 2024
    output_path: str | None = None
    output_format: str = "csv"
    workers: int = 1

    def __post_init__(self):
        if isinstance(self.scheme, str):
            self.scheme = SchemeKind(self.scheme.lower())
        self.code = (int(self.code[0]), int(self.code[1]))
        self.snr_db_grid = tuple(float(x) for x in self.snr_db_grid)
        self.validate()

    def validate(self):
        if self.code not in SUPPORTED_CODES:
            raise ValueError(f"unsupported code {self.code}; supported: {SUPPORTED_CODES}")
        if not self.snr_db_grid:
            raise ValueError("snr_db_grid must be non-empty")
        if any(b <= a for a, b in zip(self.snr_db_grid, self.snr_db_grid[1:])):
            raise ValueError("snr_db_grid must be strictly increasing")
        if not 0 < self.min_trials <= self.max_trials:
            raise ValueError("need 0 < min_trials <= max_trials")
        if not 0.0 < self.target_relative_ci < 1.0:
            raise ValueError("target_relative_ci must be in (0, 1)")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass
class SweepPoint:
    """Simulated and analytic results at one SNR point."""

    snr_db: float
    scheme: str
    n: int
    k: int
    trials: int
    bler_sim: float
    bler_ci_low: float
    bler_ci_high: float
    bler_exact: float
    bler_asym: float
    throughput: float
    throughput_ci_low: float
    throughput_ci_high: float


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    if not 0 <= successes <= trials:
        raise ValueError("need 0 <= successes <= trials")
    z = float(stats.norm.ppf(0.5 + confidence / 2.0))
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    low = 0.0 if successes == 0 else max(0.0, center - half)
    high = 1.0 if successes == trials else min(1.0, center + half)
    return low, high


def measure_throughput(outcomes: list[TrialOutcome], n: int) -> float:
    """Correctly decoded blocks per time slot of n symbol intervals."""
    if not outcomes:
        raise ValueError("cannot measure throughput of zero trials")
    successes = sum(int(o.ok_1to2) + int(o.ok_2to1) for o in outcomes)
    slots = sum((o.uplink_symbols + o.downlink_symbols) / n for o in outcomes)
    return successes / slots


def _run_batch(config, code, model, snr_index, batch_index, count, kernels):
    seq = np.random.SeedSequence(config.master_seed, spawn_key=(snr_index, batch_index))
    rng = np.random.Generator(np.random.PCG64(seq))
    params = ChannelParams.from_db(config.snr_db_grid[snr_index])
    ok12, ok21 = schemes.simulate_batch(
        config.scheme, code, params, model, rng, count, kernels=kernels
    )
    return int(ok12.sum()), int(ok21.sum())


def _ci_met(errors: int, trials: int, target: float) -> bool:
    if errors == 0:
        return False
    low, high = wilson_interval(errors, trials)
    half_width = (high - low) / 2.0
    return half_width <= target * (errors / trials)


def _batch_sizes(start_trial: int, stop_trial: int) -> list[tuple[int, int]]:
    """(batch_index, count) covering trials [start, stop)."""
    out = []
    first = start_trial // TRIALS_PER_BATCH
    last = (stop_trial + TRIALS_PER_BATCH - 1) // TRIALS_PER_BATCH
    for b in range(first, last):
        lo = b * TRIALS_PER_BATCH
        hi = min(lo + TRIALS_PER_BATCH, stop_trial)
        out.append((b, hi - lo))
    return out


def _run_point(config, code, model, snr_index, pool, kernels, progress):
    """Adaptive Monte Carlo at one SNR point: run until the relative CI
    target is met (and min_trials reached) or max_trials is exhausted."""
    done = 0
    ok12_total = 0
    ok21_total = 0
    while True:
        if done >= config.min_trials:
            errors = done - ok12_total
            if _ci_met(errors, done, config.target_relative_ci) or done >= config.max_trials:
                break
        target = max(config.min_trials, 2 * done)
        target = min(target, config.max_trials)
        jobs = _batch_sizes(done, target)
        results = pool.map(
            lambda job: _run_batch(config, code, model, snr_index, job[0], job[1], kernels),
            jobs,
        )
        for n12, n21 in results:
            ok12_total += n12
            ok21_total += n21
        done = target

    snr_db = config.snr_db_grid[snr_index]
    gamma = 10.0 ** (snr_db / 10.0)
    n, k = code.n, code.k
    errors = done - ok12_total
    ci_low, ci_high = wilson_interval(errors, done)
    up, down = schemes.symbol_budget(config.scheme, n, code.m)
    slots_per_trial = (up + down) / n
    thr_scale = 2.0 * n / (up + down)
    thr_low, thr_high = wilson_interval(ok12_total + ok21_total, 2 * done)
    point = SweepPoint(
        snr_db=snr_db,
        scheme=config.scheme.value,
        n=n,
        k=k,
        trials=done,
        bler_sim=errors / done,
        bler_ci_low=ci_low,
        bler_ci_high=ci_high,
        bler_exact=float(analytics.bler_exact(config.scheme, gamma, n, k)),
        bler_asym=float(analytics.bler_asym(config.scheme, gamma, n, k)),
        throughput=(ok12_total + ok21_total) / (done * slots_per_trial),
        throughput_ci_low=thr_low * thr_scale,
        throughput_ci_high=thr_high * thr_scale,
    )
    if progress is not None:
        progress(
            f"{config.scheme.value} ({n},{k}) {snr_db:g} dB: "
            f"{done} trials, bler={point.bler_sim:.3e}, throughput={point.throughput:.4f}"
        )
    return point


def run_sweep(config: SweepConfig, progress=None) -> list[SweepPoint]:
    """Run the configured sweep; deterministic for fixed config and seed."""
    config.validate()
    n, k = config.code
    code = make_bch(n, k)
    model = CorrelationModel(code.n, code.t)
    kernels = backend.get_kernels()
    points = []
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        for snr_index in range(len(config.snr_db_grid)):
            points.append(_run_point(config, code, model, snr_index, pool, kernels, progress))
    return points


def pnc_symbol_error_rate(params: ChannelParams, symbols: int, master_seed: int) -> float:
    """Monte Carlo per-symbol error rate of the relay's PNC mapping."""
    if symbols <= 0:
        raise ValueError("symbols must be positive")
    kernels = backend.get_kernels()
    sqrt_e = math.sqrt(params.energy)
    thresh = pnc_threshold(params)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(master_seed)))
    errors = 0
    remaining = symbols
    chunk = 1 << 20
    while remaining > 0:
        count = min(chunk, remaining)
        b1 = rng.integers(0, 2, size=count, dtype=np.uint8)
        b2 = rng.integers(0, 2, size=count, dtype=np.uint8)
        g = rng.standard_normal(count)
        errors += kernels.pnc_map_errors(b1, b2, sqrt_e, params.sigma, thresh, g)
        remaining -= count
    return errors / symbols


def _format_value(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def render_csv(points: list[SweepPoint]) -> str:
    """CSV text for a list of sweep points (header always present)."""
    lines = [CSV_HEADER]
    for p in points:
        d = asdict(p)
        lines.append(",".join(_format_value(d[name]) for name in CSV_HEADER.split(",")))
    return "\n".join(lines) + "\n"


def render_json(points: list[SweepPoint]) -> str:
    """JSON array text for a list of sweep points."""
    return json.dumps([asdict(p) for p in points], indent=2) + "\n"


def emit(points: list[SweepPoint], output_format: str = "csv", path: str | None = None):
    """Write sweep points as CSV or JSON to `path` (None or "-" = stdout)."""
    if output_format == "csv":
        text = render_csv(points)
    elif output_format == "json":
        text = render_json(points)
    else:
        raise ValueError(f"unknown output format {output_format!r}")
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write results to {path}: {exc}") from exc
