"""Command-line front end.

Subcommands:
    sweep     run a Monte Carlo sweep and emit per-SNR results
    analytic  emit closed-form and asymptotic BLER curves only
    selftest  run the built-in invariant checks
    bench     time the compiled kernels against the numpy fallback

Progress goes to stderr; standard output carries only emitted data. Exit
status is 0 on success, 2 on configuration errors, 1 on runtime/IO errors.
"""

from __future__ import annotations

import argparse
import sys

from . import analytics, simkit
from .schemes import SchemeKind
from .simkit import SweepConfig

ANALYTIC_CSV_HEADER = "snr_db,scheme,n,k,bler_exact,bler_asym"


def parse_snr_grid(text: str) -> tuple[float, ...]:
    """Parse 'a:b:step' (inclusive) or a comma-separated list of dB values."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"SNR range must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise ValueError("SNR step must be positive")
        count = int((stop - start) / step + 1e-9) + 1
        if count < 1:
            raise ValueError(f"empty SNR range {text!r}")
        return tuple(round(start + i * step, 10) for i in range(count))
    return tuple(float(p) for p in text.split(","))


def parse_code(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"code must be n,k - got {text!r}")
    return int(parts[0]), int(parts[1])


def load_config_file(path: str) -> dict:
    """Read a flat 'key = value' config file ('#' starts a comment)."""
    known = {
        "scheme", "code", "snr_db", "min_trials", "max_trials",
        "target_relative_ci", "seed", "out", "format", "workers",
    }
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.rstrip()!r}")
            key, _, value = line.partition("=")
            key = key.strip().lower()
            if key not in known:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value.strip()
    return values


def _build_sweep_config(args) -> SweepConfig:
    file_values = load_config_file(args.config) if args.config else {}

    def pick(flag_value, key, convert, default):
        if flag_value is not None:
            return flag_value
        if key in file_values:
            return convert(file_values[key])
        return default

    defaults = SweepConfig()
    return SweepConfig(
        scheme=pick(args.scheme, "scheme", str, defaults.scheme),
        code=pick(args.code, "code", parse_code, defaults.code),
        snr_db_grid=pick(args.snr_db, "snr_db", parse_snr_grid, defaults.snr_db_grid),
        min_trials=pick(args.min_trials, "min_trials", int, defaults.min_trials),
        max_trials=pick(args.max_trials, "max_trials", int, defaults.max_trials),
        target_relative_ci=pick(
            args.target_rel_ci, "target_relative_ci", float, defaults.target_relative_ci
        ),
        master_seed=pick(args.seed, "seed", int, defaults.master_seed),
        output_path=pick(args.out, "out", str, None),
        output_format=pick(args.format, "format", str, defaults.output_format),
        workers=pick(args.workers, "workers", int, defaults.workers),
    )


def _cmd_sweep(args) -> int:
    config = _build_sweep_config(args)
    quiet = args.quiet
    progress = None if quiet else (lambda msg: print(msg, file=sys.stderr))
    points = simkit.run_sweep(config, progress=progress)
    simkit.emit(points, config.output_format, config.output_path)
    return 0


def _cmd_analytic(args) -> int:
    scheme = SchemeKind(args.scheme) if args.scheme else SchemeKind.SCPNC
    n, k = args.code if args.code else (15, 5)
    grid = args.snr_db if args.snr_db else tuple(round(0.5 * i, 10) for i in range(29))
    rows = [ANALYTIC_CSV_HEADER]
    for snr_db in grid:
        gamma = 10.0 ** (snr_db / 10.0)
        exact = float(analytics.bler_exact(scheme, gamma, n, k))
        asym = float(analytics.bler_asym(scheme, gamma, n, k))
        rows.append(f"{snr_db!r},{scheme.value},{n},{k},{exact!r},{asym!r}")
    text = "\n".join(rows) + "\n"
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_selftest(args) -> int:
    from . import selftest

    return selftest.run(fast=args.fast)


def _cmd_bench(args) -> int:
    from . import bench

    bench.run(trials=args.trials)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pncsim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    scheme_names = [kind.value for kind in SchemeKind]

    sweep = sub.add_parser("sweep", help="run a Monte Carlo sweep")
    sweep.add_argument("--config", help="flat key=value config file")
    sweep.add_argument("--scheme", choices=scheme_names)
    sweep.add_argument("--code", type=parse_code, help="code as n,k (15,5 / 15,7 / 15,11)")
    sweep.add_argument("--snr-db", type=parse_snr_grid, help="grid as start:stop:step or comma list")
    sweep.add_argument("--seed", type=int, help="master seed")
    sweep.add_argument("--min-trials", type=int)
    sweep.add_argument("--max-trials", type=int)
    sweep.add_argument("--target-rel-ci", type=float, help="relative CI half-width target")
    sweep.add_argument("--workers", type=int)
    sweep.add_argument("--out", help="output path ('-' = stdout)")
    sweep.add_argument("--format", choices=["csv", "json"])
    sweep.add_argument("--quiet", action="store_true", help="suppress progress on stderr")
    sweep.set_defaults(func=_cmd_sweep)

    analytic = sub.add_parser("analytic", help="emit closed-form curves only")
    analytic.add_argument("--scheme", choices=scheme_names)
    analytic.add_argument("--code", type=parse_code, help="code as n,k")
    analytic.add_argument("--snr-db", type=parse_snr_grid, help="grid as start:stop:step or comma list")
    analytic.add_argument("--out", help="output path ('-' = stdout)")
    analytic.set_defaults(func=_cmd_analytic)

    selftest = sub.add_parser("selftest", help="run the invariant suite")
    selftest.add_argument("--fast", action="store_true", help="skip the slower statistical checks")
    selftest.set_defaults(func=_cmd_selftest)

    bench_p = sub.add_parser("bench", help="compare the compiled and python backends")
    bench_p.add_argument("--trials", type=int, default=200_000)
    bench_p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
