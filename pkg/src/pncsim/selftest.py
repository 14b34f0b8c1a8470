"""Built-in invariant suite behind the `pncsim selftest` subcommand.

Each check prints one ok/FAIL line; the run returns the number of failures
(so the CLI exits nonzero if anything is broken). These checks are quick
smoke-level guards; the full statistical validation lives in the test suite.
"""

from __future__ import annotations

import numpy as np

from . import analytics, backend, gf2, simkit
from .block_code import SUPPORTED_CODES, make_bch
from .phy import ChannelParams, pnc_threshold
from .schemes import SchemeKind, run_conventional, run_rcpnc, run_scpnc
from .simkit import SweepConfig
from .sources import CorrelationModel, generate_pair


def _check_code_tables():
    for n, k in SUPPORTED_CODES:
        code = make_bch(n, k)
        assert np.all(gf2.mat_mul(code.generator, code.parity_check.T) == 0), "G H^T != 0"
        assert gf2.rank(code.generator) == k and gf2.rank(code.parity_check) == code.m
        assert code.leader_table.size == 2**code.m
        # every weight-<=t pattern is its own coset leader
        for e in CorrelationModel(n, code.t).ball:
            assert code.leader_table[code.syndrome_table[e]] == e
        assert code.min_distance() >= 2 * code.t + 1


def _check_threshold_consistency():
    for snr_db in np.linspace(-5, 30, 15):
        params = ChannelParams.from_db(snr_db)
        normalized = pnc_threshold(params) / params.sigma
        expected = np.sqrt(2 * params.gamma) + analytics.pnc_delta(params.gamma)
        assert abs(normalized - expected) < 1e-9 * expected


def _check_analytics():
    gammas = 10 ** (np.linspace(0, 14, 29) / 10)
    for n, k in SUPPORTED_CODES:
        s = analytics.bler_scpnc_exact(gammas, n, k)
        r = analytics.bler_rcpnc_exact(gammas, n, k)
        c = analytics.bler_conv_exact(gammas, n)
        assert np.all((s <= r) & (r <= c)), "BLER ordering violated"
        for curve in (s, r, c):
            assert np.all((curve >= 0) & (curve <= 1))
            assert np.all(np.diff(curve) < 0), "BLER must decrease with SNR"


def _check_noiseless_schemes():
    rng = np.random.default_rng(7)
    params = ChannelParams.from_db(60.0)
    for n, k in SUPPORTED_CODES:
        code = make_bch(n, k)
        model = CorrelationModel(n, code.t)
        for _ in range(20):
            pair = generate_pair(model, rng)
            for outcome in (
                run_scpnc(code, params, pair, rng),
                run_rcpnc(code, params, pair, rng),
                run_conventional(params, pair, n, rng),
            ):
                assert outcome.ok_1to2 and outcome.ok_2to1


def _check_backend_parity():
    compiled = backend.load_backend("auto")
    fallback = backend.load_backend("python")
    if compiled is fallback:
        return "compiled core not built; parity check skipped"
    code = make_bch(15, 5)
    model = CorrelationModel(15, 3)
    from . import schemes

    for kind in SchemeKind:
        a = schemes.simulate_batch(
            kind, code, ChannelParams.from_db(4), model,
            np.random.default_rng(99), 4096, kernels=compiled,
        )
        b = schemes.simulate_batch(
            kind, code, ChannelParams.from_db(4), model,
            np.random.default_rng(99), 4096, kernels=fallback,
        )
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
    return None


def _check_pnc_symbol_rate():
    params = ChannelParams.from_db(7.0)
    sim = simkit.pnc_symbol_error_rate(params, 1_000_000, master_seed=5)
    exact = analytics.p_pnc_exact(params.gamma)
    sigma = np.sqrt(exact * (1 - exact) / 1_000_000)
    assert abs(sim - exact) <= 4 * sigma, f"sim {sim} vs exact {exact}"


def _check_determinism():
    config = dict(
        scheme=SchemeKind.SCPNC, code=(15, 5), snr_db_grid=(6.0, 8.0),
        min_trials=5000, max_trials=5000, master_seed=123,
    )
    a = simkit.run_sweep(SweepConfig(**config, workers=1))
    b = simkit.run_sweep(SweepConfig(**config, workers=4))
    assert simkit.render_csv(a) == simkit.render_csv(b)


_FAST_CHECKS = [
    ("code tables and invariants", _check_code_tables),
    ("threshold normalized consistency", _check_threshold_consistency),
    ("analytic curve sanity", _check_analytics),
    ("noiseless exchanges decode", _check_noiseless_schemes),
    ("backend parity", _check_backend_parity),
]

_SLOW_CHECKS = [
    ("pnc symbol error rate vs closed form", _check_pnc_symbol_rate),
    ("sweep determinism across worker counts", _check_determinism),
]


def run(fast: bool = False) -> int:
    checks = _FAST_CHECKS if fast else _FAST_CHECKS + _SLOW_CHECKS
    failures = 0
    for name, fn in checks:
        try:
            note = fn()
        except AssertionError as exc:
            failures += 1
            print(f"FAIL {name}: {exc}")
        else:
            suffix = f" ({note})" if note else ""
            print(f"ok   {name}{suffix}")
    print(f"{len(checks) - failures}/{len(checks)} checks passed (backend: {backend.backend_name()})")
    return failures


if __name__ == "__main__":
    import sys

    sys.exit(run())
