"""End-to-end single-exchange pipelines for the three relaying schemes.

Each run_* function executes one bidirectional exchange and reports whether
each destination recovered the other source's block, plus the symbol cost of
the exchange. These are the readable reference implementations; large Monte
Carlo runs go through :func:`simulate_batch`, which drives the vectorized
backend kernels and is checked against the reference path in the tests.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import backend, gf2, phy, sources
from .block_code import LinearBlockCode
from .phy import ChannelParams
from .sources import CorrelationModel


class SchemeKind(enum.Enum):
    """The two compression schemes and the non-compression baseline."""

    SCPNC = "scpnc"
    RCPNC = "rcpnc"
    CONVENTIONAL = "conventional"


@dataclass(frozen=True)
class TrialOutcome:
    """Result of one bidirectional exchange."""

    ok_1to2: bool
    ok_2to1: bool
    uplink_symbols: int
    downlink_symbols: int


def symbol_budget(kind: SchemeKind, n: int, m: int) -> tuple[int, int]:
    """(uplink, downlink) symbol intervals consumed per exchange."""
    if kind is SchemeKind.SCPNC:
        return m, m
    if kind is SchemeKind.RCPNC:
        return n, m
    return n, n


def _check_pair(pair, n: int, t: int) -> tuple[np.ndarray, np.ndarray]:
    c1, c2 = pair
    c1 = gf2.as_bits(c1)
    c2 = gf2.as_bits(c2)
    if c1.size != n or c2.size != n:
        raise ValueError(f"messages must be {n} bits, got {c1.size} and {c2.size}")
    d = gf2.hamming_distance(c1, c2)
    if d > t:
        raise ValueError(f"pair violates the correlation constraint: distance {d} > t={t}")
    return c1, c2


def _broadcast(bits: np.ndarray, params: ChannelParams, rng: np.random.Generator) -> np.ndarray:
    """One destination's hard estimate of a BPSK-broadcast block."""
    y = phy.awgn(phy.bpsk_modulate(bits, params.energy), params, rng)
    return phy.bpsk_demodulate(y)


def run_scpnc(
    code: LinearBlockCode,
    params: ChannelParams,
    pair: tuple[np.ndarray, np.ndarray],
    rng: np.random.Generator,
) -> TrialOutcome:
    """Source-side compression: both sources transmit syndromes.

    Uplink: the m-bit syndromes meet in the multiple-access channel and the
    relay PNC-maps the superposition to an estimate of their XOR. Downlink:
    that estimate is broadcast; each destination decodes the error pattern
    from its received syndrome and XORs with its own block.
    """
    c1, c2 = _check_pair(pair, code.n, code.t)
    s1 = code.syndrome(c1)
    s2 = code.syndrome(c2)

    y_relay = phy.multiple_access(phy.bpsk_modulate(s1), phy.bpsk_modulate(s2), params, rng)
    s_relay = phy.pnc_map(y_relay, params)

    s_at_t1 = _broadcast(s_relay, params, rng)
    s_at_t2 = _broadcast(s_relay, params, rng)

    c2_hat = gf2.xor(code.decode_error_pattern(s_at_t1), c1)
    c1_hat = gf2.xor(code.decode_error_pattern(s_at_t2), c2)
    return TrialOutcome(
        ok_1to2=bool(np.array_equal(c1_hat, c1)),
        ok_2to1=bool(np.array_equal(c2_hat, c2)),
        uplink_symbols=code.m,
        downlink_symbols=code.m,
    )


def run_rcpnc(
    code: LinearBlockCode,
    params: ChannelParams,
    pair: tuple[np.ndarray, np.ndarray],
    rng: np.random.Generator,
) -> TrialOutcome:
    """Relay-side compression: raw blocks up, compressed XOR estimate down.

    The relay PNC-maps the n-symbol superposition and compresses its hard
    estimate to a syndrome before broadcasting; destination decoding is the
    same as in the source-compression scheme.
    """
    c1, c2 = _check_pair(pair, code.n, code.t)

    y_relay = phy.multiple_access(phy.bpsk_modulate(c1), phy.bpsk_modulate(c2), params, rng)
    c_relay = phy.pnc_map(y_relay, params)
    s_relay = code.syndrome(c_relay)

    s_at_t1 = _broadcast(s_relay, params, rng)
    s_at_t2 = _broadcast(s_relay, params, rng)

    c2_hat = gf2.xor(code.decode_error_pattern(s_at_t1), c1)
    c1_hat = gf2.xor(code.decode_error_pattern(s_at_t2), c2)
    return TrialOutcome(
        ok_1to2=bool(np.array_equal(c1_hat, c1)),
        ok_2to1=bool(np.array_equal(c2_hat, c2)),
        uplink_symbols=code.n,
        downlink_symbols=code.m,
    )


def run_conventional(
    params: ChannelParams,
    pair: tuple[np.ndarray, np.ndarray],
    n: int,
    rng: np.random.Generator,
) -> TrialOutcome:
    """Non-compression baseline: raw blocks up, raw XOR estimate down."""
    c1, c2 = _check_pair(pair, n, n)

    y_relay = phy.multiple_access(phy.bpsk_modulate(c1), phy.bpsk_modulate(c2), params, rng)
    c_relay = phy.pnc_map(y_relay, params)

    c2_hat = gf2.xor(_broadcast(c_relay, params, rng), c1)
    c1_hat = gf2.xor(_broadcast(c_relay, params, rng), c2)
    return TrialOutcome(
        ok_1to2=bool(np.array_equal(c1_hat, c1)),
        ok_2to1=bool(np.array_equal(c2_hat, c2)),
        uplink_symbols=n,
        downlink_symbols=n,
    )


def simulate_batch(
    kind: SchemeKind,
    code: LinearBlockCode,
    params: ChannelParams,
    model: CorrelationModel,
    rng: np.random.Generator,
    count: int,
    kernels=None,
) -> tuple[np.ndarray, np.ndarray]:
    """Run `count` fresh exchanges through the batch kernels.

    Returns (ok_1to2, ok_2to1) as uint8 arrays. Randomness is consumed in a
    fixed order (message pairs, uplink noise, T1 noise, T2 noise) so a given
    generator state fully determines the outcome on every backend.
    """
    if kernels is None:
        kernels = backend.get_kernels()
    n, m = code.n, code.m
    c1, c2 = sources.sample_pairs(model, rng, count)
    sqrt_e = float(np.sqrt(params.energy))
    sigma = params.sigma
    thresh = phy.pnc_threshold(params)
    up, down = symbol_budget(kind, n, m)
    g_up = rng.standard_normal((count, up))
    g_d1 = rng.standard_normal((count, down))
    g_d2 = rng.standard_normal((count, down))
    if kind is SchemeKind.SCPNC:
        return kernels.scpnc_batch(
            c1, c2, code.syndrome_table, code.leader_table,
            sqrt_e, sigma, thresh, g_up, g_d1, g_d2,
        )
    if kind is SchemeKind.RCPNC:
        return kernels.rcpnc_batch(
            c1, c2, code.syndrome_table, code.leader_table,
            sqrt_e, sigma, thresh, g_up, g_d1, g_d2,
        )
    return kernels.conventional_batch(c1, c2, sqrt_e, sigma, thresh, g_up, g_d1, g_d2)
