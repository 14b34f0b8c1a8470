"""Pure-numpy batch kernels (fallback when the compiled core is absent).

Float expressions here are written operation-for-operation like the compiled
core (which is built with FP contraction off), so both backends produce
bit-identical decisions from the same random inputs.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def _unpack(words: np.ndarray, width: int) -> np.ndarray:
    """(B,) packed words -> (B, width) float symbols 1 - 2*bit."""
    bits = (words[:, None] >> np.arange(width, dtype=np.uint16)) & 1
    return 1.0 - 2.0 * bits


def _pack(bits: np.ndarray) -> np.ndarray:
    """(B, width) boolean bits -> (B,) packed uint16 words."""
    width = bits.shape[1]
    shifted = bits.astype(np.uint16) << np.arange(width, dtype=np.uint16)
    return np.bitwise_or.reduce(shifted, axis=1)


def _pnc_uplink(x1, x2, sqrt_e, sigma, thresh, g):
    y = sqrt_e * (x1 + x2) + sigma * g
    return np.abs(y) <= thresh


def _bpsk_downlink(words, width, sqrt_e, sigma, g):
    y = sqrt_e * _unpack(words, width) + sigma * g
    return _pack(y <= 0.0)


def scpnc_batch(c1, c2, synd_tab, lead_tab, sqrt_e, sigma, thresh, g_up, g_d1, g_d2):
    """Source-compression exchanges; returns (ok_1to2, ok_2to1) uint8 arrays."""
    m = g_up.shape[1]
    s1 = synd_tab[c1]
    s2 = synd_tab[c2]
    sr = _pack(_pnc_uplink(_unpack(s1, m), _unpack(s2, m), sqrt_e, sigma, thresh, g_up))
    e1 = lead_tab[_bpsk_downlink(sr, m, sqrt_e, sigma, g_d1)]
    e2 = lead_tab[_bpsk_downlink(sr, m, sqrt_e, sigma, g_d2)]
    ok21 = ((e1 ^ c1) == c2).astype(np.uint8)
    ok12 = ((e2 ^ c2) == c1).astype(np.uint8)
    return ok12, ok21


def rcpnc_batch(c1, c2, synd_tab, lead_tab, sqrt_e, sigma, thresh, g_up, g_d1, g_d2):
    """Relay-compression exchanges; returns (ok_1to2, ok_2to1) uint8 arrays."""
    n = g_up.shape[1]
    m = g_d1.shape[1]
    cr = _pack(_pnc_uplink(_unpack(c1, n), _unpack(c2, n), sqrt_e, sigma, thresh, g_up))
    sr = synd_tab[cr]
    e1 = lead_tab[_bpsk_downlink(sr, m, sqrt_e, sigma, g_d1)]
    e2 = lead_tab[_bpsk_downlink(sr, m, sqrt_e, sigma, g_d2)]
    ok21 = ((e1 ^ c1) == c2).astype(np.uint8)
    ok12 = ((e2 ^ c2) == c1).astype(np.uint8)
    return ok12, ok21


def conventional_batch(c1, c2, sqrt_e, sigma, thresh, g_up, g_d1, g_d2):
    """Non-compression exchanges; returns (ok_1to2, ok_2to1) uint8 arrays."""
    n = g_up.shape[1]
    cr = _pack(_pnc_uplink(_unpack(c1, n), _unpack(c2, n), sqrt_e, sigma, thresh, g_up))
    r1 = _bpsk_downlink(cr, n, sqrt_e, sigma, g_d1)
    r2 = _bpsk_downlink(cr, n, sqrt_e, sigma, g_d2)
    ok21 = ((r1 ^ c1) == c2).astype(np.uint8)
    ok12 = ((r2 ^ c2) == c1).astype(np.uint8)
    return ok12, ok21


def pnc_map_errors(b1, b2, sqrt_e, sigma, thresh, g) -> int:
    """Count PNC mapping errors over independent symbols.

    b1, b2 are uint8 bit arrays; an error is a mapped bit differing from
    b1 XOR b2.
    """
    x1 = 1.0 - 2.0 * b1.astype(np.float64)
    x2 = 1.0 - 2.0 * b2.astype(np.float64)
    est = _pnc_uplink(x1, x2, sqrt_e, sigma, thresh, g).astype(np.uint8)
    return int(np.count_nonzero(est != (b1 ^ b2)))
