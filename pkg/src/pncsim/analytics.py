"""Closed-form and asymptotic error-rate expressions.

All functions take the linear SNR gamma (scalar or array). Block error
rates use the two-hop product form: a block fails if any uplink PNC symbol
or any downlink BPSK symbol is in error. Log-domain variants are provided
because the probabilities underflow double precision above roughly 28 dB
while their ratios stay perfectly well defined.
"""

from __future__ import annotations

import numpy as np
from scipy import special

from .schemes import SchemeKind

_LOG_HALF = float(np.log(0.5))

# below this probability the first-order union expression is exact to ~1e-9
_FIRST_ORDER_CUTOFF = 1e-9


def _as_array(gamma):
    arr = np.asarray(gamma, dtype=np.float64)
    scalar = arr.ndim == 0
    return np.atleast_1d(arr), scalar


def _ret(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


def q_function(x):
    """Gaussian tail probability Q(x) = P(N(0,1) > x)."""
    x = np.asarray(x, dtype=np.float64)
    out = 0.5 * special.erfc(x / np.sqrt(2.0))
    return float(out) if out.ndim == 0 else out


def log_q(x):
    """log Q(x), accurate far into the tail (no underflow)."""
    x = np.asarray(x, dtype=np.float64)
    out = special.log_ndtr(-x)
    return float(out) if out.ndim == 0 else out


def pnc_delta(gamma):
    """Threshold offset in noise-sigma units.

    (sqrt(2)/(4 sqrt(gamma))) * ln(1 + sqrt(1 - exp(-8 gamma)))
    """
    g, scalar = _as_array(gamma)
    log_term = np.log1p(np.sqrt(-np.expm1(-8.0 * g)))
    return _ret(np.sqrt(2.0) / (4.0 * np.sqrt(g)) * log_term, scalar)


def p_pnc_exact(gamma):
    """Per-symbol error probability of the PNC mapping at the relay.

    Q(x + d) + Q(x - d)/2 - Q(3x + d)/2 with x = sqrt(2 gamma), d the
    normalized threshold offset. May underflow to 0 above ~28 dB; use
    :func:`log_p_pnc_exact` there.
    """
    g, scalar = _as_array(gamma)
    x = np.sqrt(2.0 * g)
    d = np.atleast_1d(pnc_delta(g))
    out = q_function(x + d) + 0.5 * q_function(x - d) - 0.5 * q_function(3.0 * x + d)
    return _ret(np.atleast_1d(out), scalar)


def log_p_pnc_exact(gamma):
    """log of :func:`p_pnc_exact`, stable at arbitrarily high SNR."""
    g, scalar = _as_array(gamma)
    x = np.sqrt(2.0 * g)
    d = np.atleast_1d(pnc_delta(g))
    l1 = log_q(x + d)
    l2 = log_q(x - d) + _LOG_HALF
    l3 = log_q(3.0 * x + d) + _LOG_HALF
    top = np.maximum(l1, l2)
    out = top + np.log(np.exp(l1 - top) + np.exp(l2 - top) - np.exp(l3 - top))
    return _ret(out, scalar)


def p_pnc_asym(gamma):
    """High-SNR approximation (3/2) Q(sqrt(2 gamma))."""
    g, scalar = _as_array(gamma)
    return _ret(np.atleast_1d(1.5 * q_function(np.sqrt(2.0 * g))), scalar)


def _check_code(n: int, k: int):
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got ({n}, {k})")


def _log_two_hop_bler(gamma, n_pnc: int, n_bpsk: int):
    """log of 1 - (1 - p_pnc)^n_pnc * (1 - p_bpsk)^n_bpsk."""
    g, scalar = _as_array(gamma)
    lp = np.atleast_1d(log_p_pnc_exact(g))
    lq = np.atleast_1d(log_q(np.sqrt(2.0 * g)))
    # first-order union bound, exact in the limit of small probabilities
    first = np.logaddexp(np.log(n_pnc) + lp, np.log(n_bpsk) + lq)
    with np.errstate(divide="ignore", invalid="ignore"):
        succ = n_pnc * np.log1p(-np.exp(lp)) + n_bpsk * np.log1p(-np.exp(lq))
        full = np.log(-np.expm1(succ))
    out = np.where(first < np.log(_FIRST_ORDER_CUTOFF), first, full)
    return _ret(out, scalar)


def _two_hop_bler(gamma, n_pnc: int, n_bpsk: int):
    g, scalar = _as_array(gamma)
    out = np.exp(np.atleast_1d(_log_two_hop_bler(g, n_pnc, n_bpsk)))
    return _ret(out, scalar)


def bler_scpnc_exact(gamma, n: int, k: int):
    """Source-compression BLER: m PNC symbols up, m BPSK symbols down."""
    _check_code(n, k)
    return _two_hop_bler(gamma, n - k, n - k)


def bler_rcpnc_exact(gamma, n: int, k: int):
    """Relay-compression BLER: n PNC symbols up, m BPSK symbols down."""
    _check_code(n, k)
    return _two_hop_bler(gamma, n, n - k)


def bler_conv_exact(gamma, n: int):
    """Non-compression BLER: n PNC symbols up, n BPSK symbols down."""
    if n <= 0:
        raise ValueError(f"block length must be positive, got {n}")
    return _two_hop_bler(gamma, n, n)


def log_bler_scpnc_exact(gamma, n: int, k: int):
    _check_code(n, k)
    return _log_two_hop_bler(gamma, n - k, n - k)


def log_bler_rcpnc_exact(gamma, n: int, k: int):
    _check_code(n, k)
    return _log_two_hop_bler(gamma, n, n - k)


def log_bler_conv_exact(gamma, n: int):
    if n <= 0:
        raise ValueError(f"block length must be positive, got {n}")
    return _log_two_hop_bler(gamma, n, n)


def bler_scpnc_asym(gamma, n: int, k: int):
    """High-SNR BLER approximation (5(n-k)/2) Q(sqrt(2 gamma))."""
    _check_code(n, k)
    g, scalar = _as_array(gamma)
    out = 2.5 * (n - k) * np.atleast_1d(q_function(np.sqrt(2.0 * g)))
    return _ret(out, scalar)


def bler_rcpnc_asym(gamma, n: int, k: int):
    """High-SNR BLER approximation ((5n-2k)/2) Q(sqrt(2 gamma))."""
    _check_code(n, k)
    g, scalar = _as_array(gamma)
    out = 0.5 * (5 * n - 2 * k) * np.atleast_1d(q_function(np.sqrt(2.0 * g)))
    return _ret(out, scalar)


def bler_conv_asym(gamma, n: int):
    """High-SNR BLER approximation (5n/2) Q(sqrt(2 gamma))."""
    if n <= 0:
        raise ValueError(f"block length must be positive, got {n}")
    g, scalar = _as_array(gamma)
    out = 2.5 * n * np.atleast_1d(q_function(np.sqrt(2.0 * g)))
    return _ret(out, scalar)


def gain_scpnc(n: int, k: int) -> float:
    """High-SNR BLER ratio conventional / SCPNC = n / (n - k)."""
    _check_code(n, k)
    return n / (n - k)


def gain_rcpnc(n: int, k: int) -> float:
    """High-SNR BLER ratio conventional / RCPNC = 5n / (5n - 2k)."""
    _check_code(n, k)
    return 5 * n / (5 * n - 2 * k)


def bler_exact(kind: SchemeKind, gamma, n: int, k: int):
    """Exact BLER for any scheme (dispatch helper)."""
    if kind is SchemeKind.SCPNC:
        return bler_scpnc_exact(gamma, n, k)
    if kind is SchemeKind.RCPNC:
        return bler_rcpnc_exact(gamma, n, k)
    return bler_conv_exact(gamma, n)


def bler_asym(kind: SchemeKind, gamma, n: int, k: int):
    """Asymptotic BLER for any scheme (dispatch helper)."""
    if kind is SchemeKind.SCPNC:
        return bler_scpnc_asym(gamma, n, k)
    if kind is SchemeKind.RCPNC:
        return bler_rcpnc_asym(gamma, n, k)
    return bler_conv_asym(gamma, n)


def log_bler_exact(kind: SchemeKind, gamma, n: int, k: int):
    """log exact BLER for any scheme (dispatch helper)."""
    if kind is SchemeKind.SCPNC:
        return log_bler_scpnc_exact(gamma, n, k)
    if kind is SchemeKind.RCPNC:
        return log_bler_rcpnc_exact(gamma, n, k)
    return log_bler_conv_exact(gamma, n)


def _asym_coefficient(kind: SchemeKind, n: int, k: int) -> float:
    if kind is SchemeKind.SCPNC:
        _check_code(n, k)
        return 2.5 * (n - k)
    if kind is SchemeKind.RCPNC:
        _check_code(n, k)
        return 0.5 * (5 * n - 2 * k)
    return 2.5 * n


def log_bler_asym(kind: SchemeKind, gamma, n: int, k: int):
    """log asymptotic BLER for any scheme, stable at arbitrarily high SNR."""
    g, scalar = _as_array(gamma)
    coef = _asym_coefficient(kind, n, k)
    out = np.log(coef) + np.atleast_1d(log_q(np.sqrt(2.0 * g)))
    return _ret(out, scalar)
