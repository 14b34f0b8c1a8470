"""BPSK over real AWGN, plus the two-user PNC detector.

The channel is the real (in-phase) baseband equivalent: noise samples are
zero-mean Gaussians with variance N0/2, so a point-to-point BPSK link has
symbol error rate Q(sqrt(2*gamma)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ChannelParams:
    """AWGN link parameters: linear SNR gamma = energy / N0."""

    gamma: float
    energy: float = 1.0

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if not (self.energy > 0 and math.isfinite(self.energy)):
            raise ValueError(f"energy must be positive and finite, got {self.energy}")

    @classmethod
    def from_db(cls, snr_db: float, energy: float = 1.0) -> "ChannelParams":
        return cls(gamma=10.0 ** (snr_db / 10.0), energy=energy)

    @property
    def n0(self) -> float:
        """Noise spectral density energy / gamma."""
        return self.energy / self.gamma

    @property
    def sigma(self) -> float:
        """Per-sample noise standard deviation sqrt(N0 / 2)."""
        return math.sqrt(self.n0 / 2.0)


def bpsk_modulate(bits: np.ndarray, energy: float = 1.0) -> np.ndarray:
    """Map bits to amplitudes sqrt(E) * (1 - 2b): 0 -> +sqrt(E), 1 -> -sqrt(E)."""
    bits = np.asarray(bits, dtype=np.float64)
    return math.sqrt(energy) * (1.0 - 2.0 * bits)


def awgn(x: np.ndarray, params: ChannelParams, rng: np.random.Generator) -> np.ndarray:
    """Add white Gaussian noise with per-sample variance N0/2."""
    x = np.asarray(x, dtype=np.float64)
    return x + params.sigma * rng.standard_normal(x.shape)


def multiple_access(
    x1: np.ndarray, x2: np.ndarray, params: ChannelParams, rng: np.random.Generator
) -> np.ndarray:
    """Superpose two unit-amplitude blocks, each scaled by sqrt(E), plus noise."""
    x1 = np.asarray(x1, dtype=np.float64)
    x2 = np.asarray(x2, dtype=np.float64)
    if x1.shape != x2.shape:
        raise ValueError(f"length mismatch: {x1.shape} vs {x2.shape}")
    scale = math.sqrt(params.energy)
    return scale * (x1 + x2) + params.sigma * rng.standard_normal(x1.shape)


def pnc_threshold(params: ChannelParams) -> float:
    """Optimal magnitude threshold separating XOR=0 from XOR=1 at the relay.

    sqrt(E) + (sqrt(N0)/4) * (1/sqrt(gamma)) * ln(1 + sqrt(1 - exp(-8*gamma))),
    evaluated with expm1/log1p so both SNR extremes stay accurate.
    """
    gamma = params.gamma
    if math.isinf(gamma):
        return math.sqrt(params.energy)
    log_term = math.log1p(math.sqrt(-math.expm1(-8.0 * gamma)))
    return math.sqrt(params.energy) + math.sqrt(params.n0) / (4.0 * math.sqrt(gamma)) * log_term


def pnc_map(y: np.ndarray, params: ChannelParams) -> np.ndarray:
    """Relay decision per symbol: |y| > threshold -> 0, otherwise -> 1.

    The output estimates the XOR of the two transmitted bits; the boundary
    |y| == threshold deterministically yields 1.
    """
    y = np.asarray(y, dtype=np.float64)
    return (np.abs(y) <= pnc_threshold(params)).astype(np.uint8)


def bpsk_demodulate(y: np.ndarray) -> np.ndarray:
    """Hard decision per symbol: y > 0 -> 0, otherwise -> 1."""
    y = np.asarray(y, dtype=np.float64)
    return (y <= 0.0).astype(np.uint8)
