"""Correlated message-pair generation under a bounded Hamming-distance model.

A pair (c1, c2) is produced by drawing c1 uniformly over {0,1}^n and a
difference pattern e uniformly over the ball {e : weight(e) <= t}, then
setting c2 = c1 XOR e. Every pair therefore satisfies d_H(c1, c2) <= t by
construction; the in-ball distribution is the least-informative choice and is
fixed here so results are reproducible.
"""

from __future__ import annotations

import numpy as np

from . import gf2


class CorrelationModel:
    """Bounded-distance correlation between two n-bit sources."""

    def __init__(self, n: int, t: int):
        if not 0 < n <= 16:
            raise ValueError(f"block length must be in 1..16, got {n}")
        if not 0 <= t <= n:
            raise ValueError(f"max distance t must be in 0..{n}, got {t}")
        self.n = n
        self.t = t
        self.ball = _weight_ball(n, t)

    def __repr__(self) -> str:
        return f"CorrelationModel(n={self.n}, t={self.t})"


def _weight_ball(n: int, t: int) -> np.ndarray:
    """All packed n-bit words of weight <= t, sorted by (weight, value)."""
    words = np.arange(2**n, dtype=np.uint32)
    weights = np.zeros(2**n, dtype=np.uint8)
    for j in range(n):
        weights += ((words >> j) & 1).astype(np.uint8)
    keep = weights <= t
    order = np.lexsort((words[keep], weights[keep]))
    ball = words[keep][order].astype(np.uint16)
    ball.setflags(write=False)
    return ball


def generate_pair(
    model: CorrelationModel, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """One correlated pair of bit blocks."""
    c1 = int(rng.integers(0, 2**model.n))
    e = int(model.ball[rng.integers(0, model.ball.size)])
    return gf2.unpack_bits(c1, model.n), gf2.unpack_bits(c1 ^ e, model.n)


def sample_pairs(
    model: CorrelationModel, rng: np.random.Generator, count: int
) -> tuple[np.ndarray, np.ndarray]:
    """A batch of correlated pairs as packed uint16 words."""
    c1 = rng.integers(0, 2**model.n, size=count, dtype=np.uint16)
    e = model.ball[rng.integers(0, model.ball.size, size=count)]
    return c1, c1 ^ e


def correlation_factor(model: CorrelationModel) -> float:
    """Worst-case normalized correlation 1 - 2t/n."""
    return 1.0 - 2.0 * model.t / model.n
