"""Length-15 BCH codes with syndrome (coset-leader) decoding.

The codes act as Slepian-Wolf bins: a block is compressed to its m = n-k bit
syndrome, and a destination recovers the error pattern between the two
correlated blocks by looking up the minimum-weight member of the coset the
received syndrome names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import gf2

# Narrow-sense binary BCH generator polynomials for n = 15, as integers with
# the x^0 coefficient in bit 0.
#   (15,11) t=1: x^4 + x + 1
#   (15,7)  t=2: x^8 + x^7 + x^6 + x^4 + 1
#   (15,5)  t=3: x^10 + x^8 + x^5 + x^4 + x^2 + x + 1
_BCH_PARAMS: dict[tuple[int, int], tuple[int, int]] = {
    (15, 11): (0b10011, 1),
    (15, 7): (0b111010001, 2),
    (15, 5): (0b10100110111, 3),
}

SUPPORTED_CODES = tuple(sorted(_BCH_PARAMS))


@dataclass(frozen=True)
class LinearBlockCode:
    """An (n, k) binary linear block code with precomputed decode tables.

    Attributes:
        n: block length in bits.
        k: message length in bits.
        t: guaranteed error-correcting capability (hamming weight).
        generator: k x n generator matrix in systematic form [I_k | P].
        parity_check: m x n parity-check matrix [P^T | I_m], m = n - k.
        syndrome_table: packed word -> packed syndrome, all 2^n words.
        leader_table: packed syndrome -> packed minimum-weight coset leader.
    """

    n: int
    k: int
    t: int
    generator: np.ndarray = field(repr=False)
    parity_check: np.ndarray = field(repr=False)
    syndrome_table: np.ndarray = field(repr=False)
    leader_table: np.ndarray = field(repr=False)

    @property
    def m(self) -> int:
        """Syndrome length n - k."""
        return self.n - self.k

    @property
    def compression_ratio(self) -> float:
        """Compressed fraction m/n of a block."""
        return self.m / self.n

    def syndrome(self, word: np.ndarray) -> np.ndarray:
        """Syndrome word * H^T of an n-bit block."""
        word = np.asarray(word, dtype=np.uint8)
        if word.shape != (self.n,):
            raise ValueError(f"expected {self.n} bits, got shape {word.shape}")
        return gf2.unpack_bits(int(self.syndrome_table[gf2.pack_bits(word)]), self.m)

    def decode_error_pattern(self, syndrome: np.ndarray) -> np.ndarray:
        """Minimum-weight error pattern whose syndrome matches.

        Exact whenever the true pattern has weight <= t.
        """
        syndrome = np.asarray(syndrome, dtype=np.uint8)
        if syndrome.shape != (self.m,):
            raise ValueError(f"expected {self.m} syndrome bits, got shape {syndrome.shape}")
        return gf2.unpack_bits(int(self.leader_table[gf2.pack_bits(syndrome)]), self.n)

    def all_codewords(self) -> np.ndarray:
        """All 2^k codewords, one per row."""
        msgs = ((np.arange(2**self.k)[:, None] >> np.arange(self.k)) & 1).astype(np.uint8)
        return gf2.mat_mul(msgs, self.generator)

    def min_distance(self) -> int:
        """Minimum distance by exhaustive codeword enumeration."""
        weights = self.all_codewords().sum(axis=1)
        return int(weights[weights > 0].min())


def _cyclic_generator_matrix(n: int, k: int, poly: int) -> np.ndarray:
    """k x n matrix whose rows are the shifts x^i * g(x), i = 0..k-1."""
    g = np.zeros((k, n), dtype=np.uint8)
    coeffs = gf2.unpack_bits(poly, n - k + 1)
    for i in range(k):
        g[i, i : i + coeffs.size] = coeffs
    return g


def _systematic_form(g: np.ndarray) -> np.ndarray:
    """Row-reduce a full-rank k x n matrix to [I_k | P]."""
    k, n = g.shape
    reduced = gf2.row_reduce(g)
    if not np.array_equal(reduced[:, :k], np.eye(k, dtype=np.uint8)):
        raise ValueError("generator matrix is not systematic-reducible on the left block")
    return reduced


def build_syndrome_table(parity_check: np.ndarray) -> np.ndarray:
    """Packed syndrome of every n-bit word, as a 2^n array.

    Built by the doubling construction: appending bit j XORs in the packed
    j-th column of H.
    """
    parity_check = np.asarray(parity_check, dtype=np.uint8)
    m, n = parity_check.shape
    if n > 16:
        raise ValueError("syndrome tables are only built for n <= 16")
    col_syndromes = [gf2.pack_bits(parity_check[:, j]) for j in range(n)]
    table = np.zeros(2**n, dtype=np.uint16)
    for j, col in enumerate(col_syndromes):
        half = 1 << j
        table[half : 2 * half] = table[:half] ^ np.uint16(col)
    return table


def build_coset_leader_table(parity_check: np.ndarray) -> np.ndarray:
    """Minimum-weight coset leader (packed) for every syndrome value.

    Words are scanned in increasing (weight, integer value) order and the
    first word seen for each syndrome wins, which both guarantees minimum
    weight and fixes a deterministic tie-break.
    """
    parity_check = np.asarray(parity_check, dtype=np.uint8)
    m, n = parity_check.shape
    syndrome_table = build_syndrome_table(parity_check)
    words = np.arange(2**n, dtype=np.uint32)
    weights = np.zeros(2**n, dtype=np.uint8)
    for j in range(n):
        weights += ((words >> j) & 1).astype(np.uint8)
    order = np.lexsort((words, weights))

    leaders = np.zeros(2**m, dtype=np.uint16)
    seen = np.zeros(2**m, dtype=bool)
    filled = 0
    for w in order:
        s = syndrome_table[w]
        if not seen[s]:
            seen[s] = True
            leaders[s] = w
            filled += 1
            if filled == 2**m:
                break
    return leaders


def from_generator_poly(n: int, k: int, poly: int, t: int) -> LinearBlockCode:
    """Build a cyclic code from its generator polynomial (supports n <= 16)."""
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got ({n}, {k})")
    if poly.bit_length() != n - k + 1:
        raise ValueError(f"generator polynomial degree must be n - k = {n - k}")
    gen = _systematic_form(_cyclic_generator_matrix(n, k, poly))
    p = gen[:, k:]
    parity = np.concatenate([p.T, np.eye(n - k, dtype=np.uint8)], axis=1)
    syndrome_table = build_syndrome_table(parity)
    leader_table = build_coset_leader_table(parity)
    for arr in (gen, parity, syndrome_table, leader_table):
        arr.setflags(write=False)
    return LinearBlockCode(
        n=n,
        k=k,
        t=t,
        generator=gen,
        parity_check=parity,
        syndrome_table=syndrome_table,
        leader_table=leader_table,
    )


@lru_cache(maxsize=None)
def make_bch(n: int, k: int) -> LinearBlockCode:
    """One of the supported (15, k) BCH codes, k in {5, 7, 11}."""
    try:
        poly, t = _BCH_PARAMS[(n, k)]
    except KeyError:
        raise ValueError(
            f"unsupported code ({n}, {k}); supported: {SUPPORTED_CODES}"
        ) from None
    return from_generator_poly(n, k, poly, t)
