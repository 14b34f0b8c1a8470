"""Binary (GF(2)) vector and matrix primitives.

Bit blocks are 1-D numpy arrays of uint8 holding 0/1 values; matrices are
2-D uint8 arrays. Index 0 is the first transmitted bit, and it maps to the
least significant bit when a block is packed into an integer.
"""

from __future__ import annotations

import numpy as np


def as_bits(values) -> np.ndarray:
    """Coerce a sequence of 0/1 values to a uint8 bit array."""
    arr = np.asarray(values, dtype=np.uint8)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D bit block, got shape {arr.shape}")
    if arr.size and arr.max() > 1:
        raise ValueError("bit blocks may only contain 0 and 1")
    return arr


def xor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise modulo-2 sum of two equal-length bit blocks."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return a ^ b


def mat_vec_mul(v: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Row-vector times matrix over GF(2): result[j] = XOR_i v[i]*m[i,j]."""
    v = np.asarray(v, dtype=np.uint8)
    m = np.asarray(m, dtype=np.uint8)
    if v.ndim != 1 or m.ndim != 2 or v.size != m.shape[0]:
        raise ValueError(f"dimension mismatch: v has {v.size} entries, matrix is {m.shape}")
    return (v.astype(np.uint32) @ m.astype(np.uint32) & 1).astype(np.uint8)


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over GF(2)."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
    return (a.astype(np.uint32) @ b.astype(np.uint32) & 1).astype(np.uint8)


def hamming_weight(v: np.ndarray) -> int:
    """Number of 1-bits in a block."""
    return int(np.count_nonzero(np.asarray(v)))


def hamming_distance(a: np.ndarray, b: np.ndarray) -> int:
    """Hamming distance = weight of the elementwise XOR."""
    return hamming_weight(xor(a, b))


def pack_bits(bits: np.ndarray) -> int:
    """Pack a bit block into an integer (bit 0 -> least significant bit)."""
    bits = np.asarray(bits, dtype=np.uint64)
    return int((bits << np.arange(bits.size, dtype=np.uint64)).sum())


def unpack_bits(word: int, length: int) -> np.ndarray:
    """Inverse of :func:`pack_bits`."""
    return ((int(word) >> np.arange(length)) & 1).astype(np.uint8)


def row_reduce(m: np.ndarray) -> np.ndarray:
    """Reduced row echelon form over GF(2) (returns a new array)."""
    m = np.array(m, dtype=np.uint8)
    rows, cols = m.shape
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        hits = np.nonzero(m[pivot_row:, col])[0]
        if hits.size == 0:
            continue
        src = pivot_row + hits[0]
        if src != pivot_row:
            m[[pivot_row, src]] = m[[src, pivot_row]]
        # clear the column everywhere else
        others = np.nonzero(m[:, col])[0]
        others = others[others != pivot_row]
        m[others] ^= m[pivot_row]
        pivot_row += 1
    return m


def rank(m: np.ndarray) -> int:
    """Rank over GF(2)."""
    reduced = row_reduce(np.asarray(m, dtype=np.uint8))
    return int(np.count_nonzero(reduced.any(axis=1)))
