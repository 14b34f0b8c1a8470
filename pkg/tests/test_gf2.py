import numpy as np
import pytest

from pncsim import gf2
from pncsim.block_code import make_bch

from oracles import mat_vec_brute, span_size


def bits(s: str) -> np.ndarray:
    return np.array([int(c) for c in s], dtype=np.uint8)


class TestXor:
    def test_identity(self):
        assert np.array_equal(gf2.xor(bits("0000"), bits("0000")), bits("0000"))

    def test_bitwise_definition(self):
        assert np.array_equal(gf2.xor(bits("1010"), bits("0110")), bits("1100"))

    def test_self_inverse(self, rng):
        for _ in range(50):
            x = rng.integers(0, 2, size=15, dtype=np.uint8)
            assert not gf2.xor(x, x).any()

    def test_commutative_associative(self, rng):
        for _ in range(50):
            a, b, c = (rng.integers(0, 2, size=12, dtype=np.uint8) for _ in range(3))
            assert np.array_equal(gf2.xor(a, b), gf2.xor(b, a))
            assert np.array_equal(gf2.xor(gf2.xor(a, b), c), gf2.xor(a, gf2.xor(b, c)))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            gf2.xor(bits("101"), bits("10"))


class TestMatVecMul:
    def test_zero_vector(self, rng):
        m = rng.integers(0, 2, size=(15, 10), dtype=np.uint8)
        assert not gf2.mat_vec_mul(np.zeros(15, dtype=np.uint8), m).any()

    def test_unit_vectors_select_rows(self, rng):
        m = rng.integers(0, 2, size=(8, 5), dtype=np.uint8)
        for j in range(8):
            e = np.zeros(8, dtype=np.uint8)
            e[j] = 1
            assert np.array_equal(gf2.mat_vec_mul(e, m), m[j])

    def test_against_brute_force(self, rng):
        h_t = make_bch(15, 11).parity_check.T
        for _ in range(25):
            v = rng.integers(0, 2, size=15, dtype=np.uint8)
            assert np.array_equal(gf2.mat_vec_mul(v, h_t), mat_vec_brute(v, h_t))

    def test_associativity_with_mat_mul(self, rng):
        for _ in range(20):
            v = rng.integers(0, 2, size=6, dtype=np.uint8)
            a = rng.integers(0, 2, size=(6, 7), dtype=np.uint8)
            b = rng.integers(0, 2, size=(7, 4), dtype=np.uint8)
            left = gf2.mat_vec_mul(gf2.mat_vec_mul(v, a), b)
            right = gf2.mat_vec_mul(v, gf2.mat_mul(a, b))
            assert np.array_equal(left, right)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            gf2.mat_vec_mul(bits("101"), np.zeros((4, 2), dtype=np.uint8))


class TestHamming:
    def test_weight_basics(self):
        assert gf2.hamming_weight(bits("0" * 15)) == 0
        assert gf2.hamming_weight(bits("111" + "0" * 12)) == 3

    def test_distance_basics(self, rng):
        x = rng.integers(0, 2, size=9, dtype=np.uint8)
        assert gf2.hamming_distance(x, x) == 0
        assert gf2.hamming_distance(bits("000"), bits("111")) == 3

    def test_distance_is_weight_of_xor(self, rng):
        for _ in range(50):
            a = rng.integers(0, 2, size=15, dtype=np.uint8)
            b = rng.integers(0, 2, size=15, dtype=np.uint8)
            assert gf2.hamming_distance(a, b) == gf2.hamming_weight(gf2.xor(a, b))

    def test_triangle_inequality(self, rng):
        for _ in range(100):
            a, b, c = (rng.integers(0, 2, size=11, dtype=np.uint8) for _ in range(3))
            assert gf2.hamming_distance(a, c) <= (
                gf2.hamming_distance(a, b) + gf2.hamming_distance(b, c)
            )

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            gf2.hamming_distance(bits("10"), bits("100"))


class TestPacking:
    def test_round_trip(self, rng):
        for _ in range(30):
            v = rng.integers(0, 2, size=15, dtype=np.uint8)
            assert np.array_equal(gf2.unpack_bits(gf2.pack_bits(v), 15), v)

    def test_bit_zero_is_lsb(self):
        assert gf2.pack_bits(bits("100")) == 1
        assert gf2.pack_bits(bits("001")) == 4


class TestRank:
    def test_against_span_enumeration(self, rng):
        for _ in range(20):
            m = rng.integers(0, 2, size=(5, 8), dtype=np.uint8)
            assert 2 ** gf2.rank(m) == span_size(m)

    def test_identity(self):
        assert gf2.rank(np.eye(6, dtype=np.uint8)) == 6
