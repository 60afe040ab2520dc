import numpy as np
import pytest

import fixtures as fx
from niepkit.structured import (
    AbsCirculant,
    abs_circulant,
    circulant,
    is_permutative,
    skew_circulant,
)


class TestCirculant:
    def test_fixture_2402(self):
        expected = np.array(
            [[2, 4, 0, 2], [2, 2, 4, 0], [0, 2, 2, 4], [4, 0, 2, 2]], dtype=float
        )
        assert np.array_equal(circulant([2, 4, 0, 2]), expected)

    def test_fixture_5631(self):
        expected = np.array(
            [[5, 6, 3, 1], [1, 5, 6, 3], [3, 1, 5, 6], [6, 3, 1, 5]], dtype=float
        )
        assert np.array_equal(circulant([5, 6, 3, 1]), expected)

    def test_order_one(self):
        assert np.array_equal(circulant([3.5]), np.array([[3.5]]))

    def test_rows_are_right_shifts(self):
        rng = np.random.default_rng(0)
        M = circulant(rng.normal(size=7))
        for i in range(1, 7):
            assert np.array_equal(M[i], np.roll(M[i - 1], 1))


class TestSkewCirculant:
    def test_fixture_m1101(self):
        expected = np.array(
            [[-1, 1, 0, 1], [-1, -1, 1, 0], [0, -1, -1, 1], [-1, 0, -1, -1]],
            dtype=float,
        )
        assert np.array_equal(skew_circulant([-1, 1, 0, 1]), expected)

    def test_fixture_4m21(self):
        expected = np.array([[4, -2, 1], [-1, 4, -2], [2, -1, 4]], dtype=float)
        assert np.array_equal(skew_circulant([4, -2, 1]), expected)

    def test_order_one(self):
        assert np.array_equal(skew_circulant([-2.0]), np.array([[-2.0]]))

    def test_wrap_entries_negate(self):
        rng = np.random.default_rng(1)
        row = rng.normal(size=6)
        M = skew_circulant(row)
        for i in range(6):
            for j in range(6):
                expected = row[j - i] if j >= i else -row[6 - i + j]
                assert M[i, j] == expected

    def test_abs_is_circulant(self):
        rng = np.random.default_rng(2)
        row = rng.normal(size=5)
        assert np.array_equal(np.abs(skew_circulant(row)), circulant(np.abs(row)))


class TestAbsCirculant:
    def test_fixture(self):
        ac = AbsCirculant.from_arrays(fx.ABSCIRC_MAGNITUDES, fx.ABSCIRC_SIGNS)
        assert np.array_equal(abs_circulant(ac), fx.ABSCIRC_MATRIX)

    def test_all_plus_is_circulant(self):
        ac = AbsCirculant.from_arrays([1, 2, 3], np.ones((3, 3)))
        assert np.array_equal(abs_circulant(ac), circulant([1, 2, 3]))

    def test_skew_sign_pattern_matches_skew(self):
        row = np.array([0.5, 2.0, 1.0, 3.0])
        signs = np.where(np.tri(4, k=-1, dtype=bool), -1.0, 1.0)
        ac = AbsCirculant.from_arrays(row, signs)
        assert np.array_equal(abs_circulant(ac), skew_circulant(row))

    def test_abs_recovers_magnitude_circulant(self):
        ac = AbsCirculant.from_arrays(fx.ABSCIRC_MAGNITUDES, fx.ABSCIRC_SIGNS)
        assert np.array_equal(
            np.abs(abs_circulant(ac)), circulant(fx.ABSCIRC_MAGNITUDES)
        )

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            abs_circulant(AbsCirculant.from_arrays([-1, 2], np.ones((2, 2))))
        with pytest.raises(ValueError):
            abs_circulant(AbsCirculant.from_arrays([1, 2], np.zeros((2, 2))))
        bad_diag = np.array([[1.0, 1.0], [1.0, -1.0]])
        with pytest.raises(ValueError):
            abs_circulant(AbsCirculant.from_arrays([1, 2], bad_diag))

    def test_zero_diagonal_magnitude_relaxes_sign(self):
        signs = np.array([[1.0, 1.0], [1.0, -1.0]])
        M = abs_circulant(AbsCirculant.from_arrays([0.0, 2.0], signs))
        assert np.array_equal(M, np.array([[0.0, 2.0], [2.0, 0.0]]))


class TestIsPermutative:
    def test_known_permutative_fixture(self):
        report = is_permutative(fx.FOUR_A_MATRIX)
        assert report
        for i, perm in enumerate(report.row_permutations):
            for k in range(4):
                assert fx.FOUR_A_MATRIX[i, k] == fx.FOUR_A_MATRIX[0, perm[k]]

    def test_identity(self):
        assert is_permutative(np.eye(4)).permutative

    def test_non_permutative(self):
        report = is_permutative([[1.0, 2.0], [3.0, 4.0]])
        assert not report
        assert report.row_permutations is None

    def test_tolerates_roundoff(self):
        M = fx.EIGHT_MATRIX.copy()
        M[3, 0] += 1e-13
        assert is_permutative(M).permutative
