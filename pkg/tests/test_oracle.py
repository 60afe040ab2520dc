import numpy as np
import pytest

import fixtures as fx
from niepkit.dft import circulant_eigenvalues, skew_eigenvalues
from niepkit.oracle import match_spectra, spectrum
from niepkit.structured import circulant, skew_circulant


class TestSpectrum:
    def test_circulant_fixture(self):
        vals = spectrum(circulant([5, 6, 3, 1]))
        report = match_spectra(vals, [15, 1, 2 + 5j, 2 - 5j], 1e-9 * 15)
        assert report.matched

    def test_seven_fixture(self):
        vals = spectrum(fx.SEVEN_MATRIX)
        assert match_spectra(vals, fx.SEVEN_SPECTRUM, 1e-8 * 15).matched

    def test_identity(self):
        np.testing.assert_allclose(spectrum(np.eye(3)), np.ones(3))

    def test_order_cap(self):
        with pytest.raises(ValueError):
            spectrum(np.eye(65))

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            spectrum([[np.nan, 0.0], [0.0, 1.0]])

    def test_eigenvalue_sum_matches_trace(self):
        rng = np.random.default_rng(21)
        for n in (2, 5, 9, 16):
            M = rng.normal(size=(n, n))
            vals = spectrum(M)
            assert abs(vals.sum() - np.trace(M)) <= 1e-9 * np.linalg.norm(M)

    def test_conjugate_closure(self):
        rng = np.random.default_rng(22)
        M = rng.normal(size=(7, 7))
        vals = spectrum(M)
        assert match_spectra(vals, vals.conjugate(), 1e-9 * np.linalg.norm(M)).matched

    def test_cross_validates_structured_spectra(self):
        rng = np.random.default_rng(23)
        for n in (2, 4, 9):
            row = rng.normal(size=n)
            tol = 1e-9 * np.sum(np.abs(row))
            assert match_spectra(
                spectrum(circulant(row)), circulant_eigenvalues(row), tol
            ).matched
            assert match_spectra(
                spectrum(skew_circulant(row)), skew_eigenvalues(row), tol
            ).matched


class TestMatchSpectra:
    def test_permuted_lists_match_exactly(self):
        x = np.array([1 + 1j, 2.0, -3 + 0.5j])
        report = match_spectra(x, x[::-1], 0.0)
        assert report.matched
        assert report.max_pair_distance == 0.0
        # pairing maps each entry to its equal partner
        for i, j in report.pairing:
            assert x[i] == x[::-1][j]

    def test_within_tolerance(self):
        assert match_spectra([1 + 1e-9j, 2], [1, 2], 1e-8).matched
        assert not match_spectra([1 + 1e-9j, 2], [1, 2], 1e-10).matched

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            match_spectra([1, 2], [1, 2, 3], 1e-8)

    def test_double_eigenvalues(self):
        M = spectrum(fx.EIGHT_MATRIX)
        assert match_spectra(M, fx.EIGHT_SPECTRUM, 1e-6).matched
