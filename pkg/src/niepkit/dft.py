"""Discrete Fourier machinery for circulant and skew circulant spectra.

Conventions
-----------
With ``w = exp(2*pi*i/n)`` and ``iota = w**(1/2) = exp(pi*i/n)``:

* ``F[p, q] = w**(p*q) / sqrt(n)`` is the unitary DFT matrix and satisfies
  ``F @ F = G_n`` (the orthogonal flip with leading 1).
* ``G = diag(1, iota, ..., iota**(n-1)) @ F``, i.e.
  ``G[p, q] = w**(p*(q + 1/2)) / sqrt(n)``, is unitary and satisfies
  ``G @ G.T = Xi_n`` (flip with leading 1 and negated reversal block).

The spectrum of the circulant matrix with first row ``s`` is
``lam_k = sum_j s_j * w**(k*j)`` and the circulant is ``F @ diag(lam) @ F.conj().T``.
The spectrum of the skew circulant with first row ``c`` is
``mu_k = sum_j c_j * w**((k + 1/2)*j)`` and the matrix is
``G @ diag(mu) @ G.conj().T``; equivalently ``mu = sqrt(n) * G.T @ c``.

The inverse maps recover first rows from index-ordered spectra:

* ``s_k = (1/n) * sum_j lam_j * w**(-k*j)``
* ``c_k = (1/n) * sum_j mu_j * w**(-k*(j + 1/2))``   (``= G.conj() @ mu / sqrt(n)``)

Note the half shift sits on the running index ``j`` in the skew inverse;
that is the unique placement that inverts the forward map above (checked by
the round-trip tests).

Evaluation is the naive O(n^2) sum with exponents reduced modulo a full
turn before calling ``exp``, which keeps angles exact at desk scale.
"""

from dataclasses import dataclass

import numpy as np

from ._util import as_complex_vector, as_float_vector, max_abs
from .errors import PairingError

_REALNESS_RTOL = 1e-10


@dataclass(frozen=True)
class RootOfUnity:
    """Primitive n-th root of unity ``omega`` and its square root ``iota``."""

    n: int
    omega: complex
    iota: complex


def root_of_unity(n):
    if n < 1:
        raise ValueError("order must be >= 1")
    omega = complex(np.exp(2j * np.pi / n))
    iota = complex(np.exp(1j * np.pi / n))
    assert abs(omega**n - 1.0) <= 1e-14
    assert abs(iota**2 - omega) <= 1e-14
    return RootOfUnity(n=n, omega=omega, iota=iota)


def _unit_powers(numerator, half_turns):
    """exp(i*pi*numerator/half_turns) with the numerator reduced mod 2*half_turns."""
    reduced = np.mod(numerator, 2 * half_turns)
    return np.exp(1j * np.pi * reduced / half_turns)


def dft_matrix(n):
    """Unitary DFT matrix F with F[p, q] = w**(p*q) / sqrt(n)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    idx = np.arange(n)
    return _unit_powers(2 * np.outer(idx, idx), n) / np.sqrt(n)


def skew_dft_matrix(n):
    """Unitary matrix G = diag(1, iota, ..., iota**(n-1)) @ F.

    G diagonalizes real skew circulant matrices and satisfies
    ``G @ G.T = Xi_n``.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    p = np.arange(n)[:, None]
    q = np.arange(n)[None, :]
    return _unit_powers(p * (2 * q + 1), n) / np.sqrt(n)


def circulant_eigenvalues(row):
    """Spectrum (lam_0, ..., lam_{n-1}) of the circulant with first row ``row``.

    lam_0 is the row sum and lam_{n-k} is the conjugate of lam_k.
    """
    row = as_float_vector(row, "row")
    n = row.size
    k = np.arange(n)
    return _unit_powers(2 * np.outer(k, k), n) @ row.astype(complex)


def skew_eigenvalues(row):
    """Spectrum (mu_0, ..., mu_{n-1}) of the skew circulant with first row ``row``.

    mu_{n-1-k} is the conjugate of mu_k.
    """
    row = as_float_vector(row, "row")
    n = row.size
    k = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return _unit_powers((2 * k + 1) * j, n) @ row.astype(complex)


def _real_part_checked(values, what):
    scale = max_abs(values)
    worst = max_abs(values.imag)
    if worst > _REALNESS_RTOL * scale:
        raise PairingError(
            f"{what}: recovered row is not real (residual imaginary part "
            f"{worst:.3e} exceeds {_REALNESS_RTOL:.0e} * {scale:.3e}); "
            "the input spectrum violates its conjugate-pairing layout"
        )
    return values.real.copy()


def circulant_row_from_spectrum(values):
    """First row of the real circulant whose index-ordered spectrum is ``values``.

    Requires the circulant pairing layout (lam_{n-k} = conj(lam_k), lam_0
    real); raises :class:`PairingError` otherwise.
    """
    values = as_complex_vector(values, "spectrum")
    n = values.size
    k = np.arange(n)
    row = _unit_powers(-2 * np.outer(k, k), n) @ values / n
    return _real_part_checked(row, "circulant row recovery")


def skew_row_from_spectrum(values):
    """First row of the real skew circulant whose spectrum is ``values``.

    Requires the skew pairing layout (mu_{n-1-k} = conj(mu_k)); raises
    :class:`PairingError` otherwise.
    """
    values = as_complex_vector(values, "spectrum")
    n = values.size
    k = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    row = _unit_powers(-k * (2 * j + 1), n) @ values / n
    return _real_part_checked(row, "skew row recovery")
