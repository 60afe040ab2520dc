"""Dense materialization and recognition of the structured matrix classes."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._util import as_float_matrix, as_float_vector, max_abs

_PERMUTATIVE_RTOL = 1e-9


def _shift_table(n):
    # entry (i, j) reads first-row position (j - i) mod n
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return (j - i) % n


def circulant(row):
    """Dense circulant matrix: each row is the right cyclic shift of the one above."""
    row = as_float_vector(row, "row")
    return row[_shift_table(row.size)]


def skew_circulant(row):
    """Dense skew circulant matrix: wrapped entries below the diagonal flip sign."""
    row = as_float_vector(row, "row")
    n = row.size
    out = row[_shift_table(n)]
    lower = np.tril(np.ones((n, n), dtype=bool), k=-1)
    out[lower] = -out[lower]
    return out


@dataclass(frozen=True)
class AbsCirculant:
    """Entrywise-signed circulant: |matrix| is circulant with first row
    ``magnitudes`` and ``signs`` carries the per-entry sign choice.

    Valid instances have nonnegative magnitudes, signs in {+1, -1} and a
    constant sign along the diagonal (immaterial when the diagonal
    magnitude is zero).
    """

    magnitudes: tuple
    signs: tuple

    @staticmethod
    def from_arrays(magnitudes, signs):
        magnitudes = as_float_vector(magnitudes, "magnitudes")
        signs = as_float_matrix(signs, "signs")
        return AbsCirculant(
            magnitudes=tuple(magnitudes.tolist()),
            signs=tuple(map(tuple, signs.tolist())),
        )


def abs_circulant(ac):
    """Materialize an :class:`AbsCirculant`, validating its invariants."""
    mags = as_float_vector(ac.magnitudes, "magnitudes")
    signs = as_float_matrix(np.asarray(ac.signs, dtype=float), "signs")
    n = mags.size
    if signs.shape != (n, n):
        raise ValueError(f"signs must be {n}x{n}, got {signs.shape}")
    if np.any(mags < 0):
        raise ValueError("magnitudes must be nonnegative")
    if not np.all(np.abs(signs) == 1.0):
        raise ValueError("signs must be +1 or -1")
    if mags[0] != 0.0:
        diag = np.diag(signs)
        if not (np.all(diag == 1.0) or np.all(diag == -1.0)):
            raise ValueError("diagonal signs must be constant")
    out = signs * mags[_shift_table(n)]
    return out + 0.0  # normalize -0.0 produced by sign * 0


@dataclass(frozen=True)
class PermutativityReport:
    """Outcome of :func:`is_permutative` with one witness permutation per row.

    ``row_permutations[i]`` is a tuple ``p`` with ``M[i, k] == M[0, p[k]]``
    for every k (within tolerance); ``None`` when not permutative.
    """

    permutative: bool
    row_permutations: Optional[tuple]

    def __bool__(self):
        return self.permutative


def is_permutative(matrix, tol=None):
    """Check whether every row of a square matrix rearranges its first row."""
    matrix = as_float_matrix(matrix, "matrix")
    n = matrix.shape[0]
    if tol is None:
        tol = _PERMUTATIVE_RTOL * max_abs(matrix)
    base = matrix[0]
    base_order = np.argsort(base, kind="stable")
    witnesses = []
    for i in range(n):
        row_order = np.argsort(matrix[i], kind="stable")
        if np.max(np.abs(matrix[i][row_order] - base[base_order])) > tol:
            return PermutativityReport(False, None)
        perm = np.empty(n, dtype=int)
        perm[row_order] = base_order
        witnesses.append(tuple(perm.tolist()))
    return PermutativityReport(True, tuple(witnesses))
