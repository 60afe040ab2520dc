"""Independent spectrum computation and multiset comparison.

Every construction in this package is cross-checked by computing the full
eigenvalue list of the assembled dense matrix and matching it, as a
multiset, against the intended spectrum.  The eigenvalue backend is
LAPACK's balanced Hessenberg + shifted QR solver via ``numpy.linalg``;
comparison uses an optimal bipartite assignment on pairwise distances.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from ._util import as_complex_vector, as_float_matrix
from .errors import EigensolveError

#: Largest matrix order accepted; this is a desk-scale verification tool.
MAX_ORDER = 64


def spectrum(matrix):
    """Eigenvalues (with multiplicity) of a real square matrix of order <= 64.

    Returned in descending order of real part, ties broken by descending
    imaginary part.  Raises :class:`EigensolveError` if the QR iteration
    fails to converge, which is reported rather than silently truncated.
    """
    matrix = as_float_matrix(matrix, "matrix")
    if matrix.shape[0] > MAX_ORDER:
        raise ValueError(f"matrix order {matrix.shape[0]} exceeds {MAX_ORDER}")
    try:
        values = np.linalg.eigvals(matrix)
    except np.linalg.LinAlgError as exc:
        raise EigensolveError(f"eigenvalue iteration failed: {exc}") from exc
    order = np.lexsort((values.imag, values.real))[::-1]
    return values[order]


@dataclass(frozen=True)
class SpectrumMatchReport:
    """Multiset comparison result.

    ``pairing[t] = (i, j)`` matches ``x[i]`` with ``y[j]``;
    ``max_pair_distance`` is the largest matched distance.
    """

    matched: bool
    max_pair_distance: float
    pairing: tuple

    def __bool__(self):
        return self.matched


def match_spectra(x, y, tol):
    """Optimally match two equal-length complex multisets.

    ``matched`` is true when every matched pair lies within ``tol``.  The
    assignment minimizes the total distance, which at the tolerances used
    here coincides with the intended multiset identification.
    """
    x = as_complex_vector(x, "x")
    y = as_complex_vector(y, "y")
    if x.size != y.size:
        raise ValueError(f"length mismatch: {x.size} vs {y.size}")
    dist = np.abs(x[:, None] - y[None, :])
    rows, cols = linear_sum_assignment(dist)
    max_dist = float(dist[rows, cols].max())
    pairing = tuple(zip(rows.tolist(), cols.tolist()))
    return SpectrumMatchReport(
        matched=max_dist <= tol, max_pair_distance=max_dist, pairing=pairing
    )
