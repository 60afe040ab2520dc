"""End-to-end spectrum realizations.

* :func:`realize_four` builds the closed-form 4x4 permutative matrix for a
  list of two reals plus a conjugate pair.
* :func:`region_check` / :func:`realize_region` handle the normalized
  family {1, r, a+ib, a-ib} with Perron root 1.
* :func:`check_conditions` searches the pairing-preserving reorderings of a
  circulant/skew spectrum pair for first rows certifying that the union is
  realizable by a block build.
* :func:`brauer_augment` realizes {rho, tail} union (+/-gamma) * upsilon by
  shifting the Perron root of a circulant with the rank-one all-ones update
  (Brauer's theorem) and bordering with a skew circulant.
* :func:`build_abscirc_combination` pairs a circulant with an entrywise
  signed circulant.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._util import as_complex_vector, as_float_vector, max_abs
from .blocks import BlockBuildSpec, build_circ_skew, build_even, build_odd
from .dft import circulant_row_from_spectrum, skew_row_from_spectrum
from .errors import PairingError, RealizabilityError
from .spectra import (
    DEFAULT_ENUMERATION_CAP,
    PairingPermutation,
    enumerate_circulant_permutations,
    enumerate_skew_permutations,
    satisfies_circulant_pairing,
    satisfies_skew_pairing,
)
from .structured import abs_circulant, circulant, skew_circulant

_COND_RTOL = 1e-12


def _canonical_four(values):
    """Order a 4-list as (real max, real min, upper conjugate, lower conjugate).

    For all-real input a repeated value must serve as the conjugate pair;
    candidates are tried from the largest repeated value down and the first
    assignment meeting the entry conditions wins.
    """
    v = as_complex_vector(values, "spectrum")
    if v.size != 4:
        raise ValueError("realize_four needs exactly 4 values")
    tol = _COND_RTOL * max(max_abs(v), 1.0)
    nonreal = [z for z in v if abs(z.imag) > tol]
    reals = sorted((z.real for z in v if abs(z.imag) <= tol), reverse=True)

    if len(nonreal) == 2:
        z, w = nonreal
        if abs(z - w.conjugate()) > tol:
            raise PairingError("the two nonreal entries are not a conjugate pair")
        lam3 = z if z.imag >= 0 else w
        return [(reals[0], reals[1], lam3)]
    if len(nonreal) == 0:
        candidates = []
        for i in range(4):
            for j in range(i + 1, 4):
                if abs(reals[i] - reals[j]) <= tol:
                    rest = [reals[t] for t in range(4) if t not in (i, j)]
                    candidates.append((rest[0], rest[1], complex(reals[i])))
        if not candidates:
            raise PairingError(
                "an all-real 4-list needs a repeated value to act as the "
                "conjugate pair"
            )
        # deterministic preference: larger pair value first
        seen, ordered = set(), []
        for cand in sorted(candidates, key=lambda c: -c[2].real):
            if cand not in seen:
                seen.add(cand)
                ordered.append(cand)
        return ordered
    raise PairingError("spectrum is not closed under conjugation")


def _four_conditions(lam1, lam2, lam3, tol):
    checks = [
        ("sum(spectrum) >= 0", lam1 + lam2 + 2 * lam3.real),
        ("lam1 + lam2 >= 2*Re(lam3)", lam1 + lam2 - 2 * lam3.real),
        ("lam1 - lam2 >= 2*|Im(lam3)|", lam1 - lam2 - 2 * abs(lam3.imag)),
    ]
    for name, margin in checks:
        if margin < -tol:
            return name
    return None


def realize_four(values):
    """4x4 nonnegative permutative matrix realizing {lam1, lam2, lam3, conj(lam3)}.

    Requires lam1, lam2 real with sum(spectrum) >= 0,
    lam1 + lam2 >= 2*Re(lam3) and lam1 - lam2 >= 2*|Im(lam3)|; raises
    :class:`RealizabilityError` naming the first violated inequality.
    """
    v = as_complex_vector(values, "spectrum")
    tol = _COND_RTOL * max(max_abs(v), 1.0)
    failed = None
    for lam1, lam2, lam3 in _canonical_four(values):
        name = _four_conditions(lam1, lam2, lam3, tol)
        if name is None:
            break
        if failed is None:
            failed = name
    else:
        raise RealizabilityError(f"condition violated: {failed}")
    a = (lam1 + lam2 + 2 * lam3.real) / 4.0
    b = (lam1 + lam2 - 2 * lam3.real) / 4.0
    c = (lam1 - lam2 + 2 * lam3.imag) / 4.0
    d = (lam1 - lam2 - 2 * lam3.imag) / 4.0
    M = np.array(
        [
            [a, b, c, d],
            [b, a, d, c],
            [d, c, a, b],
            [c, d, b, a],
        ]
    )
    return np.clip(M, 0.0, None)


@dataclass(frozen=True)
class RegionPoint:
    """Parameters of the normalized 4-list {1, r, a+ib, a-ib}, 0 <= r <= 1."""

    r: float
    a: float
    b: float

    def __post_init__(self):
        if not 0.0 <= self.r <= 1.0:
            raise ValueError(f"r must lie in [0, 1], got {self.r}")

    @property
    def spectrum(self):
        return np.array(
            [1.0, self.r, complex(self.a, self.b), complex(self.a, -self.b)]
        )


def region_check(point):
    """True when |a| <= (1+r)/2 and |b| <= (1-r)/2, i.e. the closed-form
    realizing matrix for {1, r, a+ib, a-ib} is entrywise nonnegative."""
    return (
        abs(point.a) <= (1.0 + point.r) / 2.0
        and abs(point.b) <= (1.0 - point.r) / 2.0
    )


def realize_region(point):
    """4x4 nonnegative permutative matrix with spectrum {1, r, a+ib, a-ib}."""
    if not region_check(point):
        raise RealizabilityError(
            f"point (r={point.r}, a={point.a}, b={point.b}) violates "
            "|a| <= (1+r)/2 and |b| <= (1-r)/2"
        )
    r, a, b = point.r, point.a, point.b
    pa = (1.0 + r + 2.0 * a) / 4.0
    pb = (1.0 + r - 2.0 * a) / 4.0
    pc = (1.0 - r + 2.0 * b) / 4.0
    pd = (1.0 - r - 2.0 * b) / 4.0
    M = np.array(
        [
            [pa, pb, pc, pd],
            [pb, pa, pd, pc],
            [pd, pc, pa, pb],
            [pc, pd, pb, pa],
        ]
    )
    return np.clip(M, 0.0, None)


def in_gamma_region(z):
    """Membership in {z : Re(z) <= 0 and |Im(z)| <= |Re(z)|}."""
    z = complex(z)
    return z.real <= 0.0 and abs(z.imag) <= abs(z.real)


@dataclass(frozen=True)
class SpectrumPair:
    """A circulant-layout list, a skew-layout list and a scaling gamma.

    ``circulant_part`` has length n (paired with an even block build) or
    n+1 (odd build); ``skew_part`` has length n.  Both must already be in
    their pairing layouts in index order.
    """

    circulant_part: tuple
    skew_part: tuple
    gamma: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma}")

    def arrays(self):
        lam = as_complex_vector(self.circulant_part, "circulant part")
        ups = as_complex_vector(self.skew_part, "skew part")
        if lam.size not in (ups.size, ups.size + 1):
            raise ValueError(
                "circulant part must have the same length as the skew part "
                f"or one more, got {lam.size} vs {ups.size}"
            )
        if not satisfies_circulant_pairing(lam):
            raise PairingError("circulant part violates its pairing layout")
        if not satisfies_skew_pairing(ups):
            raise PairingError("skew part violates its pairing layout")
        return lam, ups


@dataclass(frozen=True)
class ConditionWitness:
    """A satisfying reordering pair and the rows it recovers.

    ``margins[k] = s_k - |c_k|`` positionally on the first rows (the skew
    row is zero padded when the circulant part is one entry longer).
    """

    alpha: PairingPermutation
    beta: PairingPermutation
    circulant_row: tuple
    skew_row: tuple
    margins: tuple


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of :func:`check_conditions`.

    ``bound_value`` is the smallest admissible head value for the circulant
    part alone (see :func:`circulant_head_bound`); in formula mode
    ``satisfied`` compares the head against it, in constructive mode
    ``satisfied`` certifies an explicit witness build.
    """

    satisfied: bool
    mode: str
    bound_value: float
    witness: Optional[ConditionWitness]

    def __bool__(self):
        return self.satisfied


def circulant_head_bound(values, cap=DEFAULT_ENUMERATION_CAP):
    """Least head value that leaves some reordering's recovered row nonnegative.

    Evaluated as a minimum over pairing-preserving reorderings of the
    largest negated cosine/sine load

        -2 * sum_j [Re(v_j) cos(2*pi*k*j/n) + Im(v_j) sin(2*pi*k*j/n)]

    over k = 0..n-1 (with the extra alternating real term at j = n/2 for
    even n).  The list is circulant-realizable with head lam_0 iff
    lam_0 >= bound; this trigonometric route is independent of the complex
    inverse-DFT used by the constructive checker.
    """
    v = as_complex_vector(values, "spectrum")
    n = v.size
    if n == 1:
        return 0.0
    perms = enumerate_circulant_permutations(v, cap=cap)
    if not perms:
        raise PairingError("list does not admit any circulant-layout ordering")
    k = np.arange(n)
    best = np.inf
    for perm in perms:
        nu = v[list(perm.mapping)]
        if n % 2 == 1:
            j = np.arange(1, (n - 1) // 2 + 1)
            extra = np.zeros(n)
        else:
            j = np.arange(1, n // 2)
            extra = -((-1.0) ** k) * nu[n // 2].real
        ang = 2.0 * np.pi * np.outer(k, j) / n
        load = -2.0 * (np.cos(ang) @ nu[j].real + np.sin(ang) @ nu[j].imag) + extra
        best = min(best, float(load.max()))
    return best


def _row_candidates(values, kind, cap):
    if kind == "circulant":
        perms = enumerate_circulant_permutations(values, cap=cap)
        recover = circulant_row_from_spectrum
    else:
        perms = enumerate_skew_permutations(values, cap=cap)
        recover = skew_row_from_spectrum
    return [(perm, recover(values[list(perm.mapping)])) for perm in perms]


def check_conditions(pair, mode="constructive", cap=DEFAULT_ENUMERATION_CAP):
    """Sufficient-condition check for realizing Lambda union (+/-gamma)*Upsilon.

    Constructive mode (the authoritative one) searches reordering pairs in
    lexicographic order for recovered first rows with ``s`` nonnegative and
    the skew row dominated entrywise by the circulant body; the first
    witness found feeds :func:`niepkit.blocks.build_circ_skew` (equal
    lengths) or :func:`niepkit.blocks.build_odd` (circulant part longer by
    one).  Formula mode only compares the head of the circulant part
    against :func:`circulant_head_bound` and reports no witness.
    """
    if mode not in ("constructive", "formula"):
        raise ValueError(f"mode must be 'constructive' or 'formula', got {mode!r}")
    lam, ups = pair.arrays()
    bound = circulant_head_bound(lam, cap=cap)
    scale = max(max_abs(lam), max_abs(ups), 1.0)
    slack = _COND_RTOL * scale

    if mode == "formula":
        satisfied = bool(lam[0].real >= bound - slack)
        return ConditionReport(satisfied, "formula", bound, None)

    odd = lam.size == ups.size + 1
    s_candidates = _row_candidates(lam, "circulant", cap)
    c_candidates = _row_candidates(ups, "skew", cap)
    for alpha, s_row in s_candidates:
        if np.any(s_row < -slack):
            continue
        S = circulant(np.clip(s_row, 0.0, None)) if odd else None
        for beta, c_row in c_candidates:
            if odd:
                n = c_row.size
                ok = np.all(np.abs(skew_circulant(c_row)) <= S[:n, :n] + slack)
                padded = np.concatenate([np.abs(c_row), [0.0]])
                margins = s_row - padded
            else:
                margins = s_row - np.abs(c_row)
                ok = np.all(margins >= -slack)
            if ok:
                witness = ConditionWitness(
                    alpha=alpha,
                    beta=beta,
                    circulant_row=tuple(s_row.tolist()),
                    skew_row=tuple(c_row.tolist()),
                    margins=tuple(np.asarray(margins, dtype=float).tolist()),
                )
                return ConditionReport(True, "constructive", bound, witness)
    return ConditionReport(False, "constructive", bound, None)


def build_from_witness(pair, witness, spec=None):
    """Assemble the block matrix certified by a :class:`ConditionWitness`."""
    lam, ups = pair.arrays()
    if spec is None:
        spec = BlockBuildSpec(gamma=pair.gamma)
    s_row = np.clip(np.asarray(witness.circulant_row, dtype=float), 0.0, None)
    c_row = np.asarray(witness.skew_row, dtype=float)
    if lam.size == ups.size:
        return build_circ_skew(s_row, c_row, spec)
    return build_odd(circulant(s_row), c_row, spec)


def skew_row_bound(upsilon, cap=DEFAULT_ENUMERATION_CAP):
    """Largest first-row magnitude over all skew circulants realizing ``upsilon``.

    This is the rank-one shift size used by :func:`brauer_augment`; every
    admissible skew row is dominated entrywise by it.
    """
    ups = as_complex_vector(upsilon, "skew spectrum")
    rows = _row_candidates(ups, "skew", cap)
    if not rows:
        raise PairingError("list does not admit any skew-layout ordering")
    return max(max_abs(row) for _, row in rows)


@dataclass(frozen=True)
class BrauerPlan:
    """Ingredients of a Brauer-augmented bordered build.

    ``circulant_row`` generates the shifted circulant R with spectrum
    {rho} union tail; ``skew_row`` realizes upsilon with all magnitudes at
    most ``chi``; ``base_row`` is the pre-shift row of B.
    """

    chi: float
    base_row: tuple
    circulant_row: tuple
    skew_row: tuple
    alpha: PairingPermutation
    beta: PairingPermutation


def brauer_plan(upsilon, tail, rho, cap=DEFAULT_ENUMERATION_CAP):
    """Plan the augmentation realizing {rho} union tail union (+/-gamma)*upsilon.

    Steps: chi is :func:`skew_row_bound` of upsilon; the skew row is the
    candidate minimizing its largest magnitude (ties to the
    lexicographically first reordering); a nonnegative circulant B with
    spectrum {rho - (n+1)*chi} union tail is searched over circulant-layout
    reorderings; the all-ones rank-one update B + chi * ones shifts the
    Perron root to rho while keeping the rest (Brauer), and stays circulant.
    """
    ups = as_complex_vector(upsilon, "skew spectrum")
    tail = as_complex_vector(tail, "tail") if len(tail) else np.zeros(0, complex)
    n = ups.size
    if tail.size != n:
        raise ValueError(f"tail must have length {n}, got {tail.size}")
    rho = float(rho)

    candidates = _row_candidates(ups, "skew", cap)
    if not candidates:
        raise PairingError("upsilon does not admit any skew-layout ordering")
    chi = max(max_abs(row) for _, row in candidates)
    beta, c_row = min(candidates, key=lambda item: max_abs(item[1]))

    head = rho - (n + 1) * chi
    shifted = np.concatenate([[complex(head)], tail])
    slack = _COND_RTOL * max(max_abs(shifted), 1.0)
    for alpha in enumerate_circulant_permutations(shifted, cap=cap):
        b_row = circulant_row_from_spectrum(shifted[list(alpha.mapping)])
        if np.all(b_row >= -slack):
            b_row = np.clip(b_row, 0.0, None)
            break
    else:
        raise RealizabilityError(
            f"no nonnegative circulant realizes the shifted list with head "
            f"rho - (n+1)*chi = {head:.6g}; increase rho (chi = {chi:.6g})"
        )
    r_row = b_row + chi
    # guaranteed by construction: every entry of R dominates every |c_k|
    assert np.min(r_row) >= chi - slack >= max_abs(c_row) - slack
    return BrauerPlan(
        chi=chi,
        base_row=tuple(b_row.tolist()),
        circulant_row=tuple(r_row.tolist()),
        skew_row=tuple(np.asarray(c_row).tolist()),
        alpha=alpha,
        beta=beta,
    )


def brauer_augment(upsilon, tail, rho, gamma=1.0, sign=1, cap=DEFAULT_ENUMERATION_CAP):
    """Order-(2n+1) nonnegative matrix with spectrum
    {rho} union tail union (sign*gamma)*upsilon.

    The last row splits each entry of R into ``(r + g*c)/2, (r - g*c)/2``,
    which keeps the output permutative whenever R is flat (the all-zero
    tail case, where R = circ(rho/(n+1), ...)).
    """
    plan = brauer_plan(upsilon, tail, rho, cap=cap)
    R = circulant(np.asarray(plan.circulant_row))
    c_row = np.asarray(plan.skew_row)
    g = sign * gamma
    n = c_row.size
    last = R[n, :n]
    split = np.column_stack([(last + g * c_row) / 2.0, (last - g * c_row) / 2.0])
    spec = BlockBuildSpec(gamma=gamma, sign=sign, last_row_split=tuple(map(tuple, split)))
    return build_odd(R, c_row, spec)


def build_abscirc_combination(s_row, ac, spec=BlockBuildSpec()):
    """Nonnegative permutative block build of a circulant with an entrywise
    signed circulant; requires the magnitudes to be dominated by ``s_row``."""
    s_row = as_float_vector(s_row, "s_row")
    C = abs_circulant(ac)
    if C.shape[0] != s_row.size:
        raise ValueError("s_row length must match the signed circulant order")
    return build_even(circulant(s_row), C, spec)
