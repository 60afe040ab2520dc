"""Conjugate-pairing structure of candidate spectra.

A length-n list is *circulant compatible* when it can be reordered so that
position 0 holds a real number and position n-k holds the conjugate of
position k for k = 1..n-1; real circulant matrices have exactly such
spectra.  It is *skew compatible* when a reordering satisfies the mirrored
layout in which position n-1-k holds the conjugate of position k for every
k; real skew circulant matrices have exactly such spectra.

This module classifies lists against both layouts and enumerates every
pairing-preserving permutation (the search space used by the sufficient
condition checker in :mod:`niepkit.realize`).

All functions are pure and deterministic; enumeration order is the
lexicographic order of the permutation image tuples.
"""

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._util import as_complex_vector, max_abs
from .errors import EnumerationCapError

#: Default size cap for exhaustive enumeration; the candidate sets grow
#: factorially with n.
DEFAULT_ENUMERATION_CAP = 10

_PAIR_RTOL = 1e-12


@dataclass(frozen=True)
class PairingPermutation:
    """A permutation whose reordering preserves a conjugate-pairing layout.

    ``mapping`` is the image tuple: position k of the reordered list holds
    entry ``mapping[k]`` of the original.  ``kind`` is ``"circulant"``
    (fixes 0) or ``"skew"``.
    """

    mapping: tuple
    kind: str

    def apply(self, entries):
        entries = as_complex_vector(entries)
        return entries[list(self.mapping)]


@dataclass(frozen=True)
class PairingReport:
    """Result of :func:`classify_pairing`.

    Witness tuples give one ordering (as original indices) realizing each
    layout, or ``None`` when the layout is unattainable.
    ``conjugate_pairs`` maps each index to a partner carrying its conjugate
    (reals may map to themselves); ``None`` when the list is not closed
    under conjugation.
    """

    is_circulant_compatible: bool
    is_skew_compatible: bool
    circulant_witness: Optional[tuple]
    skew_witness: Optional[tuple]
    conjugate_pairs: Optional[dict]


def pairing_tolerance(entries):
    """Matching tolerance: zero for all-zero input, else 1e-12 * max modulus."""
    return _PAIR_RTOL * max_abs(np.asarray(entries, dtype=complex))


def satisfies_circulant_pairing(entries, order=None, tol=None):
    """True when ``entries`` (optionally reordered) has the circulant layout."""
    entries = as_complex_vector(entries)
    if order is not None:
        entries = entries[list(order)]
    if tol is None:
        tol = pairing_tolerance(entries)
    n = entries.size
    if abs(entries[0].imag) > tol:
        return False
    for k in range(1, n):
        if abs(entries[n - k] - entries[k].conjugate()) > tol:
            return False
    return True


def satisfies_skew_pairing(entries, order=None, tol=None):
    """True when ``entries`` (optionally reordered) has the skew layout."""
    entries = as_complex_vector(entries)
    if order is not None:
        entries = entries[list(order)]
    if tol is None:
        tol = pairing_tolerance(entries)
    n = entries.size
    for k in range(n):
        if abs(entries[n - 1 - k] - entries[k].conjugate()) > tol:
            return False
    return True


def _match_conjugates(entries, tol):
    """Pair every nonreal entry with an unmatched conjugate partner.

    Returns (pairs, partner_map) where pairs lists (i, j) with
    entries[j] == conj(entries[i]) and Im entries[i] > 0, or None when the
    list is not conjugate closed.  Real entries map to themselves.
    """
    n = entries.size
    partner = {}
    pairs = []
    used = set()
    for i in range(n):
        if abs(entries[i].imag) <= tol:
            partner[i] = i
    for i in range(n):
        if i in partner or i in used:
            continue
        if entries[i].imag < 0:
            continue
        target = entries[i].conjugate()
        mate = None
        for j in range(n):
            if j == i or j in partner or j in used:
                continue
            if abs(entries[j] - target) <= tol:
                mate = j
                break
        if mate is None:
            return None, None
        used.add(i)
        used.add(mate)
        partner[i] = mate
        partner[mate] = i
        pairs.append((i, mate))
    if len(partner) != n:
        return None, None
    return pairs, partner


def _group_reals(entries, real_indices, tol):
    """Group real entry indices into runs of equal value (within tol)."""
    order = sorted(real_indices, key=lambda i: entries[i].real)
    groups = []
    for i in order:
        if groups and abs(entries[groups[-1][-1]].real - entries[i].real) <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    groups.sort(key=lambda g: -entries[g[0]].real)
    return groups


def classify_pairing(entries):
    """Classify a list against the circulant and skew pairing layouts."""
    entries = as_complex_vector(entries)
    n = entries.size
    tol = pairing_tolerance(entries)

    nonreal_pairs, partner = _match_conjugates(entries, tol)
    if nonreal_pairs is None:
        return PairingReport(False, False, None, None, None)

    real_indices = [i for i in range(n) if abs(entries[i].imag) <= tol]
    groups = _group_reals(entries, real_indices, tol)
    odd_groups = [g for g in groups if len(g) % 2 == 1]

    # Deterministic pair ordering: nonreal pairs by descending (Re, Im) of
    # the upper-half representative, then equal-real pairs by descending value.
    def pair_stream(exclude):
        ordered = sorted(
            nonreal_pairs,
            key=lambda p: (-entries[p[0]].real, -abs(entries[p[0]].imag)),
        )
        for i, j in ordered:
            yield i, j
        for g in groups:
            left = [i for i in g if i not in exclude]
            for t in range(0, len(left) - 1, 2):
                yield left[t], left[t + 1]

    circulant_witness = None
    if n % 2 == 1:
        if len(odd_groups) == 1:
            head = odd_groups[0][0]
            witness = [None] * n
            witness[0] = head
            for t, (i, j) in enumerate(pair_stream({head})):
                witness[1 + t] = i
                witness[n - 1 - t] = j
            circulant_witness = tuple(witness)
    else:
        head = mid = None
        if len(odd_groups) == 2:
            head, mid = odd_groups[0][0], odd_groups[1][0]
        elif len(odd_groups) == 0 and groups:
            big = max(groups, key=lambda g: (len(g) >= 2, entries[g[0]].real))
            if len(big) >= 2:
                head, mid = big[0], big[1]
        if head is not None:
            witness = [None] * n
            witness[0] = head
            witness[n // 2] = mid
            for t, (i, j) in enumerate(pair_stream({head, mid})):
                witness[1 + t] = i
                witness[n - 1 - t] = j
            circulant_witness = tuple(witness)

    skew_witness = None
    want_odd = 1 if n % 2 == 1 else 0
    if len(odd_groups) == want_odd:
        witness = [None] * n
        exclude = set()
        if n % 2 == 1:
            witness[(n - 1) // 2] = odd_groups[0][0]
            exclude = {odd_groups[0][0]}
        for t, (i, j) in enumerate(pair_stream(exclude)):
            witness[t] = i
            witness[n - 1 - t] = j
        skew_witness = tuple(witness)

    # The deterministic fill can only fail if parity bookkeeping was wrong,
    # so re-check rather than trust it.
    if circulant_witness is not None and not satisfies_circulant_pairing(
        entries, circulant_witness, tol
    ):
        circulant_witness = None
    if skew_witness is not None and not satisfies_skew_pairing(
        entries, skew_witness, tol
    ):
        skew_witness = None

    return PairingReport(
        is_circulant_compatible=circulant_witness is not None,
        is_skew_compatible=skew_witness is not None,
        circulant_witness=circulant_witness,
        skew_witness=skew_witness,
        conjugate_pairs=partner,
    )


def _enumerate(entries, kind, limit, cap, dedup):
    entries = as_complex_vector(entries)
    n = entries.size
    if limit is not None and limit < 0:
        raise ValueError("limit must be nonnegative")
    if n > cap and limit is None:
        raise EnumerationCapError(
            f"exhaustive enumeration requested for n={n} above cap {cap}; "
            "pass a larger cap explicitly to override"
        )
    tol = pairing_tolerance(entries)
    if kind == "circulant":
        candidates = ((0,) + tail for tail in itertools.permutations(range(1, n)))
        check = satisfies_circulant_pairing
    else:
        candidates = itertools.permutations(range(n))
        check = satisfies_skew_pairing
    out = []
    seen = set()
    for perm in candidates:
        if limit is not None and len(out) >= limit:
            break
        if not check(entries, perm, tol):
            continue
        if dedup:
            key = tuple(complex(entries[i]) for i in perm)
            if key in seen:
                continue
            seen.add(key)
        out.append(PairingPermutation(tuple(perm), kind))
    return out


def enumerate_circulant_permutations(
    entries, limit=None, cap=DEFAULT_ENUMERATION_CAP, dedup=True
):
    """All permutations fixing 0 whose reordering keeps the circulant layout.

    Results come in lexicographic order of the image tuple, truncated at
    ``limit`` when given.  With ``dedup`` (the default), permutations whose
    reordered lists coincide are collapsed to the lexicographically first.
    Raises :class:`EnumerationCapError` for unlimited enumeration above
    ``cap``.
    """
    return _enumerate(entries, "circulant", limit, cap, dedup)


def enumerate_skew_permutations(
    entries, limit=None, cap=DEFAULT_ENUMERATION_CAP, dedup=True
):
    """All permutations whose reordering keeps the skew pairing layout."""
    return _enumerate(entries, "skew", limit, cap, dedup)
