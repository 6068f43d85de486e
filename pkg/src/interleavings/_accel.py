"""Batched progression sweeps on integer-scaled interval pairs.

Pairs of rational intervals are rescaled to a common integer lattice (twice
the lcm of all denominators, so every width is integral) and processed in
int64, which keeps the arithmetic exact.  Two interchangeable kernels are
provided: a numba ``@njit`` loop and a vectorised numpy version.  Set
``INTERLEAVINGS_DISABLE_NUMBA=1`` (or run without numba installed) to use
the numpy path.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

DISABLE_ENV = "INTERLEAVINGS_DISABLE_NUMBA"

# class codes
C_EMPTY, C_ORIGIN, C_KAXIS, C_LAXIS, C_HYPERBOLA, C_PLANE = range(6)
CLASS_NAMES = ("Empty", "Origin", "KAxis", "LAxis", "Hyperbola", "Plane")
# unoriented codes used inside packed sequences: axis collapses to 2
_UNORIENT = np.array([0, 1, 2, 2, 4, 5], dtype=np.int64)
SEQ_BASE = 8
N_CANDIDATES = 8
# sweep output columns
COLUMNS = ("sigma", "sigma_prime", "tau", "tau_prime", "m1", "m2", "distance",
           "first_nonempty", "sequence")

_LIMIT = 2 ** 58


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get(DISABLE_ENV, "") in ("", "0")


def pack_sequence(codes: Sequence[int]) -> int:
    """Pack unoriented nonempty class codes into one base-8 integer."""
    out = 0
    for c in codes:
        out = out * SEQ_BASE + int(c)
    return out


def unpack_sequence(packed: int) -> Tuple[str, ...]:
    names = {1: "Origin", 2: "Axis", 4: "Hyperbola", 5: "Plane"}
    digits = []
    while packed:
        packed, r = divmod(int(packed), SEQ_BASE)
        digits.append(names[r])
    return tuple(reversed(digits))


def to_lattice(pairs) -> Tuple[np.ndarray, int]:
    """Scale (M, N) interval pairs to int64 arrays of shape (n, 4).

    Returns the array [a, b, c, d] per row and the scale factor.
    """
    den = 1
    for M, N in pairs:
        for q in (M.birth, M.death, N.birth, N.death):
            den = den * q.denominator // math.gcd(den, q.denominator)
    scale = 2 * den
    rows = []
    for M, N in pairs:
        row = [int(q * scale) for q in (M.birth, M.death, N.birth, N.death)]
        if any(abs(v) >= _LIMIT for v in row):
            raise OverflowError("lattice values exceed the int64 safety bound")
        rows.append(row)
    return np.asarray(rows, dtype=np.int64).reshape(-1, 4), scale


def from_lattice(values: np.ndarray, scale: int):
    return [Fraction(int(v), scale) for v in values]


# ----------------------------------------------------------------- numpy path


def _window_np(sb, sd, db, dd):
    empty = dd <= sb
    lo = np.maximum(np.maximum(db - sb, dd - sd), 0)
    hi = dd - sb
    return empty, lo, hi


def _classify_np(a, b, c, d, e):
    eK, loK, hiK = _window_np(a, b, c, d)
    eL, loL, hiL = _window_np(c, d, a, b)
    hK = ~eK & (loK <= e) & (e < hiK)
    hL = ~eL & (loL <= e) & (e < hiL)
    two = 2 * e
    cons = ((two >= 0) & (two < b - a)) | ((two >= 0) & (two < d - c))
    cls = np.full(a.shape, C_ORIGIN, dtype=np.int64)
    cls = np.where(hK & ~hL, C_KAXIS, cls)
    cls = np.where(hL & ~hK, C_LAXIS, cls)
    cls = np.where(hK & hL, C_PLANE, cls)
    cls = np.where(cons, np.where(hK & hL, C_HYPERBOLA, C_EMPTY), cls)
    return cls


def _sweep_np(lat: np.ndarray) -> np.ndarray:
    a, b, c, d = (lat[:, k] for k in range(4))
    n = lat.shape[0]
    eK, loK, hiK = _window_np(a, b, c, d)
    eL, loL, hiL = _window_np(c, d, a, b)
    sigma = np.where(eK, 0, loK)
    sigma_p = np.where(eK, 0, hiK)
    tau = np.where(eL, 0, loL)
    tau_p = np.where(eL, 0, hiL)
    m1 = np.maximum(np.abs(a - c), np.abs(b - d))
    m2 = np.maximum((b - a) // 2, (d - c) // 2)
    dist = np.minimum(m1, m2)

    # candidate breakpoints; empty windows contribute 0, which is harmless
    cand = np.stack([np.zeros(n, dtype=np.int64), sigma, sigma_p, tau, tau_p,
                     (b - a) // 2, (d - c) // 2, np.zeros(n, dtype=np.int64)], axis=1)
    cand = np.sort(cand, axis=1)
    cls = np.stack([_classify_np(a, b, c, d, cand[:, k]) for k in range(N_CANDIDATES)], axis=1)

    # first nonempty start: smallest candidate whose class is nonempty
    nonempty = cls != C_EMPTY
    first_idx = np.argmax(nonempty, axis=1)
    first_start = cand[np.arange(n), first_idx]
    first_start = np.where(nonempty.any(axis=1), first_start, -1)

    # pack unoriented classes at segment starts, skipping Empty
    u = _UNORIENT[cls]
    uprev = np.concatenate([np.full((n, 1), -1, dtype=np.int64), u[:, :-1]], axis=1)
    keep = nonempty & (u != uprev)
    seq = np.zeros(n, dtype=np.int64)
    for k in range(N_CANDIDATES):
        seq = np.where(keep[:, k], seq * SEQ_BASE + u[:, k], seq)
    return np.stack([sigma, sigma_p, tau, tau_p, m1, m2, dist, first_start, seq], axis=1)


# ----------------------------------------------------------------- numba path

if HAVE_NUMBA:
    @njit(cache=False)
    def _classify_nb(a, b, c, d, e):
        hK = False
        if not (d <= a):
            lo = max(max(c - a, d - b), 0)
            hK = lo <= e < d - a
        hL = False
        if not (b <= c):
            lo = max(max(a - c, b - d), 0)
            hL = lo <= e < b - c
        two = 2 * e
        if (0 <= two < b - a) or (0 <= two < d - c):
            return C_HYPERBOLA if (hK and hL) else C_EMPTY
        if hK and hL:
            return C_PLANE
        if hK:
            return C_KAXIS
        if hL:
            return C_LAXIS
        return C_ORIGIN

    @njit(cache=False)
    def _sweep_nb(lat):
        n = lat.shape[0]
        out = np.zeros((n, 9), dtype=np.int64)
        cand = np.zeros(N_CANDIDATES, dtype=np.int64)
        unor = np.array([0, 1, 2, 2, 4, 5], dtype=np.int64)
        for r in range(n):
            a, b, c, d = lat[r, 0], lat[r, 1], lat[r, 2], lat[r, 3]
            sigma = sigma_p = tau = tau_p = 0
            if not (d <= a):
                sigma = max(max(c - a, d - b), 0)
                sigma_p = d - a
            if not (b <= c):
                tau = max(max(a - c, b - d), 0)
                tau_p = b - c
            m1 = max(abs(a - c), abs(b - d))
            m2 = max((b - a) // 2, (d - c) // 2)
            cand[0] = 0
            cand[1] = sigma
            cand[2] = sigma_p
            cand[3] = tau
            cand[4] = tau_p
            cand[5] = (b - a) // 2
            cand[6] = (d - c) // 2
            cand[7] = 0
            cand.sort()
            seq = 0
            first = -1
            prev_u = -1
            for k in range(N_CANDIDATES):
                cls = _classify_nb(a, b, c, d, cand[k])
                if cls == C_EMPTY:
                    continue
                if first < 0:
                    first = cand[k]
                u = unor[cls]
                if u != prev_u:
                    seq = seq * SEQ_BASE + u
                    prev_u = u
            out[r, 0] = sigma
            out[r, 1] = sigma_p
            out[r, 2] = tau
            out[r, 3] = tau_p
            out[r, 4] = m1
            out[r, 5] = m2
            out[r, 6] = min(m1, m2)
            out[r, 7] = first
            out[r, 8] = seq
        return out


def sweep_lattice(lat: np.ndarray, use_numba: bool = None) -> np.ndarray:
    """Per-pair summary columns (see ``COLUMNS``) for an (n, 4) int64 lattice array."""
    lat = np.ascontiguousarray(lat, dtype=np.int64)
    if use_numba is None:
        use_numba = numba_enabled()
    if use_numba:
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not available")
        return _sweep_nb(lat)
    return _sweep_np(lat)


# sequences allowed by the classification theorem, packed
_ALLOWED = {
    pack_sequence((1, 2, 1)): "m1>m2",
    pack_sequence((2, 1)): "m1=m2",
    pack_sequence((4, 5, 2, 1)): "m1<m2",
    pack_sequence((4, 5, 1)): "m1<m2",
}


def theorem_violations(summary: np.ndarray) -> np.ndarray:
    """Boolean mask of rows that contradict the classification theorem."""
    m1, m2, dist, first, seq = (summary[:, k] for k in (4, 5, 6, 7, 8))
    first_code = seq.copy()
    # leading digit of the packed sequence
    for _ in range(4):
        first_code = np.where(first_code >= SEQ_BASE, first_code // SEQ_BASE, first_code)
    expected = np.where(m1 > m2, 1, np.where(m1 == m2, 2, 4))
    allowed = np.isin(seq, np.fromiter(_ALLOWED, dtype=np.int64))
    return (first_code != expected) | (first != dist) | ~allowed
