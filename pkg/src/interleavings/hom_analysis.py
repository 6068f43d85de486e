"""Birth and death of the last homomorphism between two intervals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .interval_core import ZERO, HomWindow, IntervalModule, hom_window, width


@dataclass(frozen=True)
class HomLifeSummary:
    sigma: Fraction
    sigma_prime: Fraction
    tau: Fraction
    tau_prime: Fraction
    m1: Fraction
    m2: Fraction
    distance: Fraction


def _window_bounds(w: HomWindow):
    # empty windows are zero-filled on both ends
    if w.is_empty:
        return ZERO, ZERO
    return w.lo, w.hi


def endpoint_displacement(M: IntervalModule, N: IntervalModule) -> Fraction:
    """max(|a - c|, |b - d|): the cost of matching [a,b) with [c,d)."""
    return max(abs(M.birth - N.birth), abs(M.death - N.death))


def interval_distance(M: IntervalModule, N: IntervalModule) -> Fraction:
    """Interleaving distance between two interval modules."""
    return min(endpoint_displacement(M, N), max(width(M), width(N)))


def hom_life(M: IntervalModule, N: IntervalModule) -> HomLifeSummary:
    """Summarize the hom windows in both directions together with m1, m2, D.

    sigma/sigma' bound S_{M,N}, tau/tau' bound S_{N,M}.  The identities
    ``max(sigma, tau) == m1`` and ``max(sigma', tau') == max(|a-d|, |b-c|)``
    are asserted on the way out.
    """
    sigma, sigma_p = _window_bounds(hom_window(M, N))
    tau, tau_p = _window_bounds(hom_window(N, M))
    a, b, c, d = M.birth, M.death, N.birth, N.death
    m1 = endpoint_displacement(M, N)
    m2 = max(width(M), width(N))
    assert max(sigma, tau) == m1, (M, N, sigma, tau, m1)
    assert max(sigma_p, tau_p) == max(abs(a - d), abs(b - c)), (M, N, sigma_p, tau_p)
    return HomLifeSummary(sigma, sigma_p, tau, tau_p, m1, m2, min(m1, m2))


def single_hom_survives(M: IntervalModule, N: IntervalModule) -> bool:
    """True iff exactly one of S_{M,N}, S_{N,M} meets [D, inf)."""
    D = hom_life(M, N).distance
    hits = 0
    for w in (hom_window(M, N), hom_window(N, M)):
        # half-open window meets [D, inf) iff its supremum exceeds D
        if not w.is_empty and w.hi > D:
            hits += 1
    return hits == 1
