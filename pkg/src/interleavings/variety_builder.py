"""Presentation of the affine variety of epsilon-interleavings.

For M = sum_j M_j (m summands) and N = sum_i N_i (n summands) the unknowns
are the entries of K (n x m) and L (m x n).  A variable is forced to zero
when the corresponding hom space is zero at epsilon, and an entry of
L.K - Pi_M or K.L - Pi_N becomes a constraint only when the corresponding
hom space at 2*epsilon is nonzero.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Tuple

from .interval_core import PersistenceModule, RationalLike, as_rational, hom_window
from .polynomial import K, L, Polynomial, Variable

PROVABLY_EMPTY = "ProvablyEmpty"
WITNESS_FOUND = "WitnessFound"
UNKNOWN = "Unknown"
STATUS_HINTS = (PROVABLY_EMPTY, WITNESS_FOUND, UNKNOWN)


@dataclass(frozen=True)
class VarietyPresentation:
    m: int
    n: int
    epsilon: Fraction
    forced_zero: Tuple[Variable, ...]
    active_M: Tuple[Tuple[int, int], ...]
    active_N: Tuple[Tuple[int, int], ...]
    generators: Tuple[Polynomial, ...]
    status_hint: str = UNKNOWN
    # constraint entries before forced zeros were substituted, for display
    raw_generators: Tuple[Polynomial, ...] = field(default=(), compare=False)
    M: Optional[PersistenceModule] = field(default=None, compare=False, repr=False)
    N: Optional[PersistenceModule] = field(default=None, compare=False, repr=False)

    def variables(self) -> Tuple[Variable, ...]:
        ks = [K(i, j) for i in range(1, self.n + 1) for j in range(1, self.m + 1)]
        ls = [L(j, i) for j in range(1, self.m + 1) for i in range(1, self.n + 1)]
        return tuple(ks + ls)

    def unforced(self) -> Tuple[Variable, ...]:
        forced = set(self.forced_zero)
        return tuple(v for v in self.variables() if v not in forced)

    def free_variables(self) -> Tuple[Variable, ...]:
        """Unforced variables that occur in no generator."""
        used = set()
        for g in self.generators:
            used |= g.variables()
        return tuple(v for v in self.unforced() if v not in used)

    def constraint_generators(self) -> Tuple[Polynomial, ...]:
        return self.generators[len(self.forced_zero):]

    def has_constant_generator(self) -> bool:
        return any(g.is_nonzero_constant() for g in self.generators)

    def with_status(self, status: str) -> "VarietyPresentation":
        if status not in STATUS_HINTS:
            raise ValueError(f"unknown status hint {status!r}")
        if self.has_constant_generator() and status != PROVABLY_EMPTY:
            raise ValueError("a presentation with a constant generator is provably empty")
        return replace(self, status_hint=status)


def _check_module(P: PersistenceModule, label: str):
    if len(P) == 0:
        raise ValueError(f"module {label} has no summands; a variety needs at least one")


def build_variety(M: PersistenceModule, N: PersistenceModule, e: RationalLike) -> VarietyPresentation:
    """Build the presentation of the variety of e-interleavings of M and N."""
    e = as_rational(e)
    if e < 0:
        raise ValueError(f"epsilon must be non-negative, got {e}")
    _check_module(M, "M")
    _check_module(N, "N")
    m, n = len(M), len(N)
    two_e = 2 * e

    forced = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if e not in hom_window(M[j - 1], N[i - 1]):
                forced.append(K(i, j))
    for j in range(1, m + 1):
        for i in range(1, n + 1):
            if e not in hom_window(N[i - 1], M[j - 1]):
                forced.append(L(j, i))
    forced.sort()
    forced_set = set(forced)

    def entry(left, right, size, p, q, P):
        # (left . right)[p, q] minus the projection entry
        poly = Polynomial(
            [((left(p, r), right(r, q)), 1) for r in range(1, size + 1)]
        )
        if p == q and two_e in hom_window(P[p - 1], P[p - 1]):
            poly = poly - Polynomial.const(1)
        return poly

    active_M, active_N, raw, cooked = [], [], [], []
    for p in range(1, m + 1):
        for q in range(1, m + 1):
            if two_e in hom_window(M[q - 1], M[p - 1]):
                active_M.append((p, q))
                g = entry(L, K, n, p, q, M)
                raw.append(g)
                cooked.append(g.substitute_zero(forced_set))
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if two_e in hom_window(N[q - 1], N[p - 1]):
                active_N.append((p, q))
                g = entry(K, L, m, p, q, N)
                raw.append(g)
                cooked.append(g.substitute_zero(forced_set))

    zero_gens = [Polynomial.var(v) for v in forced]
    generators = tuple(zero_gens + cooked)
    status = PROVABLY_EMPTY if any(g.is_nonzero_constant() for g in generators) else UNKNOWN
    return VarietyPresentation(
        m=m,
        n=n,
        epsilon=e,
        forced_zero=tuple(forced),
        active_M=tuple(active_M),
        active_N=tuple(active_N),
        generators=generators,
        status_hint=status,
        raw_generators=tuple(zero_gens + raw),
        M=M,
        N=N,
    )


def satisfies(presentation: VarietyPresentation, values) -> bool:
    """Whether ``values`` (Variable -> Fraction) is a zero of every generator."""
    return all(g.evaluate(values) == 0 for g in presentation.generators)
