"""Definition-level checks of interleavings, independent of the symbolic pipeline.

Morphisms between interval modules are modelled pointwise: a scalar that
acts on the overlap of the two supports when the hom criterion holds, and
zero otherwise.  Composites and canonical projections are evaluated at a
finite set of critical points, on whose gaps every map in sight is
constant.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .interval_core import (
    IntervalModule,
    PersistenceModule,
    RationalLike,
    as_rational,
    hom_nonzero,
    shift,
)
from .polynomial import Variable
from .variety_builder import PROVABLY_EMPTY, WITNESS_FOUND, VarietyPresentation

EMPTY = "Empty"
ORIGIN = "Origin"
K_AXIS = "KAxis"
L_AXIS = "LAxis"
HYPERBOLA = "Hyperbola"
PLANE = "Plane"


@dataclass
class ScalarAssignment:
    """Scalars for the components of Phi (``k_values[(i, j)]``: M_j -> N_i)
    and Psi (``l_values[(j, i)]``: N_i -> M_j).  Missing positions are zero."""

    k_values: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)
    l_values: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    @classmethod
    def from_variables(cls, values) -> "ScalarAssignment":
        a = cls()
        for v, x in values.items():
            target = a.k_values if v.family == "K" else a.l_values
            target[(v.row, v.col)] = as_rational(x)
        return a

    def to_variables(self) -> Dict[Variable, Fraction]:
        out = {Variable("K", i, j): x for (i, j), x in self.k_values.items()}
        out.update({Variable("L", j, i): x for (j, i), x in self.l_values.items()})
        return out


def _alive(src: IntervalModule, dst: IntervalModule, x: Fraction) -> bool:
    """Whether the generator of Hom(src, dst) is nonzero at x."""
    return hom_nonzero(src, dst) and src.contains(x) and dst.contains(x)


def _identity_at(P: IntervalModule, x: Fraction, tau: Fraction) -> bool:
    # internal map P(x <= x + tau)
    return P.contains(x) and P.contains(x + tau)


def critical_points(M: PersistenceModule, N: PersistenceModule, e: Fraction) -> List[Fraction]:
    """Shifted endpoints plus a midpoint in every gap and a point on each side."""
    pts = set()
    for s in list(M) + list(N):
        for t in (s.birth, s.death):
            for off in (0, e, 2 * e):
                pts.add(t - off)
    ordered = sorted(pts)
    out = [ordered[0] - 1]
    for lo, hi in zip(ordered, ordered[1:]):
        out.append(lo)
        out.append((lo + hi) / 2)
    out.append(ordered[-1])
    out.append(ordered[-1] + 1)
    return out


class InterleavingChecker:
    """Precomputed support data for checking many assignments at one epsilon."""

    def __init__(self, M: PersistenceModule, N: PersistenceModule, e: RationalLike):
        e = as_rational(e)
        if e < 0:
            raise ValueError(f"epsilon must be non-negative, got {e}")
        self.M, self.N, self.e = M, N, e
        m, n = len(M), len(N)
        self.m, self.n = m, n
        N_e = [shift(Ni, e) for Ni in N]
        M_e = [shift(Mj, e) for Mj in M]
        self.points = critical_points(M, N, e) if (m or n) else []
        # per point: alive masks for Phi(x), Psi(x), Phi(x+e), Psi(x+e) and both projections
        self._frames = []
        for x in self.points:
            xe = x + e
            phi_x = [[_alive(M[j], N_e[i], x) for j in range(m)] for i in range(n)]
            psi_x = [[_alive(N[i], M_e[j], x) for i in range(n)] for j in range(m)]
            phi_xe = [[_alive(M[j], N_e[i], xe) for j in range(m)] for i in range(n)]
            psi_xe = [[_alive(N[i], M_e[j], xe) for i in range(n)] for j in range(m)]
            pi_M = [_identity_at(M[p], x, 2 * e) for p in range(m)]
            pi_N = [_identity_at(N[p], x, 2 * e) for p in range(n)]
            self._frames.append((phi_x, psi_x, phi_xe, psi_xe, pi_M, pi_N))

    def _check_bounds(self, a: ScalarAssignment):
        for (i, j) in a.k_values:
            if not (1 <= i <= self.n and 1 <= j <= self.m):
                raise IndexError(f"K position {(i, j)} outside the {self.n}x{self.m} grid")
        for (j, i) in a.l_values:
            if not (1 <= j <= self.m and 1 <= i <= self.n):
                raise IndexError(f"L position {(j, i)} outside the {self.m}x{self.n} grid")

    def check(self, a: ScalarAssignment) -> bool:
        self._check_bounds(a)
        m, n = self.m, self.n
        k = [[a.k_values.get((i + 1, j + 1), 0) for j in range(m)] for i in range(n)]
        l = [[a.l_values.get((j + 1, i + 1), 0) for i in range(n)] for j in range(m)]
        for phi_x, psi_x, phi_xe, psi_xe, pi_M, pi_N in self._frames:
            # (Psi shifted by e) o Phi  ==  Pi_M  at x
            for p in range(m):
                for q in range(m):
                    val = 0
                    for i in range(n):
                        if psi_xe[p][i] and phi_x[i][q]:
                            val += l[p][i] * k[i][q]
                    target = 1 if (p == q and pi_M[p]) else 0
                    if val != target:
                        return False
            # (Phi shifted by e) o Psi  ==  Pi_N  at x
            for p in range(n):
                for q in range(n):
                    val = 0
                    for j in range(m):
                        if phi_xe[p][j] and psi_x[j][q]:
                            val += k[p][j] * l[j][q]
                    target = 1 if (p == q and pi_N[p]) else 0
                    if val != target:
                        return False
        return True

    def hom_exists(self) -> Tuple[List[List[bool]], List[List[bool]]]:
        """Which K and L positions admit a nonzero morphism at this epsilon."""
        kk = [[hom_nonzero(self.M[j], shift(self.N[i], self.e)) for j in range(self.m)] for i in range(self.n)]
        ll = [[hom_nonzero(self.N[i], shift(self.M[j], self.e)) for i in range(self.n)] for j in range(self.m)]
        return kk, ll


def check_interleaving(M: PersistenceModule, N: PersistenceModule, e: RationalLike,
                       a: ScalarAssignment) -> bool:
    """Whether the scalars in ``a`` define an e-interleaving of M and N."""
    return InterleavingChecker(M, N, e).check(a)


# ---------------------------------------------------------------- probing


@dataclass(frozen=True)
class ProbeResult:
    found: bool
    assignment: Optional[Dict[Variable, Fraction]] = None
    attempts: int = 0

    @property
    def status(self) -> str:
        return "WitnessFound" if self.found else "NoWitnessInBudget"


def _propagate(generators, values: Dict[Variable, Fraction], unknowns) -> Optional[Dict[Variable, Fraction]]:
    """Solve generators that become linear in a single unknown; repeat.

    Returns the extended assignment, or None on a contradiction.
    """
    values = dict(values)
    changed = True
    while changed:
        changed = False
        for g in generators:
            # partially evaluate g under the known values
            residual: Dict[Tuple[Variable, ...], Fraction] = {}
            for mono, c in g.terms:
                coeff = c
                rest = []
                for v in mono:
                    if v in values:
                        coeff *= values[v]
                    else:
                        rest.append(v)
                if coeff == 0:
                    continue
                key = tuple(rest)
                residual[key] = residual.get(key, Fraction(0)) + coeff
            residual = {mk: c for mk, c in residual.items() if c != 0}
            if not residual:
                continue
            free = {v for mono in residual for v in mono}
            if not free:
                return None
            if len(free) == 1 and all(len(mono) <= 1 for mono in residual):
                (v,) = free
                lin = residual.get((v,), Fraction(0))
                const = residual.get((), Fraction(0))
                if lin == 0:
                    return None
                values[v] = -const / lin
                changed = True
    return values


def _complete(presentation: VarietyPresentation, values) -> Dict[Variable, Fraction]:
    full = {v: Fraction(0) for v in presentation.variables()}
    full.update(values)
    return full


def _is_solution(presentation: VarietyPresentation, values) -> bool:
    return all(g.evaluate(values) == 0 for g in presentation.generators)


def _matching_patterns(m: int, n: int, exhaustive_limit: int = 4):
    """Partial injections M-index -> N-index used as structured guesses."""
    if m <= exhaustive_limit and n <= exhaustive_limit:
        for size in range(min(m, n), -1, -1):
            for js in itertools.combinations(range(1, m + 1), size):
                for is_ in itertools.permutations(range(1, n + 1), size):
                    yield tuple(zip(js, is_))
        return
    base = [(j, j) for j in range(1, min(m, n) + 1)]
    yield tuple(base)
    for x, y in itertools.combinations(range(len(base)), 2):
        swapped = list(base)
        swapped[x], swapped[y] = (base[x][0], base[y][1]), (base[y][0], base[x][1])
        yield tuple(swapped)
    yield ()


def probe_solutions(presentation: VarietyPresentation, budget: int = 200, seed: int = 0) -> ProbeResult:
    """Search for a point on the variety.

    Tries, in order: all zeros with linear propagation, matching-shaped
    guesses (a scalar and its inverse on matched pairs), then random
    rational seeds completed by propagation.  A semi-decision procedure:
    failure only means nothing was found within ``budget`` random trials.
    """
    if presentation.has_constant_generator():
        return ProbeResult(False, None, 0)
    gens = [g for g in presentation.generators if not g.is_zero]
    forced = {v: Fraction(0) for v in presentation.forced_zero}
    unforced = [v for v in presentation.unforced()]
    checker = None
    if presentation.M is not None and presentation.N is not None:
        checker = InterleavingChecker(presentation.M, presentation.N, presentation.epsilon)

    attempts = 0

    def accept(values) -> Optional[ProbeResult]:
        full = _complete(presentation, values)
        if not _is_solution(presentation, full):
            return None
        if checker is not None and not checker.check(ScalarAssignment.from_variables(full)):
            raise AssertionError("generator solution rejected by the morphism-level check")
        return ProbeResult(True, full, attempts)

    def attempt(seed_values) -> Optional[ProbeResult]:
        nonlocal attempts
        attempts += 1
        vals = _propagate(gens, {**forced, **seed_values}, unforced)
        if vals is None:
            return None
        return accept(vals)

    found = attempt({})
    if found:
        return found

    unforced_set = set(unforced)
    for pattern in _matching_patterns(presentation.m, presentation.n):
        for scale in (Fraction(1), Fraction(2)):
            seed_values = {}
            for j, i in pattern:
                kv, lv = Variable("K", i, j), Variable("L", j, i)
                if kv in unforced_set and lv in unforced_set:
                    seed_values[kv] = scale
                    seed_values[lv] = 1 / scale
            vals = _propagate(gens, {**forced, **seed_values}, unforced)
            attempts += 1
            if vals is None:
                continue
            # anything still undetermined defaults to zero
            found = accept(vals)
            if found:
                return found

    rng = random.Random(seed)
    palette = [Fraction(p, q) for p in range(-3, 4) for q in (1, 2, 3) if p != 0]
    for _ in range(budget):
        seed_values = {}
        for v in unforced:
            r = rng.random()
            if r < 0.4:
                seed_values[v] = rng.choice(palette)
            elif r < 0.6:
                seed_values[v] = Fraction(0)
        found = attempt(seed_values)
        if found:
            return found
    return ProbeResult(False, None, attempts)


def annotate_status(presentation: VarietyPresentation, budget: int = 200, seed: int = 0):
    """Return (presentation with its status hint updated, probe result)."""
    if presentation.status_hint == PROVABLY_EMPTY:
        return presentation, ProbeResult(False, None, 0)
    result = probe_solutions(presentation, budget, seed)
    if result.found:
        return presentation.with_status(WITNESS_FOUND), result
    return presentation, result


# ------------------------------------------------------- 1x1 classification

PROBE_SET = (
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(1)),
    (Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(1, 2)),
    (Fraction(-1), Fraction(-1)),
)

_SIGNATURES = {
    frozenset(): EMPTY,
    frozenset({0}): ORIGIN,
    frozenset({0, 1}): K_AXIS,
    frozenset({0, 2}): L_AXIS,
    frozenset({3, 4, 5}): HYPERBOLA,
    frozenset(range(6)): PLANE,
}


def classify_solutions_1x1(M: IntervalModule, N: IntervalModule, e: RationalLike) -> str:
    """Classify the variety of a pair of intervals by probing the definition.

    A probe point (k, l) is accepted when the scalars are admissible (zero
    wherever no nonzero morphism exists) and pass :func:`check_interleaving`.
    """
    e = as_rational(e)
    Mm = PersistenceModule((M,), name="M")
    Nm = PersistenceModule((N,), name="N")
    checker = InterleavingChecker(Mm, Nm, e)
    k_ok = hom_nonzero(M, shift(N, e))
    l_ok = hom_nonzero(N, shift(M, e))
    accepted = set()
    for idx, (kv, lv) in enumerate(PROBE_SET):
        if (kv != 0 and not k_ok) or (lv != 0 and not l_ok):
            continue
        a = ScalarAssignment({(1, 1): kv}, {(1, 1): lv})
        if checker.check(a):
            accepted.add(idx)
    try:
        return _SIGNATURES[frozenset(accepted)]
    except KeyError:
        raise AssertionError(
            f"probe signature {sorted(accepted)} for {M}, {N} at {e} matches no variety class"
        ) from None

