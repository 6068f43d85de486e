"""Bottleneck matching distance between interval-decomposable modules."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .hom_analysis import endpoint_displacement
from .interval_core import IntervalModule, PersistenceModule, width


@dataclass(frozen=True)
class MatchingResult:
    distance: Fraction
    matching: Tuple[Tuple[int, int], ...]  # 1-based (M-index, N-index)
    unmatched_M: Tuple[int, ...]
    unmatched_N: Tuple[int, ...]

    def cost(self, M: PersistenceModule, N: PersistenceModule) -> Fraction:
        return matching_cost(M, N, self.matching)


def matching_cost(M: Sequence[IntervalModule], N: Sequence[IntervalModule],
                  pairs: Sequence[Tuple[int, int]]) -> Fraction:
    """Bottleneck cost of a partial matching given as 1-based index pairs."""
    cost = Fraction(0)
    used_m = {j for j, _ in pairs}
    used_n = {i for _, i in pairs}
    for j, i in pairs:
        cost = max(cost, endpoint_displacement(M[j - 1], N[i - 1]))
    for j, s in enumerate(M, start=1):
        if j not in used_m:
            cost = max(cost, width(s))
    for i, s in enumerate(N, start=1):
        if i not in used_n:
            cost = max(cost, width(s))
    return cost


def _feasible(M, N, eps: Fraction, rows: Sequence[int], cols: Sequence[int]) -> bool:
    """Can summands ``rows`` of M and ``cols`` of N be eps-matched among themselves?

    Reduction to a perfect matching: left vertices are the M summands plus
    a diagonal copy of each N summand, right vertices the N summands plus a
    diagonal copy of each M summand.
    """
    a, b = len(rows), len(cols)
    size = a + b
    if size == 0:
        return True
    r_idx, c_idx = [], []
    for x, j in enumerate(rows):
        for y, i in enumerate(cols):
            if endpoint_displacement(M[j], N[i]) <= eps:
                r_idx.append(x)
                c_idx.append(y)
        if width(M[j]) <= eps:
            r_idx.append(x)
            c_idx.append(b + x)
    for y, i in enumerate(cols):
        if width(N[i]) <= eps:
            r_idx.append(a + y)
            c_idx.append(y)
        for x in range(a):
            r_idx.append(a + y)
            c_idx.append(b + x)
    if not r_idx:
        return False
    graph = csr_matrix((np.ones(len(r_idx), dtype=np.int8), (r_idx, c_idx)), shape=(size, size))
    match = maximum_bipartite_matching(graph, perm_type="column")
    return bool(np.all(match >= 0))


def match_distance(M: PersistenceModule, N: PersistenceModule) -> MatchingResult:
    """Smallest eps admitting an eps-matching, with a deterministic optimal matching.

    Candidate values are 0, all pairwise endpoint displacements and all
    widths; the smallest feasible one is found by binary search.  Among the
    optimal matchings the one chosen assigns each M summand, in order, the
    lowest-indexed N summand that keeps the rest feasible, preferring a
    match over leaving it unmatched.
    """
    Ms, Ns = list(M), list(N)
    cands = {Fraction(0)}
    cands.update(width(s) for s in Ms)
    cands.update(width(s) for s in Ns)
    cands.update(endpoint_displacement(p, q) for p in Ms for q in Ns)
    cands = sorted(cands)
    all_m, all_n = list(range(len(Ms))), list(range(len(Ns)))

    lo, hi = 0, len(cands) - 1  # the largest candidate (every width) is always feasible
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(Ms, Ns, cands[mid], all_m, all_n):
            hi = mid
        else:
            lo = mid + 1
    eps = cands[lo]

    free_n = list(all_n)
    pairs: List[Tuple[int, int]] = []
    unmatched_m: List[int] = []
    for j in all_m:
        rest_m = [x for x in all_m if x > j]
        chosen = None
        for i in free_n:
            if endpoint_displacement(Ms[j], Ns[i]) > eps:
                continue
            if _feasible(Ms, Ns, eps, rest_m, [y for y in free_n if y != i]):
                chosen = i
                break
        if chosen is None:
            unmatched_m.append(j)
        else:
            pairs.append((j, chosen))
            free_n.remove(chosen)
    result = MatchingResult(
        distance=eps,
        matching=tuple((j + 1, i + 1) for j, i in pairs),
        unmatched_M=tuple(j + 1 for j in unmatched_m),
        unmatched_N=tuple(i + 1 for i in free_n),
    )
    assert matching_cost(Ms, Ns, result.matching) == eps
    return result
