"""Randomised sweeps that back the ``verify`` command."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import _accel
from .hom_analysis import hom_life, single_hom_survives
from .interval_classifier import (
    check_pair,
    classify,
    progression,
    sample_pairs,
    unoriented,
)
from .interval_core import IntervalModule, PersistenceModule
from .matching_distance import match_distance, matching_cost
from .oracle import classify_solutions_1x1

# Timelines drawn for the worked interval examples, as printed: (label, M, N, ticks).
REFERENCE_TIMELINES = (
    ("origin1", ("6", "8"), ("1", "2"), ("1", "6", "7")),
    ("origin1-swapped", ("1", "2"), ("6", "8"), ("1", "6", "7")),
    ("axis1", ("1", "3"), ("0", "2"), ("1", "3")),
    ("axis1-swapped", ("0", "2"), ("1", "3"), ("1", "3")),
    ("hyperbola1", ("1", "2.1"), ("0.8", "2.2"), ("0.2", "0.7", "1.2", "1.3")),
    ("hyperbola1-swapped", ("0.8", "2.2"), ("1", "2.1"), ("0.2", "1.1", "1.2", "1.3")),
    ("hyperbola2", ("0.9", "2.1"), ("1", "2"), ("0.1", "0.5", "0.9")),
)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def hom_life_sweep(pairs: Sequence[Tuple[IntervalModule, IntervalModule]]) -> SweepResult:
    """Check the birth/death identities on every pair, and single-hom survival when m1 >= m2."""
    res = SweepResult("hom life")
    survival_checked = 0
    for M, N in pairs:
        res.checked += 1
        a, b, c, d = M.birth, M.death, N.birth, N.death
        try:
            h = hom_life(M, N)
        except AssertionError as exc:
            res.failures.append(f"{M} {N}: {exc}")
            continue
        if max(h.sigma, h.tau) != max(abs(a - c), abs(b - d)):
            res.failures.append(f"{M} {N}: birth identity")
        if max(h.sigma_prime, h.tau_prime) != max(abs(a - d), abs(b - c)):
            res.failures.append(f"{M} {N}: death identity")
        if h.m1 >= h.m2:
            survival_checked += 1
            if not single_hom_survives(M, N):
                res.failures.append(f"{M} {N}: more than one hom survives past D")
    res.name = f"hom life (single-hom survival checked on {survival_checked} pairs)"
    return res


def oracle_sample_points(M: IntervalModule, N: IntervalModule) -> List[Fraction]:
    """Every breakpoint, zero, a midpoint of every segment, and a point past the end."""
    prog = progression(M, N)
    starts = [s for s, _ in prog.segments]
    pts = list(starts)
    for lo, hi in zip(starts, starts[1:]):
        pts.append((lo + hi) / 2)
    pts.append(starts[-1] + 1)
    return sorted(set(pts))


def oracle_agreement_sweep(pairs) -> SweepResult:
    res = SweepResult("oracle agreement")
    for M, N in pairs:
        for e in oracle_sample_points(M, N):
            res.checked += 1
            mine = classify(M, N, e)
            theirs = classify_solutions_1x1(M, N, e)
            if mine != theirs:
                res.failures.append(f"{M} {N} at {e}: classify={mine} oracle={theirs}")
    return res


def random_module(rng: random.Random, max_summands: int = 3, allow_empty: bool = True) -> PersistenceModule:
    lo = 0 if allow_empty else 1
    k = rng.randint(lo, max_summands)
    summands = []
    for _ in range(k):
        a = Fraction(rng.randint(0, 40), rng.randint(1, 4))
        length = Fraction(rng.randint(1, 40), rng.randint(1, 4))
        summands.append(IntervalModule(a, a + length))
    return PersistenceModule(tuple(summands))


def brute_force_matching_distance(M: PersistenceModule, N: PersistenceModule) -> Fraction:
    """Minimum bottleneck cost over every partial matching."""
    m, n = len(M), len(N)
    best = None
    for size in range(0, min(m, n) + 1):
        for js in itertools.combinations(range(1, m + 1), size):
            for is_ in itertools.permutations(range(1, n + 1), size):
                cost = matching_cost(list(M), list(N), list(zip(js, is_)))
                if best is None or cost < best:
                    best = cost
    return best


def matching_sweep(count: int, seed: int) -> SweepResult:
    rng = random.Random(seed)
    res = SweepResult("matching vs brute force")
    for _ in range(count):
        M, N = random_module(rng), random_module(rng)
        res.checked += 1
        got = match_distance(M, N).distance
        want = brute_force_matching_distance(M, N)
        if got != want:
            res.failures.append(f"{[str(s) for s in M]} {[str(s) for s in N]}: {got} != {want}")
    return res


def reference_tick_report() -> List[Dict]:
    """Compare the printed example timelines against computed breakpoints."""
    out = []
    for label, (ma, mb), (na, nb), ticks in REFERENCE_TIMELINES:
        M, N = IntervalModule.of(ma, mb), IntervalModule.of(na, nb)
        computed = progression(M, N).breakpoints
        ref = tuple(Fraction(t) for t in ticks)
        out.append({
            "example": label,
            "M": str(M),
            "N": str(N),
            "reference_ticks": [_r(t) for t in ref],
            "computed_breakpoints": [_r(t) for t in computed],
            "matches": tuple(computed) == ref,
            "classes": list(progression(M, N).classes()),
        })
    return out


def _r(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def lattice_theorem_sweep(pairs, use_numba=None) -> SweepResult:
    res = SweepResult("theorem (integer lattice kernel)")
    if not pairs:
        return res
    lat, _ = _accel.to_lattice(pairs)
    summary = _accel.sweep_lattice(lat, use_numba)
    bad = _accel.theorem_violations(summary)
    res.checked = len(pairs)
    for k in bad.nonzero()[0]:
        M, N = pairs[k]
        res.failures.append(f"{M} {N}: lattice sweep violation")
    return res


def exact_theorem_sweep(pairs) -> Tuple[SweepResult, Dict[str, int], Dict[str, int]]:
    res = SweepResult("theorem")
    cases: Dict[str, int] = {}
    seqs: Dict[str, int] = {}
    for M, N in pairs:
        res.checked += 1
        problems, prog, h = check_pair(M, N, detail=True)
        res.failures.extend(f"{d.M} {d.N}: {d.kind}: {d.detail}" for d in problems)
        case = "m1>m2" if h.m1 > h.m2 else ("m1=m2" if h.m1 == h.m2 else "m1<m2")
        cases[case] = cases.get(case, 0) + 1
        seq = " ".join(unoriented(c) for c in prog.nonempty_classes())
        seqs[seq] = seqs.get(seq, 0) + 1
    return res, cases, seqs


def run_verify(samples: int = 10000, seed: int = 0, oracle_samples: int = 1000,
               matching_samples: int = 500, engine: str = "exact") -> Dict:
    """Run every sweep and assemble the report document (without schema wrapper)."""
    pairs = sample_pairs(samples, seed)
    if engine == "exact":
        theorem, cases, seqs = exact_theorem_sweep(pairs)
    elif engine in ("lattice", "lattice-numpy"):
        theorem = lattice_theorem_sweep(pairs, use_numba=False if engine == "lattice-numpy" else None)
        cases, seqs = {}, {}
    else:
        raise ValueError(f"unknown engine {engine!r}")
    prop = hom_life_sweep(pairs)
    oracle = oracle_agreement_sweep(pairs[:oracle_samples])
    matching = matching_sweep(matching_samples, seed)
    sweeps = [theorem, prop, oracle, matching]
    return {
        "samples": samples,
        "seed": seed,
        "engine": engine,
        "sweeps": [
            {"name": s.name, "checked": s.checked, "discrepancies": len(s.failures),
             "examples": s.failures[:20]}
            for s in sweeps
        ],
        "case_counts": dict(sorted(cases.items())),
        "sequence_counts": dict(sorted(seqs.items())),
        "reference_ticks": reference_tick_report(),
        "ok": all(s.ok for s in sweeps),
    }
