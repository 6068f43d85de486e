"""Variety classes and full progressions for a pair of interval modules."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .hom_analysis import HomLifeSummary, hom_life
from .interval_core import IntervalModule, RationalLike, as_rational, hom_window, width

EMPTY = "Empty"
ORIGIN = "Origin"
K_AXIS = "KAxis"
L_AXIS = "LAxis"
HYPERBOLA = "Hyperbola"
PLANE = "Plane"
VARIETY_CLASSES = (EMPTY, ORIGIN, K_AXIS, L_AXIS, HYPERBOLA, PLANE)

AXIS = "Axis"  # orientation-free label used by the classification theorem

ALLOWED_SEQUENCES = (
    (ORIGIN, AXIS, ORIGIN),
    (AXIS, ORIGIN),
    (HYPERBOLA, PLANE, AXIS, ORIGIN),
    (HYPERBOLA, PLANE, ORIGIN),
)


def unoriented(cls: str) -> str:
    return AXIS if cls in (K_AXIS, L_AXIS) else cls


def classify(M: IntervalModule, N: IntervalModule, e: RationalLike) -> str:
    """Class of the variety of e-interleavings of two intervals."""
    e = as_rational(e)
    if e < 0:
        raise ValueError(f"epsilon must be non-negative, got {e}")
    hK = e in hom_window(M, N)
    hL = e in hom_window(N, M)
    constrained = (2 * e in hom_window(M, M)) or (2 * e in hom_window(N, N))
    if constrained:
        return HYPERBOLA if (hK and hL) else EMPTY
    if hK and hL:
        return PLANE
    if hK:
        return K_AXIS
    if hL:
        return L_AXIS
    return ORIGIN


def _candidates(M: IntervalModule, N: IntervalModule) -> List[Fraction]:
    pts = {width(M), width(N)}
    for w in (hom_window(M, N), hom_window(N, M)):
        if not w.is_empty:
            pts.update((w.lo, w.hi))
    for w in (hom_window(M, M), hom_window(N, N)):
        pts.update((w.lo / 2, w.hi / 2))
    return sorted(p for p in pts if p > 0)


@dataclass(frozen=True)
class Progression:
    segments: Tuple[Tuple[Fraction, str], ...]
    breakpoints: Tuple[Fraction, ...] = field(default=())

    def classes(self) -> Tuple[str, ...]:
        return tuple(c for _, c in self.segments)

    def nonempty_classes(self) -> Tuple[str, ...]:
        return tuple(c for c in self.classes() if c != EMPTY)

    def first_nonempty_start(self) -> Fraction:
        for start, c in self.segments:
            if c != EMPTY:
                return start
        raise ValueError("progression has no nonempty segment")

    def class_at(self, e: RationalLike) -> str:
        e = as_rational(e)
        current = self.segments[0][1]
        for start, c in self.segments:
            if start <= e:
                current = c
            else:
                break
        return current


def progression(M: IntervalModule, N: IntervalModule) -> Progression:
    """Piecewise-constant class of the variety as epsilon runs over [0, inf)."""
    cands = _candidates(M, N)
    samples = [Fraction(0)]
    prev = Fraction(0)
    for p in cands:
        samples.append((prev + p) / 2)
        samples.append(p)
        prev = p
    segments: List[Tuple[Fraction, str]] = []
    for idx, x in enumerate(samples):
        c = classify(M, N, x)
        if not segments or segments[-1][1] != c:
            if idx % 2 == 1:
                # odd samples are gap midpoints; the class must not change there
                raise AssertionError(f"class change at non-candidate point {x} for {M}, {N}")
            segments.append((x, c))
    tail = classify(M, N, (cands[-1] + 1) if cands else Fraction(1))
    if segments[-1][1] != tail:
        raise AssertionError("class changes after the last candidate breakpoint")
    if tail != ORIGIN:
        raise AssertionError(f"terminal class {tail} is not the origin")
    return Progression(tuple(segments), tuple(s for s, _ in segments[1:]))


def breakpoints(M: IntervalModule, N: IntervalModule) -> List[Fraction]:
    """Positive values of epsilon at which the variety class changes."""
    return list(progression(M, N).breakpoints)


def predicted_progression(M: IntervalModule, N: IntervalModule, h: HomLifeSummary = None) -> List[str]:
    """Nonempty class sequence forced by the sign of m1 - m2 (axes unoriented)."""
    if h is None:
        h = hom_life(M, N)
    if h.m1 > h.m2:
        return [ORIGIN, AXIS, ORIGIN]
    if h.m1 == h.m2:
        return [AXIS, ORIGIN]
    if min(h.sigma_prime, h.tau_prime) < max(h.sigma_prime, h.tau_prime):
        return [HYPERBOLA, PLANE, AXIS, ORIGIN]
    return [HYPERBOLA, PLANE, ORIGIN]


def first_class_for(m1: Fraction, m2: Fraction) -> str:
    if m1 > m2:
        return ORIGIN
    if m1 == m2:
        return AXIS
    return HYPERBOLA


# ------------------------------------------------------------ verification


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(0, 400), rng.randint(1, 20))


def random_interval(rng: random.Random) -> IntervalModule:
    while True:
        a, b = random_rational(rng), random_rational(rng)
        if a != b:
            return IntervalModule(min(a, b), max(a, b))


def random_pair(rng: random.Random) -> Tuple[IntervalModule, IntervalModule]:
    return random_interval(rng), random_interval(rng)


def sample_pairs(count: int, seed: int) -> List[Tuple[IntervalModule, IntervalModule]]:
    rng = random.Random(seed)
    return [random_pair(rng) for _ in range(count)]


@dataclass
class Discrepancy:
    M: IntervalModule
    N: IntervalModule
    kind: str
    detail: str


@dataclass
class TheoremReport:
    samples: int
    seed: int
    discrepancies: List[Discrepancy] = field(default_factory=list)
    case_counts: dict = field(default_factory=dict)
    sequence_counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def check_pair(M: IntervalModule, N: IntervalModule, detail: bool = False):
    """All theorem-level discrepancies for one pair (empty list when consistent).

    With ``detail=True`` also return the progression and hom summary.
    """
    out = []
    prog = progression(M, N)
    h = hom_life(M, N)
    observed = [unoriented(c) for c in prog.nonempty_classes()]
    predicted = predicted_progression(M, N, h)
    if observed != predicted:
        out.append(Discrepancy(M, N, "sequence", f"observed {observed}, predicted {predicted}"))
    if tuple(observed) not in ALLOWED_SEQUENCES:
        out.append(Discrepancy(M, N, "shape", f"sequence {observed} is not one of the four progressions"))
    expected_first = first_class_for(h.m1, h.m2)
    if not observed or observed[0] != expected_first:
        out.append(Discrepancy(M, N, "first-class",
                               f"first nonempty {observed[:1]}, m1={h.m1}, m2={h.m2}"))
    try:
        start = prog.first_nonempty_start()
    except ValueError:
        start = None
    if start != h.distance:
        out.append(Discrepancy(M, N, "distance", f"first nonempty at {start}, D={h.distance}"))
    if M == N and prog.classes()[0] == EMPTY:
        out.append(Discrepancy(M, N, "equal", "equal intervals must not have an empty prefix"))
    if detail:
        return out, prog, h
    return out


def verify_theorem(sample_count: int, seed: int = 0,
                   pairs: Sequence[Tuple[IntervalModule, IntervalModule]] = None) -> TheoremReport:
    """Compare computed and predicted progressions on random rational pairs."""
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    if pairs is None:
        pairs = sample_pairs(sample_count, seed)
    report = TheoremReport(samples=len(pairs), seed=seed)
    for M, N in pairs:
        problems, prog, h = check_pair(M, N, detail=True)
        report.discrepancies.extend(problems)
        case = "m1>m2" if h.m1 > h.m2 else ("m1=m2" if h.m1 == h.m2 else "m1<m2")
        report.case_counts[case] = report.case_counts.get(case, 0) + 1
        seq = " ".join(unoriented(c) for c in prog.nonempty_classes())
        report.sequence_counts[seq] = report.sequence_counts.get(seq, 0) + 1
    return report
