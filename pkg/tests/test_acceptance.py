"""Acceptance criteria.  Each test records one PASS/FAIL line, printed in the
pytest terminal summary, or directly when this file is run as a script."""
import io
import json
import time
from fractions import Fraction as F

import pytest

from interleavings.cli import run
from interleavings.interval_classifier import AXIS, progression, unoriented
from interleavings.interval_core import IntervalModule, PersistenceModule
from interleavings.matching_distance import match_distance
from interleavings.oracle import ScalarAssignment, check_interleaving, probe_solutions
from interleavings.polynomial import K, L, Polynomial
from interleavings.variety_builder import PROVABLY_EMPTY, build_variety, satisfies

from reference import EX31_REFERENCE, ex31_samples

RESULTS = []

M31 = PersistenceModule.of((1, 4), ("6/5", "39/10"), name="M")
N31 = PersistenceModule.of((1, 4), ("9/10", "41/10"), name="N")
I = IntervalModule.of


def record(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def verify_report():
    out = io.StringIO()
    t0 = time.perf_counter()
    code = run(["verify", "--samples", "10000", "--seed", "0",
                "--oracle-samples", "1000", "--matching-samples", "500"], out, io.StringIO())
    elapsed = time.perf_counter() - t0
    return code, json.loads(out.getvalue()), elapsed


def _sweep(report, prefix):
    return next(s for s in report["sweeps"] if s["name"].startswith(prefix))


def test_01_two_summand_fifth():
    e = F(1, 5)
    pres = build_variety(M31, N31, e)
    samples = ex31_samples(pres, 1200, seed=0)
    disagreements = accepted = 0
    for vals in samples:
        mine = satisfies(pres, vals)
        ref = all(g.evaluate(vals) == 0 for g in EX31_REFERENCE)
        oracle = check_interleaving(M31, N31, e, ScalarAssignment.from_variables(vals))
        accepted += mine
        disagreements += not (mine == ref == oracle)
    ok = pres.forced_zero == (L(2, 2),) and disagreements == 0 and 0 < accepted < len(samples)
    record(1, "two-summand example at 1/5: forced zeros {l[2][2]}, solution sets agree", ok,
           f"{len(samples)} samples, {accepted} accepted, {disagreements} disagreements")


def test_02_two_summand_two_fifths():
    pres = build_variety(M31, N31, F(2, 5))
    expected = set()
    for p in (1, 2):
        for q in (1, 2):
            delta = Polynomial.const(int(p == q))
            expected.add(Polynomial([((K(p, r), L(r, q)), 1) for r in (1, 2)]) - delta)
            expected.add(Polynomial([((L(p, r), K(r, q)), 1) for r in (1, 2)]) - delta)
    res = probe_solutions(pres, budget=50)
    inverse = False
    if res.found:
        v = res.assignment
        Z = [[v[K(i, j)] for j in (1, 2)] for i in (1, 2)]
        W = [[v[L(j, i)] for i in (1, 2)] for j in (1, 2)]
        inverse = all(sum(W[p][r] * Z[r][q] for r in range(2)) == (p == q) for p in range(2) for q in range(2))
    ok = pres.forced_zero == () and set(pres.generators) == expected and len(pres.generators) == 8 and inverse
    record(2, "two-summand example at 2/5: no forced zeros, K.L - I and L.K - I, witness (Z, Z^-1)", ok)


def test_03_two_summand_three():
    pres = build_variety(M31, N31, 3)
    ok = (len(pres.generators) == 6 and all(g.degree == 1 and len(g.terms) == 1 for g in pres.generators)
          and pres.free_variables() == (K(2, 1), L(1, 2)))
    record(3, "two-summand example at 3: six single-variable generators, k[2][1] and l[1][2] free", ok)


def test_04_origin1():
    prog = progression(I(6, 8), I(1, 2))
    pres = build_variety(PersistenceModule.of((6, 8)), PersistenceModule.of((1, 2)), F(1, 2))
    raw = [g.render() for g in pres.raw_generators]
    ok = (prog.segments == ((0, "Empty"), (1, "Origin"), (6, "LAxis"), (7, "Origin"))
          and pres.status_hint == PROVABLY_EMPTY
          and raw == ["k[1][1]", "l[1][1]", "k[1][1]*l[1][1] - 1"])
    record(4, "[6,8) vs [1,2): Empty/Origin/LAxis/Origin at 0,1,6,7; empty at 1/2", ok)


def test_05_hyperbola1():
    prog = progression(I(1, "2.1"), I("0.8", "2.2"))
    ok = (prog.breakpoints == (F(1, 5), F(7, 10), F(6, 5), F(13, 10))
          and [unoriented(c) for c in prog.nonempty_classes()] == ["Hyperbola", "Plane", AXIS, "Origin"])
    record(5, "[1,2.1) vs [0.8,2.2): breakpoints 1/5 7/10 6/5 13/10", ok)


def test_06_hyperbola2(verify_report):
    prog = progression(I("0.9", "2.1"), I(1, 2))
    _, report, _ = verify_report
    row = next(r for r in report["reference_ticks"] if r["example"] == "hyperbola2")
    ok = (prog.breakpoints == (F(1, 10), F(3, 5), F(11, 10))
          and list(prog.nonempty_classes()) == ["Hyperbola", "Plane", "Origin"]
          and row["matches"] is False and row["reference_ticks"] == ["1/10", "1/2", "9/10"])
    record(6, "[0.9,2.1) vs [1,2): breakpoints 1/10 3/5 11/10, printed ticks flagged", ok)


def test_07_distance():
    res = match_distance(M31, N31)
    ok = res.distance == F(1, 5) and res.matching == ((1, 2), (2, 1))
    record(7, "matching distance of the two-summand example is 1/5 via M1-N2, M2-N1", ok)


def test_08_theorem_sweep(verify_report):
    code, report, elapsed = verify_report
    s = _sweep(report, "theorem")
    ok = s["discrepancies"] == 0 and s["checked"] == 10000 and elapsed < 60
    record(8, "theorem sweep on 10000 pairs", ok,
           f"{s['discrepancies']} discrepancies, full verify {elapsed:.1f}s")


def test_09_hom_life_sweep(verify_report):
    s = _sweep(verify_report[1], "hom life")
    ok = s["discrepancies"] == 0 and s["checked"] == 10000
    record(9, "birth/death identities and single-hom survival on 10000 pairs", ok, s["name"])


def test_10_oracle_agreement(verify_report):
    s = _sweep(verify_report[1], "oracle")
    ok = s["discrepancies"] == 0 and s["checked"] >= 1000
    record(10, "classify vs definition-level oracle on 1000 pairs", ok, f"{s['checked']} evaluations")


def test_11_matching_oracle(verify_report):
    s = _sweep(verify_report[1], "matching")
    ok = s["discrepancies"] == 0 and s["checked"] == 500
    record(11, "matching distance vs brute force on 500 module pairs", ok)


if __name__ == "__main__":  # pragma: no cover
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
