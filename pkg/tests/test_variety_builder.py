import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interleavings import serialize as ser
from interleavings.interval_core import IntervalModule, PersistenceModule, hom_window
from interleavings.oracle import ScalarAssignment, check_interleaving, probe_solutions
from interleavings.polynomial import K, L, Polynomial
from interleavings.variety_builder import (
    PROVABLY_EMPTY,
    UNKNOWN,
    WITNESS_FOUND,
    build_variety,
    satisfies,
)

from reference import EX31_REFERENCE, ex31_samples, random_assignment
from strategies import intervals

P = PersistenceModule.of


def renders(polys):
    return [g.render() for g in polys]


def test_two_summand_fifth(ex31):
    pres = build_variety(*ex31, "1/5")
    assert pres.forced_zero == (L(2, 2),)
    assert len(pres.active_M) == 4 and len(pres.active_N) == 4
    assert pres.status_hint == UNKNOWN
    # eight entries, none identically zero after substitution
    assert len(pres.constraint_generators()) == 8
    assert "k[1][2]*l[2][1] - 1" in renders(pres.generators)


def test_two_summand_fifth_matches_reference_solution_set(ex31):
    M, N = ex31
    pres = build_variety(M, N, "1/5")
    for vals in ex31_samples(pres, 300, seed=3):
        mine = satisfies(pres, vals)
        ref = all(g.evaluate(vals) == 0 for g in EX31_REFERENCE)
        oracle = check_interleaving(M, N, "1/5", ScalarAssignment.from_variables(vals))
        assert mine == ref == oracle, vals


def test_two_summand_two_fifths(ex31):
    pres = build_variety(*ex31, "2/5")
    assert pres.forced_zero == ()
    expected = set()
    for p in (1, 2):
        for q in (1, 2):
            delta = Polynomial.const(1 if p == q else 0)
            lk = Polynomial([((L(p, r), K(r, q)), 1) for r in (1, 2)]) - delta
            kl = Polynomial([((K(p, r), L(r, q)), 1) for r in (1, 2)]) - delta
            expected |= {lk, kl}
    assert set(pres.generators) == expected
    res = probe_solutions(pres, budget=50)
    assert res.found


def test_two_summand_three(ex31):
    pres = build_variety(*ex31, 3)
    assert len(pres.generators) == 6
    assert all(g.degree == 1 for g in pres.generators)
    assert pres.free_variables() == (K(2, 1), L(1, 2))
    assert pres.active_M == () and pres.active_N == ()


def test_origin1_half():
    pres = build_variety(P((6, 8)), P((1, 2)), "1/2")
    assert renders(pres.raw_generators) == ["k[1][1]", "l[1][1]", "k[1][1]*l[1][1] - 1"]
    assert renders(pres.generators) == ["k[1][1]", "l[1][1]", "-1"]
    assert pres.status_hint == PROVABLY_EMPTY


def test_all_homs_dead():
    pres = build_variety(P((1, 3)), P((1, 3)), 2)
    assert renders(pres.generators) == ["k[1][1]", "l[1][1]"]
    assert probe_solutions(pres).found


def test_errors(ex31):
    with pytest.raises(ValueError):
        build_variety(*ex31, -1)
    with pytest.raises(ValueError):
        build_variety(P(), ex31[1], 1)


def test_status_hint_guard():
    pres = build_variety(P((6, 8)), P((1, 2)), "1/2")
    with pytest.raises(ValueError):
        pres.with_status(WITNESS_FOUND)


modules = st.lists(intervals(12, 2), min_size=1, max_size=3).map(lambda xs: PersistenceModule(tuple(xs)))
epsilons = st.integers(0, 30).map(lambda k: F(k, 4))


@settings(max_examples=150, deadline=None)
@given(modules, modules, epsilons)
def test_census(M, N, e):
    pres = build_variety(M, N, e)
    forced = set(pres.forced_zero)
    for i, t in enumerate(N, 1):
        for j, s in enumerate(M, 1):
            assert (K(i, j) in forced) == (e not in hom_window(s, t))
            assert (L(j, i) in forced) == (e not in hom_window(t, s))
    for P_, active in ((M, pres.active_M), (N, pres.active_N)):
        for p in range(1, len(P_) + 1):
            for q in range(1, len(P_) + 1):
                assert ((p, q) in active) == (2 * e in hom_window(P_[q - 1], P_[p - 1]))
    for g in pres.constraint_generators():
        assert not (g.variables() & forced)
        assert g.degree <= 2


@settings(max_examples=150, deadline=None)
@given(modules, modules, epsilons)
def test_constant_terms(M, N, e):
    pres = build_variety(M, N, e)
    gens = pres.constraint_generators()
    entries = list(pres.active_M) + list(pres.active_N)
    assert len(gens) == len(entries)
    for (p, q), g in zip(entries, gens):
        assert g.constant_term() == (-1 if p == q else 0)


@settings(max_examples=60, deadline=None)
@given(modules, modules, epsilons, st.integers(0, 10**6))
def test_oracle_soundness(M, N, e, seed):
    pres = build_variety(M, N, e)
    rng = random.Random(seed)
    res = probe_solutions(pres, budget=20, seed=seed)
    samples = [random_assignment(rng, pres.unforced()) for _ in range(5)]
    if res.found:
        samples.append(res.assignment)
    for vals in samples:
        full = {**vals, **{v: F(0) for v in pres.forced_zero}}
        assert satisfies(pres, full) == check_interleaving(M, N, e, ScalarAssignment.from_variables(full))


def _grid(M, N):
    pts = set()
    for s in list(M) + list(N):
        pts |= {s.birth, s.death}
    return sorted({abs(x - y) for x in pts for y in pts} | {abs(x - y) / 2 for x in pts for y in pts})


@settings(max_examples=40, deadline=None)
@given(st.lists(intervals(10, 2), min_size=1, max_size=2), st.lists(intervals(10, 2), min_size=1, max_size=2))
def test_monotone_solvability(ms, ns):
    M, N = PersistenceModule(tuple(ms)), PersistenceModule(tuple(ns))
    grid = _grid(M, N)
    solvable = [probe_solutions(build_variety(M, N, e), budget=30).found for e in grid]
    if True in solvable:
        first = solvable.index(True)
        assert all(solvable[first:]), list(zip(grid, solvable))


def test_determinism(ex31):
    a = ser.dumps(ser.variety_to_json(build_variety(*ex31, "1/5")))
    b = ser.dumps(ser.variety_to_json(build_variety(*ex31, F(1, 5))))
    assert a == b


def test_round_trip(ex31):
    pres = build_variety(*ex31, "1/5")
    back = ser.variety_from_json(ser.variety_to_json(pres))
    assert back == pres
    assert back.raw_generators == pres.raw_generators
