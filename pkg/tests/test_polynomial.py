from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from interleavings.polynomial import K, L, Polynomial, Variable, canonicalize

k, l = K(1, 1), L(1, 1)


def test_commutative_merge():
    p = Polynomial([((k, l), 1), ((l, k), 1), ((), -1)])
    assert p == Polynomial([((k, l), 2), ((), -1)])
    assert p.render() == "2*k[1][1]*l[1][1] - 1"


def test_zero_coefficient_dropped():
    p = canonicalize(Polynomial([((k,), 0), ((l,), 1)]))
    assert p.terms == (((l,), F(1)),)


def test_canonical_generator_is_fixed_point():
    # l[1][1]*k[1][2] + l[1][2]*k[2][2] written in the K-before-L order
    p = Polynomial([((K(1, 2), L(1, 1)), 1), ((K(2, 2), L(1, 2)), 1)])
    assert canonicalize(p) == p
    assert canonicalize(canonicalize(p)) == canonicalize(p)


def test_variable_order_and_render():
    assert K(2, 1) < L(1, 1)
    assert K(1, 2).render() == "k[1][2]"
    assert Variable.parse("l[2][1]") == L(2, 1)
    with pytest.raises(ValueError):
        Variable.parse("x[1][1]")


def test_graded_order():
    p = Polynomial([((), 3), ((k,), 1), ((k, l), 1)])
    assert [len(m) for m, _ in p.terms] == [2, 1, 0]


def test_substitute_and_constant():
    p = Polynomial([((k, l), 1), ((), -1)])
    q = p.substitute_zero({k})
    assert q == Polynomial.const(-1)
    assert q.is_nonzero_constant()
    assert not p.is_nonzero_constant()


def test_evaluate_exact():
    p = Polynomial([((k, l), 1), ((), -1)])
    assert p.evaluate({k: F(2), l: F(1, 2)}) == 0
    assert p.evaluate({k: F(3)}) == -1


def test_arithmetic():
    a, b = Polynomial.var(k), Polynomial.var(l)
    assert (a * b - Polynomial.const(1)).render() == "k[1][1]*l[1][1] - 1"
    assert (a - a).is_zero


_vars = st.sampled_from([K(1, 1), K(1, 2), K(2, 1), L(1, 1), L(2, 1)])
_terms = st.lists(st.tuples(st.lists(_vars, max_size=2).map(tuple),
                            st.integers(-3, 3).map(F)), max_size=6)


@given(_terms)
def test_canonicalize_idempotent(terms):
    p = Polynomial(terms)
    assert canonicalize(p) == p
    assert all(c != 0 for _, c in p.terms)


@given(_terms, _terms)
def test_addition_commutes(t1, t2):
    assert Polynomial(t1) + Polynomial(t2) == Polynomial(t2) + Polynomial(t1)
