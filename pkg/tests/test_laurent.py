import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotmfw.laurent import LaurentPoly1, LaurentPoly2

exps = st.integers(-4, 4)
coefs = st.integers(-5, 5)
p2 = st.dictionaries(st.tuples(exps, exps), coefs, max_size=5).map(LaurentPoly2)
p1 = st.dictionaries(st.tuples(exps), coefs, max_size=5).map(LaurentPoly1)


@given(p2, p2, p2)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly2.zero()
    assert a * LaurentPoly2.one() == a


@given(p2, p2)
def test_divide_exact_recovers_factor(a, b):
    if b.is_zero():
        return
    assert (a * b).divide_exact(b) == a


def test_divide_exact_rejects_non_multiple():
    v = LaurentPoly2.monomial(1, 1, 0)
    assert (v + 1).divide_exact(v * 2) is None
    with pytest.raises(ZeroDivisionError):
        v.divide_exact(LaurentPoly2.zero())


@given(p2)
def test_json_and_text_round_trip(a):
    assert LaurentPoly2.from_json(a.to_json()) == a
    assert LaurentPoly2.from_text(a.to_text()) == a


@given(p2)
def test_mirror_is_an_involution(a):
    assert a.mirror().mirror() == a


def test_mirror_of_trefoil():
    right = LaurentPoly2.from_text("2*v^2 - v^4 + v^2*z^2")
    assert right.mirror() == LaurentPoly2.from_text("2*v^-2 - v^-4 + v^-2*z^2")


def test_v_degrees_and_zero():
    p = LaurentPoly2.from_text("v^-3*z + 4*v^5")
    assert p.v_degrees() == (-3, 5)
    with pytest.raises(ValueError):
        LaurentPoly2.zero().v_degrees()


def test_substitute_v():
    p = LaurentPoly2.from_text("v^-2 - 1 + v^2 - z^2")
    assert p.substitute_v(1) == LaurentPoly1.from_text("1 - t^2")


@given(p1)
def test_normalized_is_unit_invariant(a):
    if a.is_zero():
        return
    t = LaurentPoly1.monomial(1, 1)
    assert (a * t * -1).equivalent(a)
    assert a.normalized().coeffs()[0] == 0
    assert a.normalized().coeffs()[1][0] > 0


def test_bad_inputs():
    with pytest.raises(ValueError):
        LaurentPoly2.from_json([[1, 2]])
    with pytest.raises(ValueError):
        LaurentPoly2.from_text("3*q^2")
    with pytest.raises(ValueError):
        LaurentPoly2({(1,): 2})
