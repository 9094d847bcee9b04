import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import braid_words
from knotmfw.alexander import alexander_burau
from knotmfw.braid import BraidWord, components, cyclic_rotate, free_reduce, skein_triple, stabilize
from knotmfw.homfly import check_skein, degree_lemma_check, homfly_hecke, homfly_skein
from knotmfw.laurent import LaurentPoly1, LaurentPoly2

P = LaurentPoly2.from_text

# hand-derived from the skein relation, starting at P(unknot) = 1
KNOWN = [
    (BraidWord(1), "1"),
    (BraidWord(2, (1,)), "1"),
    (BraidWord(2, (1, 1, 1)), "2*v^2 - v^4 + v^2*z^2"),
    (BraidWord(2, (-1, -1, -1)), "2*v^-2 - v^-4 + v^-2*z^2"),
    (BraidWord(3, (1, -2, 1, -2)), "v^-2 - 1 + v^2 - z^2"),
    (BraidWord(2, (1, 1)), "v*z^-1 - v^3*z^-1 + v*z"),
]


@pytest.mark.parametrize("w, text", KNOWN)
@pytest.mark.parametrize("engine", [homfly_skein, homfly_hecke])
def test_known_values(w, text, engine):
    assert engine(w) == P(text)


@pytest.mark.parametrize("engine", [homfly_skein, homfly_hecke])
def test_unlink(engine):
    delta = P("v^-1*z^-1 - v*z^-1")
    assert engine(BraidWord(2)) == delta
    assert engine(BraidWord(3)) == delta * delta


@given(braid_words())
def test_engines_agree(w):
    assert homfly_skein(w) == homfly_hecke(w)


@given(braid_words(), st.data())
def test_skein_relation(w, data):
    if not w.letters:
        return
    site = data.draw(st.integers(0, len(w.letters) - 1))
    assert check_skein(skein_triple(w, site))


@given(braid_words(), st.integers(0, 30), st.sampled_from((1, -1)))
def test_markov_invariance(w, k, sign):
    p = homfly_skein(w)
    assert homfly_skein(stabilize(w, sign)) == p
    assert homfly_skein(cyclic_rotate(w, k)) == p
    assert homfly_skein(free_reduce(w)) == p


@given(braid_words())
def test_mirror(w):
    mirror = BraidWord(w.strands, tuple(-x for x in w.letters))
    assert homfly_skein(mirror) == homfly_skein(w).mirror()


@settings(max_examples=60)
@given(braid_words())
def test_conway_specialisation_matches_burau(w):
    """Setting v = 1 gives the Conway polynomial; with z^2 = t - 2 + 1/t
    it must agree with the Burau Alexander polynomial up to units."""
    if components(w) != 1:
        return
    conway = homfly_skein(w).substitute_v(1)
    zz = LaurentPoly1.from_text("t - 2 + t^-1")
    delta = LaurentPoly1.zero()
    for (k,), c in conway.items():
        assert k % 2 == 0
        delta = delta + zz ** (k // 2) * c
    assert delta.equivalent(alexander_burau(w))


@given(braid_words(), st.data())
def test_degree_lemma(w, data):
    if not w.letters:
        return
    site = data.draw(st.integers(0, len(w.letters) - 1))
    assert degree_lemma_check(skein_triple(w, site))


def test_hecke_strand_limit():
    with pytest.raises(ValueError):
        homfly_hecke(BraidWord(12, (1,)), strand_limit=8)
