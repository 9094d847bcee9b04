import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import braid_words
from knotmfw.braid import (
    BraidWord,
    ReductionTrace,
    canonical_reduce,
    components,
    cyclic_rotate,
    destabilize,
    exponent_sum,
    free_reduce,
    isotopy_reduce,
    parse_braid,
    skein_triple,
    stabilize,
    three_letter_relations,
)


def test_text_format():
    w = parse_braid("3: s1 s2^-1 s1")
    assert w == BraidWord(3, (1, -2, 1))
    assert w.to_text() == "3: s1 s2^-1 s1"
    assert parse_braid('{"strands": 3, "letters": [[1, 1], [2, -1]]}') == BraidWord(3, (1, -2))


@pytest.mark.parametrize("bad", ["s1 s2", "3: s3", "3: t1", "2: s1^2"])
def test_rejects_malformed_words(bad):
    with pytest.raises(ValueError):
        parse_braid(bad)


@given(braid_words())
def test_json_round_trip(w):
    assert BraidWord.from_json(w.to_json()) == w
    assert parse_braid(w.to_text()) == w


@pytest.mark.parametrize("w, expected", [
    (BraidWord(1), 1), (BraidWord(2), 2), (BraidWord(2, (1,)), 1), (BraidWord(2, (1, 1)), 2),
    (BraidWord(3, (1, 2)), 1), (BraidWord(4, (1, -2, 1)), 3), (BraidWord(4, (1, 2, 1, 3)), 2),
])
def test_components(w, expected):
    assert components(w) == expected


@given(braid_words(), st.integers(-20, 20), st.sampled_from((1, -1)))
def test_moves_preserve_components(w, k, sign):
    c = components(w)
    assert components(free_reduce(w)) == c
    assert components(cyclic_rotate(w, k)) == c
    s = stabilize(w, sign)
    assert components(s) == c
    assert (s.strands, exponent_sum(s)) == (w.strands + 1, exponent_sum(w) + sign)


@given(braid_words(), st.sampled_from((1, -1)))
def test_destabilize_undoes_stabilize(w, sign):
    back = destabilize(stabilize(w, sign), sign)
    assert (back.strands, exponent_sum(back), components(back)) == (w.strands, exponent_sum(w), components(w))
    assert destabilize(stabilize(w, sign), -sign) is None


def test_destabilize_needs_single_occurrence():
    assert destabilize(BraidWord(3, (1, 2, 2)), 1) is None
    assert destabilize(BraidWord(3, (2, 1, -2)), 1) is None
    assert destabilize(BraidWord(3, (1, 1, 1, 2)), 1) == BraidWord(2, (1, 1, 1))


def test_free_reduce():
    assert free_reduce(BraidWord(3, (1, 2, -2, -1, 2))) == BraidWord(3, (2,))


@given(braid_words())
def test_canonical_reduce_trace_replays(w):
    tr = canonical_reduce(w)
    assert tr.replay() == tr.result
    again = ReductionTrace.from_json(tr.to_json())
    assert again == tr
    # the counts match the strand drop
    assert w.strands - tr.result.strands == tr.pos_destabs + tr.neg_destabs


def test_canonical_reduce_unknot():
    tr = canonical_reduce(BraidWord(4, (1, 2, 3)))
    assert tr.result.strands == 1 and tr.pos_destabs == 3 and tr.neg_destabs == 0


def test_isotopy_reduce_finds_hidden_destabilization():
    # s2 s1 s2 = s1 s2 s1 exposes a single s2 after one relation move
    w = BraidWord(3, (2, 1, 2, 1, 1))
    assert canonical_reduce(w).pos_destabs == 0
    tr = isotopy_reduce(w, 1)
    assert tr.pos_destabs >= 1 and tr.replay() == tr.result


def test_three_letter_relations_are_braid_relations():
    rel = three_letter_relations()
    assert (1, 2, 1) in rel and (2, 1, 2) in rel[(1, 2, 1)]


def test_skein_triple():
    t = skein_triple(BraidWord(3, (1, -2, 1)), 1)
    assert t.plus.letters == (1, 2, 1)
    assert t.minus.letters == (1, -2, 1)
    assert t.zero.letters == (1, 1)
    assert t.original == "minus" and set(t.others()) == {"plus", "zero"}
    with pytest.raises(IndexError):
        skein_triple(BraidWord(2, (1,)), 3)
