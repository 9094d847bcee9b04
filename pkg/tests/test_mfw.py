from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import braid_words
from knotmfw.braid import BraidWord
from knotmfw.families import knot_9_42_braid, linked_copies
from knotmfw.homfly import homfly_skein
from knotmfw.laurent import LaurentPoly2
from knotmfw.mfw import (
    AccumulationCertificate,
    MfwInconsistency,
    TheoremACertificate,
    accumulate_certify,
    assignment_word,
    braid_index_lower_bound,
    mfw_report,
    theorem_a_certify,
)


@given(braid_words())
def test_mfw_inequality_never_fails(w):
    rep = mfw_report(w, homfly_skein(w))
    lo, hi = rep.bounds
    assert lo <= rep.d_minus <= rep.d_plus <= hi
    assert rep.D_plus >= 0 and rep.D_minus >= 0


def test_violation_is_reported():
    with pytest.raises(MfwInconsistency):
        mfw_report(BraidWord(2, (1,)), LaurentPoly2.from_text("v^9"))
    with pytest.raises(MfwInconsistency):
        mfw_report(BraidWord(2, (1,)), LaurentPoly2.zero())


def test_lower_bound_values():
    assert braid_index_lower_bound(homfly_skein(BraidWord(2, (1, 1)))) == 2
    # odd spreads do not occur for genuine polynomials but must not be rounded
    assert braid_index_lower_bound(LaurentPoly2.from_text("v + v^2")) == Fraction(3, 2)


def test_9_42_report():
    w, _ = knot_9_42_braid()
    rep = mfw_report(w, homfly_skein(w), braid_index_is_minimal=True)
    assert rep.d_plus - rep.d_minus == 4
    assert rep.lower_bound_braid_index == 3
    assert rep.deficit_lower_bound == 1 and rep.deficit_label == "deficit"


def test_9_42_certificate_round_trip():
    w, s = knot_9_42_braid()
    cert = theorem_a_certify(w, s)
    assert cert.p >= 1 and cert.D_plus_bound >= 2
    assert cert.verify()
    again = TheoremACertificate.from_json(cert.to_json())
    assert again.verify() and again.p == cert.p


def test_tampered_certificate_fails_verification():
    w, s = knot_9_42_braid()
    cert = theorem_a_certify(w, s)
    inflated = TheoremACertificate(cert.word, cert.site, cert.original, cert.p + 5, cert.n,
                                   cert.pos_traces, cert.neg_traces)
    assert not inflated.verify()


@settings(max_examples=40, deadline=None)
@given(braid_words(max_len=10), st.data())
def test_certificate_never_exceeds_true_slack(w, data):
    if not w.letters:
        return
    site = data.draw(st.integers(0, len(w.letters) - 1))
    cert = theorem_a_certify(w, site, max_states=200)
    rep = mfw_report(w, homfly_skein(w))
    assert cert.D_plus_bound <= rep.D_plus
    assert cert.D_minus_bound <= rep.D_minus


def test_single_site_accumulation_matches_single_certificate():
    w, s = knot_9_42_braid()
    acc = accumulate_certify(w, [s])
    assert acc.verify()
    assert acc.min_destabs == theorem_a_certify(w, s).p


def test_accumulation_for_two_copies():
    w, s = knot_9_42_braid()
    W, sites = linked_copies(w, 2, s)
    acc = accumulate_certify(W, sites)
    assert acc.verify() and acc.deficit_lower_bound >= 2
    assert len(acc.branches) == 4 and {a for a, _ in acc.branches} == {"--", "-0", "0-", "00"}
    P = homfly_skein(W)
    rep = mfw_report(W, P)
    assert rep.D_plus >= acc.D_plus_bound


def test_accumulation_rejects_negative_site():
    with pytest.raises(ValueError):
        accumulate_certify(BraidWord(2, (-1, 1)), [0])


def test_assignment_word():
    w = BraidWord(3, (1, 2, 1))
    assert assignment_word(w, (0, 2), "-0").letters == (-1, 2)
    with pytest.raises(ValueError):
        assignment_word(w, (0,), "+")


def test_accumulation_type_is_exported():
    assert AccumulationCertificate.__name__ == "AccumulationCertificate"
