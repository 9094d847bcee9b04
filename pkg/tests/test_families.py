import json

import pytest

from knotmfw.braid import BraidWord, components
from knotmfw.families import (
    BM_IDENTITIES,
    BMTemplate,
    FamilySpec,
    bm_diagram,
    bm_identity_suite,
    default_template,
    full_twist,
    kn_params,
    kn_word,
    knot_9_42_braid,
    linked_copies,
)
from knotmfw.homfly import homfly_skein
from knotmfw.table import table_entry


def test_9_42_word_matches_table():
    w, s = knot_9_42_braid()
    assert w.strands == 4 and components(w) == 1
    assert homfly_skein(w) == table_entry("9_42").homfly
    assert w.letters[s] > 0


def test_full_twist():
    assert full_twist((2, 3), 4) == [2, 2, 2, 2]
    assert full_twist((1, 2), -2) == [-1, -1]
    with pytest.raises(ValueError):
        full_twist((1, 3), 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_linked_copies(n):
    w, s = knot_9_42_braid()
    W, sites = linked_copies(w, n, s)
    assert W.strands == 4 * n and components(W) == n
    assert len(sites) == n
    assert all(W.letters[k] == w.letters[s] + 4 * i for i, k in enumerate(sites))


def test_template_round_trip_and_expand():
    t = default_template()
    again = BMTemplate.from_json(json.dumps(t.to_json()))
    assert again == t
    w, site = t.expand(1, 1, 1, 1)
    assert w.letters[site] == t.skeleton[t.certificate_site][1]
    w2, _ = t.expand(-2, 0, 3, 1)
    assert len(w2.letters) == len(w.letters) - 4 + 6


@pytest.mark.parametrize("patch, message", [
    ({"strands": 0}, "positive"),
    ({"skeleton": [{"slot": "X", "index": 1}]}, "lacks slots"),
    ({"certificate_site": 0}, "certificate site"),
])
def test_template_validation(patch, message):
    data = default_template().to_json()
    data.update(patch)
    with pytest.raises(ValueError, match=message):
        BMTemplate.from_json(data)


def test_shipped_template_passes_identities():
    report = bm_identity_suite(default_template())
    assert report.passed == len(BM_IDENTITIES) == 10
    assert report.status == "template verified"


def test_missing_template_is_unresolved():
    report = bm_identity_suite(None)
    assert report.status == "template unresolved" and report.passed == 0


def test_wrong_template_is_caught():
    data = default_template().to_json()
    data["skeleton"] = data["skeleton"] + [{"letter": [1, 1]}]
    report = bm_identity_suite(BMTemplate.from_json(data))
    assert not report.all_passed


def test_kn():
    assert kn_params(3) == (-1, -2, 3, 2)
    assert kn_word(2) == bm_diagram(default_template(), -1, -2, 2, 2)
    with pytest.raises(ValueError):
        kn_params(1)


@pytest.mark.parametrize("name, params", [("Nine42", (1,)), ("Nine42Chain", (0,)), ("BM", (1, 2)), ("K_n", (1,)),
                                          ("Other", ())])
def test_family_spec_rejects(name, params):
    with pytest.raises(ValueError):
        FamilySpec(name, params)


def test_family_spec_build():
    w, sites = FamilySpec("Nine42Chain", (2,)).build()
    assert w.strands == 8 and len(sites) == 2
    w, sites = FamilySpec("K_n", (2,)).build()
    assert isinstance(w, BraidWord) and len(sites) == 1
