import json

import pytest

from knotmfw.cli import INCONSISTENT, OK, USAGE, main
from knotmfw.families import knot_9_42_braid


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_homfly_both_engines(capsys):
    code, out = run_json(capsys, "homfly", "3: s1 s2^-1 s1 s2^-1", "--engine", "both", "--check-skein", "1")
    assert code == OK and out["engines_agree"] and out["skein_relation_holds"]
    assert out["polynomials"]["skein"]["text"] == out["polynomials"]["hecke"]["text"]


def test_homfly_json_word(capsys):
    code, out = run_json(capsys, "homfly", '{"strands": 2, "letters": [[1, 1], [1, 1], [1, 1]]}')
    assert code == OK
    assert sorted(map(tuple, out["polynomials"]["skein"]["json"])) == [(-1, 4, 0), (1, 2, 2), (2, 2, 0)]


def test_cache_transparency(capsys, tmp_path):
    args = ["homfly", "4: s1 s2 s3^-1 s2 s1^-1", "--cache-dir", str(tmp_path)]
    cold = run_json(capsys, *args)
    warm = run_json(capsys, *args)
    fresh = run_json(capsys, *args[:-2], "--no-cache")
    assert cold == warm == fresh


def test_mfw_9_42(capsys):
    w, _ = knot_9_42_braid()
    code, out = run_json(capsys, "mfw", w.to_text(), "--minimal")
    assert code == OK and out["deficit"] == "1" and out["lower_bound_braid_index"] == 3


def test_certify_family(capsys):
    code, out = run_json(capsys, "certify", "--family", "9_42")
    assert code == OK and out["verified"] and out["claims"]["D_plus_at_least"] >= 2
    code, out = run_json(capsys, "certify", "--family", "chain:2")
    assert code == OK and out["kind"] == "accumulated" and out["claims"]["deficit_at_least"] == "2"


def test_family_and_bm_suite(capsys):
    code, out = run_json(capsys, "family", "chain", "3")
    assert code == OK and out["word"]["strands"] == 12 and out["components"] == 3
    code, out = run_json(capsys, "family", "kn", "2")
    assert code == OK and len(out["sites"]) == 1
    code, out = run_json(capsys, "bm-suite")
    assert code == OK and out["status"] == "template verified"


def test_band_commands(capsys):
    code, out = run_json(capsys, "lambda", "a3' a1' a3' a1' a3' a1'", "--depth", "20")
    assert code == OK and out["lambda"] == 4 and out["verified"]
    code, out = run_json(capsys, "xu", "a1 a3 a1 a3 a2")
    assert code == OK and out["xu"]["kind"] == "PosPower"
    code, out = run_json(capsys, "alexander", "a2' a1 a1 a2 a2 a3")
    assert code == OK and out["engines_agree"]
    code, out = run_json(capsys, "alexander", "3: s1 s2^-1 s1 s2^-1")
    assert code == OK and out["alexander"]["text"] == "1*t^2 - 3*t^1 + 1"


def test_alexander_commands(capsys):
    code, out = run_json(capsys, "recurrence", "--y", "2", "--z", "2", "--xmax", "8")
    assert code == OK and out["holds"]
    code, out = run_json(capsys, "alexander-table", "--family", "C", "--max", "4")
    assert code == OK and out["all_passed"] and out["rows"]


def test_abcd_replay_cli(capsys):
    code, out = run_json(capsys, "abcd-replay", "--max", "1")
    assert code == OK and out["consistent"]


def test_human_output(capsys):
    assert main(["recurrence", "--y", "3", "--z", "3"]) == OK
    assert "holds: True" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["homfly"], ["homfly", "s1 s2"], ["homfly", "2: s1", "--engine", "jones"],
    ["homfly", "2: s1", "--check-skein", "5"], ["certify", "2: s1"], ["lambda", "a9"],
    ["recurrence", "--y", "0", "--z", "2"], ["family", "nope"], ["family", "bm", "1", "x", "2", "3"], ["bm-suite", "--template", "/nonexistent.json"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == USAGE
    assert capsys.readouterr().err.startswith("knotmfw:")


def test_inconsistency_exit_code(capsys, tmp_path):
    # poison the cache so the two engines disagree
    from knotmfw.braid import parse_braid
    from knotmfw.cache import PolyCache
    from knotmfw.laurent import LaurentPoly2

    w = parse_braid("2: s1 s1 s1")
    PolyCache(tmp_path).put(w, "skein", LaurentPoly2.from_text("v"))
    assert main(["homfly", "2: s1 s1 s1", "--engine", "both", "--cache-dir", str(tmp_path)]) == INCONSISTENT
    assert main(["mfw", "2: s1 s1 s1", "--cache-dir", str(tmp_path)]) == INCONSISTENT
