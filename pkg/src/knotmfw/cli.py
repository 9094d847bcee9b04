"""Command-line front end.

Every subcommand builds a JSON-ready payload; ``--json`` prints it as JSON,
otherwise a plain text rendering.  Exit codes: 0 success, 1 a mathematical
inconsistency was detected, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from . import alexander as alx
from . import band3
from .braid import BraidWord, parse_braid, skein_triple
from .cache import ENV_VAR, PolyCache
from .families import (
    BMTemplate,
    FamilySpec,
    bm_identity_suite,
    default_template,
    knot_9_42_braid,
    linked_copies,
)
from .homfly import check_skein, homfly_hecke, homfly_skein
from .laurent import LaurentPoly2
from .mfw import MfwInconsistency, accumulate_certify, mfw_report, theorem_a_certify

OK, INCONSISTENT, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    payload: Any
    code: int = OK


# -- shared helpers -----------------------------------------------------------------

def _word(text: str) -> BraidWord:
    try:
        return parse_braid(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot parse braid word: {exc}") from exc


def _band(text: str) -> band3.BandWord:
    try:
        return band3.parse_band(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse band word: {exc}") from exc


def _template(args) -> BMTemplate:
    try:
        return BMTemplate.load(args.template) if args.template else default_template()
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load template: {exc}") from exc


def _engines(args) -> dict[str, Callable[[BraidWord], LaurentPoly2]]:
    engines = {"skein": homfly_skein, "hecke": homfly_hecke}
    if args.no_cache:
        return engines
    cache = PolyCache(args.cache_dir)
    return {name: cache.cached(name, fn) for name, fn in engines.items()}


def _poly_payload(p) -> dict:
    return {"text": p.to_text(), "json": p.to_json()}


# -- subcommands ----------------------------------------------------------------------

def cmd_homfly(args) -> Outcome:
    w = _word(args.word)
    engines = _engines(args)
    names = ["skein", "hecke"] if args.engine == "both" else [args.engine]
    polys = {n: engines[n](w) for n in names}
    out: dict = {"word": w.to_json(), "polynomials": {n: _poly_payload(p) for n, p in polys.items()}}
    code = OK
    if len(polys) == 2:
        out["engines_agree"] = polys["skein"] == polys["hecke"]
        code = OK if out["engines_agree"] else INCONSISTENT
    if args.check_skein is not None:
        if not 0 <= args.check_skein < len(w.letters):
            raise UsageError(f"site {args.check_skein} out of range")
        holds = check_skein(skein_triple(w, args.check_skein), engines[names[0]])
        out["skein_relation_holds"] = holds
        code = code if holds else INCONSISTENT
    return Outcome(out, code)


def cmd_alexander(args) -> Outcome:
    text = args.word.strip()
    if text.startswith("{") or ":" in text:
        w = _word(text)
        delta = alx.alexander_burau(w)
        return Outcome({"word": w.to_json(), "engine": "burau", "alexander": _poly_payload(alx.normalize(delta))})
    b = _band(text)
    burau = alx.normalize(alx.alexander_burau(band3.band_to_artin(b)))
    out: dict = {"band_word": b.to_text(), "burau": _poly_payload(burau)}
    try:
        seif = alx.normalize(alx.alexander_band(b))
    except ValueError as exc:  # surface not connected
        out["seifert"] = None
        out["note"] = str(exc)
        return Outcome(out)
    out["seifert"] = _poly_payload(seif)
    out["engines_agree"] = seif == burau
    return Outcome(out, OK if out["engines_agree"] else INCONSISTENT)


def cmd_mfw(args) -> Outcome:
    w = _word(args.word)
    P = _engines(args)[args.engine if args.engine != "both" else "skein"](w)
    try:
        rep = mfw_report(w, P, args.minimal)
    except MfwInconsistency as exc:
        return Outcome({"word": w.to_json(), "error": str(exc)}, INCONSISTENT)
    return Outcome({"word": w.to_json(), "homfly": P.to_text(), **rep.to_json()})


def _family_word(args) -> tuple[BraidWord, list[int]]:
    name = args.family
    if name == "9_42":
        w, s = knot_9_42_braid()
        return w, [s]
    if name.startswith("chain"):
        n = int(name.split(":")[1]) if ":" in name else 2
        w, s = knot_9_42_braid()
        return linked_copies(w, n, s)
    raise UsageError(f"unknown family {name!r} (use 9_42 or chain:N)")


def cmd_certify(args) -> Outcome:
    if args.family:
        if args.word:
            raise UsageError("give either a word or --family, not both")
        w, sites = _family_word(args)
        if args.site:
            sites = args.site
    else:
        if not args.word or not args.site:
            raise UsageError("certify needs a word and at least one --site (or --family)")
        w, sites = _word(args.word), args.site
    for s in sites:
        if not 0 <= s < len(w.letters):
            raise UsageError(f"site {s} out of range")
    if len(sites) == 1:
        cert = theorem_a_certify(w, sites[0], max_states=args.max_states)
        ok = cert.verify()
        return Outcome({"kind": "single", "verified": ok, **cert.to_json()}, OK if ok else INCONSISTENT)
    try:
        cert = accumulate_certify(w, sites, max_states=args.max_states)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = cert.verify()
    return Outcome({"kind": "accumulated", "verified": ok, **cert.to_json()}, OK if ok else INCONSISTENT)


def cmd_family(args) -> Outcome:
    kind = args.kind
    try:
        params = [int(p) for p in args.params]
        fam = {
            "9_42": lambda: FamilySpec("Nine42"),
            "chain": lambda: FamilySpec("Nine42Chain", tuple(params)),
            "bm": lambda: FamilySpec("BM", tuple(params)),
            "kn": lambda: FamilySpec("K_n", tuple(params)),
        }[kind]()
    except KeyError:
        raise UsageError(f"unknown family {kind!r}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    template = _template(args) if kind in ("bm", "kn") else None
    try:
        w, sites = fam.build(template)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return Outcome({"family": kind, "params": params, "word": w.to_json(), "text": w.to_text(),
                    "components": w.components(), "sites": sites})


def cmd_bm_suite(args) -> Outcome:
    report = bm_identity_suite(_template(args), _engines(args)["skein"])
    return Outcome(report.to_json())


def cmd_xu(args) -> Outcome:
    form = band3.xu_classify_small(_band(args.word), args.budget)
    if form is None:
        return Outcome({"word": args.word, "xu": None, "note": "budget exhausted or no parse"})
    return Outcome({"word": args.word, "xu": form.to_json()})


def cmd_lambda(args) -> Outcome:
    w = _band(args.word)
    res = band3.lambda_search(w, args.depth, args.max_states)
    if res is None:
        return Outcome({"word": w.to_text(), "lambda": None, "note": "no base word within budget"})
    ok = res.verify()
    return Outcome({"verified": ok, **res.to_json()}, OK if ok else INCONSISTENT)


def cmd_abcd_replay(args) -> Outcome:
    rows = band3.abcd_case_replay(args.max, args.depth, args.max_states)
    ok = all(r.consistent for r in rows)
    return Outcome({"consistent": ok, "cases": [r.to_json() for r in rows]}, OK if ok else INCONSISTENT)


def cmd_recurrence(args) -> Outcome:
    if args.y < 1 or args.z < 1 or args.xmax < 3:
        raise UsageError("need y, z >= 1 and --xmax >= 3")
    ok = alx.recurrence_check(args.y, args.z, args.xmax)
    return Outcome({"y": args.y, "z": args.z, "x_max": args.xmax, "holds": ok}, OK if ok else INCONSISTENT)


def cmd_alexander_table(args) -> Outcome:
    rows = [r for r in alx.LEADING_TERM_TABLE if args.family is None or r.kind == args.family]
    checks = alx.alexander_table(args.max, rows=rows)
    ok = all(c.passed for c in checks)
    return Outcome({"all_passed": ok, "rows": [c.to_json() for c in checks]}, OK if ok else INCONSISTENT)


COMMANDS: dict[str, Callable] = {
    "homfly": cmd_homfly,
    "alexander": cmd_alexander,
    "mfw": cmd_mfw,
    "certify": cmd_certify,
    "family": cmd_family,
    "bm-suite": cmd_bm_suite,
    "xu": cmd_xu,
    "lambda": cmd_lambda,
    "abcd-replay": cmd_abcd_replay,
    "recurrence": cmd_recurrence,
    "alexander-table": cmd_alexander_table,
}


# -- parsing and output ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON")
    common.add_argument("--cache-dir", default=None, help=f"cache directory (default: ${ENV_VAR} or the user cache)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--engine", choices=("skein", "hecke", "both"), default="skein")
    common.add_argument("--template", default=None, help="BM template JSON file")

    p = _Parser(prog="knotmfw", description="Braid, HOMFLYPT and Alexander computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("homfly", parents=[common])
    s.add_argument("word")
    s.add_argument("--check-skein", type=int, metavar="SITE")

    s = sub.add_parser("alexander", parents=[common])
    s.add_argument("word", help="braid word or band word")

    s = sub.add_parser("mfw", parents=[common])
    s.add_argument("word")
    s.add_argument("--minimal", action="store_true", help="the word's strand count is the braid index")

    s = sub.add_parser("certify", parents=[common])
    s.add_argument("word", nargs="?")
    s.add_argument("--site", type=int, action="append", default=[])
    s.add_argument("--family", help="9_42 or chain:N")
    s.add_argument("--max-states", type=int, default=4000)

    s = sub.add_parser("family", parents=[common])
    s.add_argument("kind", help="9_42 | chain N | bm X Y Z W | kn N")
    s.add_argument("params", nargs="*")

    sub.add_parser("bm-suite", parents=[common])

    s = sub.add_parser("xu", parents=[common])
    s.add_argument("word")
    s.add_argument("--budget", type=int, default=20000)

    s = sub.add_parser("lambda", parents=[common])
    s.add_argument("word")
    s.add_argument("--depth", type=int, default=40)
    s.add_argument("--max-states", type=int, default=20000)

    s = sub.add_parser("abcd-replay", parents=[common])
    s.add_argument("--max", type=int, default=3)
    s.add_argument("--depth", type=int, default=40)
    s.add_argument("--max-states", type=int, default=3000)

    s = sub.add_parser("recurrence", parents=[common])
    s.add_argument("--y", type=int, required=True)
    s.add_argument("--z", type=int, required=True)
    s.add_argument("--xmax", type=int, default=8)

    s = sub.add_parser("alexander-table", parents=[common])
    s.add_argument("--family", choices=("A", "B", "C", "D"))
    s.add_argument("--max", type=int, default=4)
    return p


def render(payload: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(payload, list):
        if all(not isinstance(x, (dict, list)) for x in payload):
            return pad + " ".join(map(str, payload))
        return "\n".join(render(x, indent) + ("\n" + pad + "-" if isinstance(x, dict) else "") for x in payload)
    return f"{pad}{payload}"


def run(argv: Sequence[str]) -> tuple[int, Any]:
    """Parse and execute; returns the exit code and the payload (or an
    error message on usage errors)."""
    try:
        args = build_parser().parse_args(list(argv))
        if args.command is None:
            raise UsageError(f"missing subcommand; choose from {', '.join(COMMANDS)}")
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        return USAGE, str(exc)
    return out.code, (out.payload, args.json)


def main(argv: Sequence[str] | None = None) -> int:
    code, result = run(sys.argv[1:] if argv is None else argv)
    if code == USAGE:
        print(f"knotmfw: {result}", file=sys.stderr)
        return code
    payload, as_json = result
    print(json.dumps(payload, indent=2) if as_json else render(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
