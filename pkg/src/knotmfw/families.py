"""Generators for the knot families studied here: the 9_42 representative,
linked chains of copies, and the four-slot BM template with its knots K_n."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable

from .braid import BraidWord
from .homfly import homfly_skein
from .laurent import LaurentPoly2
from .table import TableValidationError, table_entry

SLOTS = ("X", "Y", "Z", "W")


def knot_9_42_braid() -> tuple[BraidWord, int]:
    """The table's 4-braid for 9_42 with its distinguished (certificate)
    site, re-validated against the table polynomial."""
    e = table_entry("9_42")
    if homfly_skein(e.braid) != e.homfly:
        raise TableValidationError("9_42 word does not reproduce the table polynomial")
    if e.distinguished_site is None or e.braid.letters[e.distinguished_site] < 0:
        raise TableValidationError("9_42 entry needs a positive distinguished site")
    return e.braid, e.distinguished_site


def full_twist(pair: tuple[int, int], half_twists: int) -> list[int]:
    """``|k|`` copies of ``sigma_i^{sign k}`` for the pair ``(i, i+1)``."""
    i, j = pair
    if j != i + 1 or i < 1:
        raise ValueError(f"{pair} is not an adjacent strand pair")
    return [i if half_twists > 0 else -i] * abs(half_twists)


def linked_copies(base: BraidWord, n: int, site: int, half_twists: int = 4) -> tuple[BraidWord, list[int]]:
    """``n`` blocks carrying ``base`` side by side, block ``k`` joined to
    block ``k+1`` by ``half_twists`` crossings between their adjacent
    boundary strands.  Returns the word and the image of ``site`` in each
    block."""
    if n < 1:
        raise ValueError("need at least one copy")
    m = base.strands
    letters: list[int] = []
    sites = []
    for k in range(n):
        if k:
            letters += full_twist((k * m, k * m + 1), half_twists)
        sites.append(len(letters) + site)
        shift = k * m
        letters += [x + shift if x > 0 else x - shift for x in base.letters]
    return BraidWord(n * m, tuple(letters)), sites


# -- the BM template ----------------------------------------------------------------

@dataclass(frozen=True)
class BMTemplate:
    """Skeleton items are ``("letter", signed_generator)`` or
    ``("slot", tag, generator)``; a slot with parameter ``k`` expands to
    ``|k|`` copies of its generator with the sign of ``k``."""

    strands: int
    skeleton: tuple[tuple, ...]
    certificate_site: int | None = None
    notes: str = ""

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("template needs a positive strand count")
        tags = []
        for item in self.skeleton:
            if item[0] == "letter":
                x = item[1]
                if x == 0 or abs(x) >= self.strands:
                    raise ValueError(f"fixed letter {x} out of range")
            elif item[0] == "slot":
                if item[1] not in SLOTS or not 1 <= item[2] < self.strands:
                    raise ValueError(f"bad slot {item}")
                tags.append(item[1])
            else:
                raise ValueError(f"unknown skeleton item {item}")
        missing = set(SLOTS) - set(tags)
        if missing:
            raise ValueError(f"template lacks slots {sorted(missing)}")
        cs = self.certificate_site
        if cs is not None and not (0 <= cs < len(self.skeleton) and self.skeleton[cs][0] == "letter"):
            raise ValueError("certificate site must index a fixed letter of the skeleton")

    @classmethod
    def from_json(cls, data: dict | str) -> "BMTemplate":
        if isinstance(data, str):
            data = json.loads(data)
        items = []
        for it in data["skeleton"]:
            if "letter" in it:
                i, s = it["letter"]
                if s not in (1, -1):
                    raise ValueError("letter sign must be +-1")
                items.append(("letter", i * s))
            else:
                items.append(("slot", it["slot"], int(it["index"])))
        return cls(int(data["strands"]), tuple(items), data.get("certificate_site"), data.get("notes", ""))

    def to_json(self) -> dict:
        sk = []
        for it in self.skeleton:
            if it[0] == "letter":
                sk.append({"letter": [abs(it[1]), 1 if it[1] > 0 else -1]})
            else:
                sk.append({"slot": it[1], "index": it[2]})
        return {"strands": self.strands, "skeleton": sk, "certificate_site": self.certificate_site, "notes": self.notes}

    @classmethod
    def load(cls, path: str | Path) -> "BMTemplate":
        return cls.from_json(Path(path).read_text())

    def expand(self, x: int, y: int, z: int, w: int) -> tuple[BraidWord, int | None]:
        """Word for the parameters and the position of the certificate site."""
        params = dict(zip(SLOTS, (x, y, z, w)))
        letters: list[int] = []
        where = None
        for k, it in enumerate(self.skeleton):
            if it[0] == "letter":
                if k == self.certificate_site:
                    where = len(letters)
                letters.append(it[1])
            else:
                p = params[it[1]]
                letters += [it[2] if p > 0 else -it[2]] * abs(p)
        return BraidWord(self.strands, tuple(letters)), where


def default_template_path() -> Path:
    return Path(str(resources.files("knotmfw") / "data" / "bm_template.json"))


@lru_cache(maxsize=None)
def default_template() -> BMTemplate:
    return BMTemplate.load(default_template_path())


def bm_diagram(t: BMTemplate, x: int, y: int, z: int, w: int) -> BraidWord:
    return t.expand(x, y, z, w)[0]


#: (knot, (x, y, z, w)) pairs the BM template must reproduce
BM_IDENTITIES: tuple[tuple[str, tuple[int, int, int, int]], ...] = (
    ("9_42", (-1, 1, -2, -1)),
    ("9_42", (-1, -2, -2, 2)),
    ("9_49", (-1, 1, 1, 2)),
    ("10_132", (-1, -2, -2, -2)),
    ("10_150", (3, -2, -2, 2)),
    ("10_150", (-1, 2, -2, 2)),
    ("10_150", (-1, -2, 2, 2)),
    ("10_150", (-1, 1, 2, -1)),
    ("10_150", (3, 1, -2, -1)),
    ("10_156", (-1, 1, 1, -2)),
)


@dataclass(frozen=True)
class IdentityResult:
    knot: str
    params: tuple[int, int, int, int]
    passed: bool
    mirrored: bool  # matched the mirror image of the table entry
    detail: str = ""

    def to_json(self) -> dict:
        return {"knot": self.knot, "params": list(self.params), "passed": self.passed,
                "mirrored": self.mirrored, "detail": self.detail}


@dataclass(frozen=True)
class IdentityReport:
    results: tuple[IdentityResult, ...] = field(default=())

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def all_passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    @property
    def status(self) -> str:
        return "template verified" if self.all_passed else "template unresolved"

    def to_json(self) -> dict:
        return {"status": self.status, "passed": self.passed, "total": len(self.results),
                "results": [r.to_json() for r in self.results]}


def bm_identity_suite(t: BMTemplate | None, engine: Callable[[BraidWord], LaurentPoly2] = homfly_skein) -> IdentityReport:
    """HOMFLYPT check of every identity against the table, up to mirror
    (the table fixes one chirality per knot, the identities do not)."""
    out = []
    for name, params in BM_IDENTITIES:
        if t is None:
            out.append(IdentityResult(name, params, False, False, "no template"))
            continue
        try:
            w = bm_diagram(t, *params)
        except ValueError as exc:
            out.append(IdentityResult(name, params, False, False, str(exc)))
            continue
        want = table_entry(name).homfly
        if w.components() != 1:
            out.append(IdentityResult(name, params, False, False, "closure is not a knot"))
            continue
        got = engine(w)
        if got == want:
            out.append(IdentityResult(name, params, True, False))
        elif got.mirror() == want:
            out.append(IdentityResult(name, params, True, True))
        else:
            out.append(IdentityResult(name, params, False, False, f"got {got}"))
    return IdentityReport(tuple(out))


# -- family specs ---------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    name: str  # "Nine42" | "Nine42Chain" | "BM" | "K_n"
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.name == "Nine42":
            if self.params:
                raise ValueError("9_42 takes no parameters")
        elif self.name == "Nine42Chain":
            if len(self.params) != 1 or self.params[0] < 1:
                raise ValueError("chain needs n >= 1")
        elif self.name == "BM":
            if len(self.params) != 4:
                raise ValueError("BM needs four parameters")
        elif self.name == "K_n":
            if len(self.params) != 1 or self.params[0] < 2:
                raise ValueError("K_n needs n >= 2")
        else:
            raise ValueError(f"unknown family {self.name!r}")

    def build(self, template: BMTemplate | None = None) -> tuple[BraidWord, list[int]]:
        """The word and its certificate sites."""
        if self.name == "Nine42":
            w, s = knot_9_42_braid()
            return w, [s]
        if self.name == "Nine42Chain":
            w, s = knot_9_42_braid()
            return linked_copies(w, self.params[0], s)
        t = template or default_template()
        params = self.params if self.name == "BM" else kn_params(self.params[0])
        w, site = t.expand(*params)
        return w, ([] if site is None else [site])


def kn_params(n: int) -> tuple[int, int, int, int]:
    if n < 2:
        raise ValueError("K_n needs n >= 2")
    return (-1, -2, n, 2)


def kn_word(n: int, template: BMTemplate | None = None) -> BraidWord:
    return bm_diagram(template or default_template(), *kn_params(n))
