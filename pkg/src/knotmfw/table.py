"""Bundled reference table of knots and its validating loader.

Schema (JSON)::

    {"schema": 1, "convention": "...",
     "knots": [{"name": "3_1",
                "braid": {"strands": 2, "letters": [[1, 1], ...]},
                "homfly": [[coef, e_v, e_z], ...],
                "alexander": [[coef, e_t], ...],
                "braid_index": 2,
                "source": "...",
                "distinguished_site": 6}]}      # optional

Every entry is re-validated on load: the stored HOMFLYPT polynomial must
equal the one recomputed from the braid word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .braid import BraidWord
from .homfly import homfly_skein
from .laurent import LaurentPoly1, LaurentPoly2


class TableValidationError(ValueError):
    pass


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    braid: BraidWord
    homfly: LaurentPoly2
    alexander: LaurentPoly1
    braid_index: int
    source: str = ""
    distinguished_site: int | None = None

    def to_json(self) -> dict:
        d = {
            "name": self.name,
            "braid": self.braid.to_json(),
            "homfly": self.homfly.to_json(),
            "alexander": self.alexander.to_json(),
            "braid_index": self.braid_index,
            "source": self.source,
        }
        if self.distinguished_site is not None:
            d["distinguished_site"] = self.distinguished_site
        return d


def default_table_path() -> Path:
    return Path(str(resources.files("knotmfw") / "data" / "knot_table.json"))


def _parse_entry(raw: dict) -> KnotTableEntry:
    name = raw.get("name", "<unnamed>")
    try:
        return KnotTableEntry(
            name=str(raw["name"]),
            braid=BraidWord.from_json(raw["braid"]),
            homfly=LaurentPoly2.from_json(raw["homfly"]),
            alexander=LaurentPoly1.from_json(raw["alexander"]),
            braid_index=int(raw["braid_index"]),
            source=str(raw.get("source", "")),
            distinguished_site=raw.get("distinguished_site"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise TableValidationError(f"entry {name}: cannot parse ({exc})") from exc


def validate_entry(e: KnotTableEntry) -> None:
    if e.braid.components() != 1:
        raise TableValidationError(f"entry {e.name}: braid closure is not a knot")
    got = homfly_skein(e.braid)
    if got != e.homfly:
        raise TableValidationError(f"entry {e.name}: HOMFLYPT mismatch, stored {e.homfly}, recomputed {got}")
    if abs(e.alexander.evaluate(1)) != 1:
        raise TableValidationError(f"entry {e.name}: Alexander polynomial has |Delta(1)| != 1")
    if e.braid_index > e.braid.strands:
        raise TableValidationError(f"entry {e.name}: braid index exceeds the strand count of its word")
    s = e.distinguished_site
    if s is not None and not (isinstance(s, int) and 0 <= s < len(e.braid.letters)):
        raise TableValidationError(f"entry {e.name}: distinguished site {s!r} out of range")


def load_table(path: str | Path | None = None, validate: bool = True) -> list[KnotTableEntry]:
    path = Path(path) if path is not None else default_table_path()
    text = path.read_text()
    if not text.strip():
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableValidationError(f"{path}: not valid JSON ({exc})") from exc
    raw = data.get("knots", []) if isinstance(data, dict) else data
    entries = [_parse_entry(r) for r in raw]
    if validate:
        for e in entries:
            validate_entry(e)
    return entries


@lru_cache(maxsize=None)
def _bundled() -> dict[str, KnotTableEntry]:
    return {e.name: e for e in load_table()}


def table_entry(name: str) -> KnotTableEntry:
    try:
        return _bundled()[name]
    except KeyError:
        raise KeyError(f"knot {name!r} is not in the bundled table") from None
