"""On-disk polynomial cache.

Records live in one SQLite file inside the cache directory.  Keys are
SHA-256 digests of the canonical JSON of the word, the engine tag and the
engine version, so bumping :data:`ENGINE_VERSION` orphans old records
instead of serving them.  Readers go straight to SQLite; writers also take
an advisory lock on a sibling ``.lock`` file so concurrent CLI processes
serialize their inserts.
"""

from __future__ import annotations

import hashlib
import json
import os
import sqlite3
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from filelock import FileLock

from .braid import BraidWord
from .laurent import LaurentPoly2

ENGINE_VERSION = "1"
ENV_VAR = "KNOTMFW_CACHE_DIR"
_DB_NAME = "polys.sqlite"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "knotmfw"


def cache_key(w: BraidWord, engine: str, version: str = ENGINE_VERSION) -> str:
    payload = json.dumps({"word": w.to_json(), "engine": engine, "version": version}, sort_keys=True,
                         separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


@dataclass(frozen=True)
class CacheRecord:
    key: str
    engine: str
    version: str
    value: LaurentPoly2

    def to_json(self) -> dict:
        return {"key": self.key, "engine": self.engine, "version": self.version, "value": self.value.to_json()}


class PolyCache:
    def __init__(self, directory: str | Path | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.directory.mkdir(parents=True, exist_ok=True)
        self.path = self.directory / _DB_NAME
        self._lock = FileLock(str(self.path) + ".lock")
        with self._lock, self._connect() as db:
            db.execute("CREATE TABLE IF NOT EXISTS polys (key TEXT PRIMARY KEY, engine TEXT, version TEXT, value TEXT)")

    def _connect(self) -> sqlite3.Connection:
        return sqlite3.connect(self.path, timeout=30)

    def get(self, w: BraidWord, engine: str) -> CacheRecord | None:
        key = cache_key(w, engine)
        with self._connect() as db:
            row = db.execute("SELECT engine, version, value FROM polys WHERE key = ?", (key,)).fetchone()
        if row is None:
            return None
        return CacheRecord(key, row[0], row[1], LaurentPoly2.from_json(json.loads(row[2])))

    def put(self, w: BraidWord, engine: str, value: LaurentPoly2) -> CacheRecord:
        rec = CacheRecord(cache_key(w, engine), engine, ENGINE_VERSION, value)
        with self._lock, self._connect() as db:
            db.execute("INSERT OR REPLACE INTO polys VALUES (?, ?, ?, ?)",
                       (rec.key, engine, ENGINE_VERSION, json.dumps(value.to_json())))
        return rec

    def clear(self) -> None:
        with self._lock, self._connect() as db:
            db.execute("DELETE FROM polys")

    def __len__(self) -> int:
        with self._connect() as db:
            return db.execute("SELECT COUNT(*) FROM polys").fetchone()[0]

    def cached(self, engine: str, fn: Callable[[BraidWord], LaurentPoly2]) -> Callable[[BraidWord], LaurentPoly2]:
        """Wrap ``fn`` so results are read from and written to the cache."""

        def wrapper(w: BraidWord) -> LaurentPoly2:
            hit = self.get(w, engine)
            if hit is not None:
                return hit.value
            value = fn(w)
            self.put(w, engine, value)
            return value

        wrapper.__name__ = getattr(fn, "__name__", "cached")
        return wrapper
