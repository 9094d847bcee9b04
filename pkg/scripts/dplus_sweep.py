"""Sweep the BM template parameters and record where the single-crossing
certificate at the template's site reaches D+ >= 2.

    python scripts/dplus_sweep.py --lo -3 --hi 3 --max-states 2000 --out sweep.json
"""

from __future__ import annotations

import argparse
import itertools
import json
import time
from dataclasses import asdict, dataclass

from knotmfw.families import BMTemplate, default_template
from knotmfw.mfw import theorem_a_certify


@dataclass
class Config:
    lo: int = -3
    hi: int = 3
    max_states: int = 300
    template: str | None = None
    out: str | None = None


def sweep(cfg: Config) -> dict:
    t = BMTemplate.load(cfg.template) if cfg.template else default_template()
    rows, start = [], time.perf_counter()
    for params in itertools.product(range(cfg.lo, cfg.hi + 1), repeat=4):
        w, site = t.expand(*params)
        if site is None or w.components() != 1:
            continue
        cert = theorem_a_certify(w, site, max_states=cfg.max_states)
        rows.append({"params": list(params), "p": cert.p, "n": cert.n})
    ok = sum(r["p"] >= 1 for r in rows)
    return {"config": asdict(cfg), "knots": len(rows), "certified": ok,
            "seconds": round(time.perf_counter() - start, 1), "rows": rows}


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=int, default=Config.lo)
    ap.add_argument("--hi", type=int, default=Config.hi)
    ap.add_argument("--max-states", type=int, default=Config.max_states)
    ap.add_argument("--template")
    ap.add_argument("--out")
    res = sweep(Config(**vars(ap.parse_args())))
    print(f"D+ >= 2 certified on {res['certified']}/{res['knots']} knots in {res['seconds']}s")
    if res["config"]["out"]:
        with open(res["config"]["out"], "w") as fh:
            json.dump(res, fh, indent=1)
