"""Print the lambda value and verdict for every instantiated NP case.

    python scripts/abcd_table.py --kl-max 3 --max-states 3000
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from knotmfw.band3 import abcd_case_replay


@dataclass
class Config:
    kl_max: int = 3
    depth: int = 40
    max_states: int = 3000


def main(cfg: Config) -> int:
    rows = abcd_case_replay(cfg.kl_max, cfg.depth, cfg.max_states)
    print(f"{'case':6} {'k':>2} {'l':>2} {'len':>4}  {'lambda':>6}  verdict")
    for r in rows:
        lam = "-" if r.lam is None else str(r.lam)
        print(f"{r.case:6} {r.k:2d} {r.l:2d} {len(r.word):4d}  {lam:>6}  {r.verdict}")
    tally = Counter(r.verdict.split(" (")[0] for r in rows)
    print()
    for verdict, n in tally.most_common():
        print(f"{n:4d}  {verdict}")
    return 0 if all(r.consistent for r in rows) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kl-max", type=int, default=Config.kl_max)
    ap.add_argument("--depth", type=int, default=Config.depth)
    ap.add_argument("--max-states", type=int, default=Config.max_states)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
