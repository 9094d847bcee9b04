"""Leading Alexander coefficients of the band families and of K_n.

Prints every knot instance of the leading-term table up to ``--max`` with
both engines, then the K_n values for the shipped template.

    python scripts/leading_terms_survey.py --max 5 --kn 2 4 6 8
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from knotmfw.alexander import KN_LEADING_TERMS, alexander_table, kn_alexander, leading_terms


@dataclass
class Config:
    max: int = 4
    depth: int = 4
    kn: list[int] = field(default_factory=lambda: [2, 4, 6])


def main(cfg: Config) -> None:
    for c in alexander_table(cfg.max, depth=cfg.depth):
        mark = "ok " if c.passed else "BAD"
        print(f"{mark} {c.row:12} {str(c.params):16} seifert {list(c.seifert)}  burau {list(c.burau)}")
    print()
    for n in cfg.kn:
        got = leading_terms(kn_alexander(n), cfg.depth)
        print(f"K_{n}: {got}  (expected row {list(KN_LEADING_TERMS)})")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=Config.max)
    ap.add_argument("--depth", type=int, default=Config.depth)
    ap.add_argument("--kn", type=int, nargs="*", default=[2, 4, 6])
    main(Config(**vars(ap.parse_args())))
