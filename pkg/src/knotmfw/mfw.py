"""Morton-Franks-Williams bounds, deficits and destabilization certificates."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .braid import (
    BraidWord,
    ReductionTrace,
    exponent_sum,
    isotopy_reduce,
    skein_triple,
)
from .laurent import LaurentPoly2


class MfwInconsistency(ArithmeticError):
    """The MFW inequality failed: the polynomial cannot belong to the word."""


@dataclass(frozen=True)
class MfwReport:
    c: int
    b: int
    d_minus: int
    d_plus: int
    lower_bound_braid_index: int | Fraction
    D_plus: int
    D_minus: int
    deficit_lower_bound: Fraction
    braid_index_is_minimal: bool = False

    @property
    def bounds(self) -> tuple[int, int]:
        return self.c - self.b + 1, self.c + self.b - 1

    @property
    def deficit_label(self) -> str:
        return "deficit" if self.braid_index_is_minimal else "lower bound"

    def to_json(self) -> dict:
        lb = self.lower_bound_braid_index
        return {
            "c": self.c,
            "b": self.b,
            "d_minus": self.d_minus,
            "d_plus": self.d_plus,
            "bounds": list(self.bounds),
            "lower_bound_braid_index": lb if isinstance(lb, int) else str(lb),
            "D_plus": self.D_plus,
            "D_minus": self.D_minus,
            "deficit": str(self.deficit_lower_bound),
            "deficit_kind": self.deficit_label,
        }


def braid_index_lower_bound(P: LaurentPoly2) -> int | Fraction:
    """``(d_+ - d_-)/2 + 1``; a Fraction when the spread is odd (links)."""
    if P.is_zero():
        raise ValueError("zero polynomial has no v-degrees")
    lo, hi = P.v_degrees()
    val = Fraction(hi - lo, 2) + 1
    return int(val) if val.denominator == 1 else val


def mfw_report(w: BraidWord, P: LaurentPoly2, braid_index_is_minimal: bool = False) -> MfwReport:
    if P.is_zero():
        raise MfwInconsistency("HOMFLYPT polynomial of a link is never zero")
    c, b = exponent_sum(w), w.strands
    d_minus, d_plus = P.v_degrees()
    lo, hi = c - b + 1, c + b - 1
    if not lo <= d_minus <= d_plus <= hi:
        raise MfwInconsistency(f"MFW violated for {w}: need {lo} <= {d_minus} <= {d_plus} <= {hi}")
    Dp, Dm = hi - d_plus, d_minus - lo
    return MfwReport(
        c, b, d_minus, d_plus, braid_index_lower_bound(P), Dp, Dm, Fraction(Dp + Dm, 2), braid_index_is_minimal
    )


# -- single-crossing certificates ---------------------------------------------------

@dataclass(frozen=True)
class TheoremACertificate:
    """Destabilization data for the two non-original members of a skein
    triple; certifies ``D_plus >= 2p`` and ``D_minus >= 2n``."""

    word: BraidWord
    site: int
    original: str
    p: int
    n: int
    pos_traces: dict = field(default_factory=dict)  # member -> ReductionTrace
    neg_traces: dict = field(default_factory=dict)

    @property
    def D_plus_bound(self) -> int:
        return 2 * self.p

    @property
    def D_minus_bound(self) -> int:
        return 2 * self.n

    def verify(self) -> bool:
        """Replay every trace and re-derive ``p`` and ``n`` from them."""
        t = skein_triple(self.word, self.site)
        others = t.others()
        if set(others) != set(self.pos_traces) or set(others) != set(self.neg_traces):
            return False
        for name, w in others.items():
            for tr in (self.pos_traces[name], self.neg_traces[name]):
                if tr.source != w or tr.replay() != tr.result:
                    return False
        p = min(tr.pos_destabs for tr in self.pos_traces.values())
        n = min(tr.neg_destabs for tr in self.neg_traces.values())
        return p >= self.p and n >= self.n

    def to_json(self) -> dict:
        return {
            "word": self.word.to_json(),
            "site": self.site,
            "original": self.original,
            "p": self.p,
            "n": self.n,
            "claims": {"D_plus_at_least": self.D_plus_bound, "D_minus_at_least": self.D_minus_bound},
            "pos_traces": {k: v.to_json() for k, v in self.pos_traces.items()},
            "neg_traces": {k: v.to_json() for k, v in self.neg_traces.items()},
        }

    @classmethod
    def from_json(cls, d: dict) -> "TheoremACertificate":
        return cls(
            BraidWord.from_json(d["word"]),
            d["site"],
            d["original"],
            d["p"],
            d["n"],
            {k: ReductionTrace.from_json(v) for k, v in d["pos_traces"].items()},
            {k: ReductionTrace.from_json(v) for k, v in d["neg_traces"].items()},
        )


def _window(sites: Iterable[int], radius: int, length: int) -> list[int]:
    out: set[int] = set()
    for s in sites:
        out.update(range(max(0, s - radius), min(length, s + radius + 1)))
    return sorted(out)


def theorem_a_certify(w: BraidWord, site: int, max_states: int = 2000, radius: int | None = None) -> TheoremACertificate:
    """Skein triple at ``site``; the two other members are reduced by
    rotation, free cancellation, destabilization and a bounded search over
    braid relations (restricted to ``radius`` letters around the site if
    given).  ``p``/``n`` are the minima of the positive/negative counts."""
    t = skein_triple(w, site)
    positions = None if radius is None else _window([site], radius, len(w.letters))
    pos_traces, neg_traces = {}, {}
    for name, member in t.others().items():
        # the smoothed word is one letter shorter; shift windows past the site
        pp = positions
        if positions is not None and name == "zero":
            pp = sorted({q - (q > site) for q in positions if q < len(member.letters)})
        pos_traces[name] = isotopy_reduce(member, 1, pp, max_states)
        neg_traces[name] = isotopy_reduce(member, -1, pp, max_states)
    p = min(tr.pos_destabs for tr in pos_traces.values())
    n = min(tr.neg_destabs for tr in neg_traces.values())
    return TheoremACertificate(w, site, t.original, p, n, pos_traces, neg_traces)


# -- several crossings at once ----------------------------------------------------

@dataclass(frozen=True)
class AccumulationCertificate:
    word: BraidWord
    sites: tuple[int, ...]
    branches: tuple[tuple[str, ReductionTrace], ...]  # assignment, trace
    min_destabs: int

    @property
    def D_plus_bound(self) -> int:
        return 2 * self.min_destabs

    @property
    def deficit_lower_bound(self) -> Fraction:
        return Fraction(self.D_plus_bound, 2)

    def verify(self) -> bool:
        for assignment, tr in self.branches:
            if tr.source != assignment_word(self.word, self.sites, assignment):
                return False
            if tr.replay() != tr.result or tr.pos_destabs < self.min_destabs:
                return False
        return len(self.branches) == 2 ** len(self.sites)

    def to_json(self) -> dict:
        return {
            "word": self.word.to_json(),
            "sites": list(self.sites),
            "min_destabs": self.min_destabs,
            "claims": {"D_plus_at_least": self.D_plus_bound, "deficit_at_least": str(self.deficit_lower_bound)},
            "branches": [{"assignment": a, "trace": tr.to_json()} for a, tr in self.branches],
        }


def assignment_word(w: BraidWord, sites: tuple[int, ...], assignment: str) -> BraidWord:
    """Switch (``-``) or smooth (``0``) the letter at each site."""
    letters = list(w.letters)
    for s, a in zip(sites, assignment):
        if a == "-":
            letters[s] = -letters[s]
        elif a == "0":
            letters[s] = None
        else:
            raise ValueError(f"assignment symbol must be '-' or '0', got {a!r}")
    return BraidWord(w.strands, tuple(x for x in letters if x is not None))


def accumulate_certify(
    w: BraidWord, sites: Iterable[int], radius: int = 3, max_states: int = 4000
) -> AccumulationCertificate:
    """Expand the skein relation at every site (never the ``+`` branch, the
    original already plays K+) and bound ``d_+`` over all branches.

    Branch ``a`` has ``c`` lowered by its weight (2 per ``-``, 1 per ``0``)
    while the expansion multiplies by ``v`` to that same weight, so
    ``d_+(P_w) <= c + b - 1 - 2 * min_a destabs(a)``.
    """
    sites = tuple(sorted(set(sites)))
    for s in sites:
        if not 0 <= s < len(w.letters):
            raise IndexError(f"site {s} out of range")
        if w.letters[s] < 0:
            raise ValueError(f"site {s} carries a negative letter")
    branches = []
    for combo in itertools.product("-0", repeat=len(sites)):
        a = "".join(combo)
        word = assignment_word(w, sites, a)
        # positions of the former sites in the derived word
        moved = [s - sum(1 for t, c in zip(sites, a) if c == "0" and t < s) for s in sites]
        window = _window(moved, radius, len(word.letters))
        tr = isotopy_reduce(word, 1, window, max_states, target=len(sites))
        branches.append((a, tr))
    m = min(tr.pos_destabs for _, tr in branches) if branches else 0
    return AccumulationCertificate(w, sites, tuple(branches), m)
