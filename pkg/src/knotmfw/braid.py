"""Braid words, closure combinatorics and Markov-move mechanics.

A :class:`BraidWord` is a strand count together with a flat sequence of
signed generator indices: ``+i`` stands for ``sigma_i`` and ``-i`` for its
inverse.  Everything here is a pure function of immutable values.
"""

from __future__ import annotations

import heapq
import itertools
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .laurent import LaurentPoly1


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise ValueError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(f"letter {x} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_pairs(cls, strands: int, pairs: Iterable[Sequence[int]]) -> "BraidWord":
        letters = []
        for i, s in pairs:
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +-1, got {s!r}")
            letters.append(i * s)
        return cls(strands, tuple(letters))

    def pairs(self) -> list[tuple[int, int]]:
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sum(self) -> int:
        return exponent_sum(self)

    def components(self) -> int:
        return components(self)

    def to_text(self) -> str:
        body = " ".join(f"s{abs(x)}" if x > 0 else f"s{abs(x)}^-1" for x in self.letters)
        return f"{self.strands}: {body}" if body else f"{self.strands}:"

    @classmethod
    def from_text(cls, text: str) -> "BraidWord":
        m = re.fullmatch(r"\s*(\d+)\s*:(.*)", text, flags=re.S)
        if not m:
            raise ValueError(f"braid word must look like 'n: s1 s2^-1 ...', got {text!r}")
        letters = []
        for tok in m.group(2).split():
            lm = re.fullmatch(r"s(\d+)(\^-1)?", tok)
            if not lm:
                raise ValueError(f"bad generator {tok!r}")
            i = int(lm.group(1))
            letters.append(-i if lm.group(2) else i)
        return cls(int(m.group(1)), tuple(letters))

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data: dict | str) -> "BraidWord":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_pairs(int(data["strands"]), data["letters"])

    def __str__(self) -> str:
        return self.to_text()


def parse_braid(text: str) -> BraidWord:
    """Accept either the text form or the JSON form."""
    text = text.strip()
    if text.startswith("{"):
        return BraidWord.from_json(text)
    return BraidWord.from_text(text)


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Image of each start position (0-based) after reading the whole word."""
    pos_of = list(range(w.strands))  # strand s currently sits at pos_of[s]
    at = list(range(w.strands))  # at[p] is the strand at position p
    for x in w.letters:
        i = abs(x) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        pos_of[a], pos_of[b] = i + 1, i
    return tuple(pos_of)


def components(w: BraidWord) -> int:
    perm = permutation(w)
    seen = [False] * w.strands
    count = 0
    for s in range(w.strands):
        if not seen[s]:
            count += 1
            while not seen[s]:
                seen[s] = True
                s = perm[s]
    return count


def _free_reduce_letters(letters: Sequence[int]) -> list[int]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def free_reduce(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(_free_reduce_letters(w.letters)))


def cyclic_rotate(w: BraidWord, k: int) -> BraidWord:
    if not w.letters:
        return w
    k %= len(w.letters)
    return BraidWord(w.strands, w.letters[k:] + w.letters[:k])


def cyclically_reduce(w: BraidWord) -> BraidWord:
    """Free reduction followed by cancellation across the ends of the word."""
    letters = _free_reduce_letters(w.letters)
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return BraidWord(w.strands, tuple(letters[lo:hi]))


def stabilize(w: BraidWord, sign: int) -> BraidWord:
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    n = w.strands
    return BraidWord(n + 1, w.letters + (sign * n,))


def _remove_strand_letter(w: BraidWord, pos: int) -> BraidWord:
    j = abs(w.letters[pos])
    rest = w.letters[pos + 1 :] + w.letters[:pos]
    shifted = tuple(x if abs(x) < j else (x - 1 if x > 0 else x + 1) for x in rest)
    return BraidWord(w.strands - 1, shifted)


def destabilize_at(w: BraidWord, index: int, sign: int) -> BraidWord | None:
    """Remove the unique occurrence of ``sigma_index^sign`` and merge strands
    ``index`` and ``index + 1``.

    For ``index == n - 1`` this is the classical Markov destabilization.  For
    an interior index the word splits as ``L sigma_j^e R`` with ``L`` and
    ``R`` on complementary strand sets, whose closure is the connected sum
    ``closure(L) # closure(R)``; that link is also the closure of ``L R'``
    on one strand fewer, with the same change of ``(c, b)``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    if w.strands < 2 or not 1 <= index <= w.strands - 1:
        return None
    r = cyclically_reduce(w)
    hits = [p for p, x in enumerate(r.letters) if abs(x) == index]
    if len(hits) != 1 or r.letters[hits[0]] != sign * index:
        return None
    return _remove_strand_letter(r, hits[0])


def destabilize(w: BraidWord, sign: int) -> BraidWord | None:
    """Markov destabilization on the last strand, or ``None``."""
    return destabilize_at(w, w.strands - 1, sign)


# -- reduction traces -----------------------------------------------------------

# -- braid relations ------------------------------------------------------------------

def _burau2(x: int) -> tuple:
    """Reduced Burau matrix of a B_3 generator (+-1, +-2); faithful on B_3."""
    t = LaurentPoly1.monomial(1, 1)
    ti = LaurentPoly1.monomial(1, -1)
    one, zero = LaurentPoly1.one(), LaurentPoly1.zero()
    return {
        1: ((-t, one), (zero, one)),
        -1: ((-ti, ti), (zero, one)),
        2: ((one, zero), (t, -t)),
        -2: ((one, zero), (one, -ti)),
    }[x]


def _mat_mul(a, b):
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(2)), LaurentPoly1.zero()) for j in range(2))
        for i in range(2)
    )


@lru_cache(maxsize=None)
def three_letter_relations() -> dict[tuple[int, int, int], tuple[tuple[int, int, int], ...]]:
    """All length-preserving identities between 3-letter words in
    ``sigma_1^{+-1}, sigma_2^{+-1}`` (classes of equal Burau image)."""
    classes: dict = {}
    for word in itertools.product((1, -1, 2, -2), repeat=3):
        m = _burau2(word[0])
        for x in word[1:]:
            m = _mat_mul(m, _burau2(x))
        classes.setdefault(m, []).append(word)
    out = {}
    for words in classes.values():
        for a in words:
            others = tuple(b for b in words if b != a)
            if others:
                out[a] = others
    return out


def _relation_moves(letters: tuple[int, ...], positions: Iterable[int] | None = None):
    """Yield ``(pos, replacement)`` for every braid relation applicable at a
    window starting at ``pos`` (far commutations and 3-letter identities)."""
    L = len(letters)
    rel3 = three_letter_relations()
    for p in (range(L) if positions is None else positions):
        if p + 2 <= L:
            a, b = letters[p], letters[p + 1]
            if abs(abs(a) - abs(b)) >= 2:
                yield p, (b, a)
        if p + 3 <= L:
            win = letters[p : p + 3]
            gens = sorted({abs(x) for x in win})
            if len(gens) == 2 and gens[1] == gens[0] + 1:
                i = gens[0]
                key = tuple((1 if abs(x) == i else 2) * (1 if x > 0 else -1) for x in win)
                for r in rel3.get(key, ()):
                    yield p, tuple((i if abs(y) == 1 else i + 1) * (1 if y > 0 else -1) for y in r)


def _is_relation(window: tuple[int, ...], replacement: tuple[int, ...]) -> bool:
    return any(r == replacement for p, r in _relation_moves(window, [0]) if p == 0)


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # "free-cancel" | "cyclic-rotate" | "relation" | "destab"
    offset: int = 0  # rotation amount, or window start of a relation
    sign: int = 0  # destab sign
    index: int = 0  # generator merged by destab
    replacement: tuple[int, ...] = ()  # new letters of a relation window

    def to_json(self) -> dict:
        if self.kind == "free-cancel":
            return {"kind": self.kind}
        if self.kind == "cyclic-rotate":
            return {"kind": self.kind, "offset": self.offset}
        if self.kind == "relation":
            return {"kind": self.kind, "offset": self.offset, "replacement": list(self.replacement)}
        return {"kind": self.kind, "sign": self.sign, "index": self.index}

    @classmethod
    def from_json(cls, d: dict) -> "ReductionStep":
        return cls(
            d["kind"], d.get("offset", 0), d.get("sign", 0), d.get("index", 0), tuple(d.get("replacement", ()))
        )


def apply_step(w: BraidWord, step: ReductionStep) -> BraidWord:
    if step.kind == "free-cancel":
        return free_reduce(w)
    if step.kind == "cyclic-rotate":
        return cyclic_rotate(w, step.offset)
    if step.kind == "relation":
        p, r = step.offset, step.replacement
        window = w.letters[p : p + len(r)]
        if len(window) != len(r) or not _is_relation(window, r):
            raise ValueError(f"{window} -> {r} is not a braid relation")
        return BraidWord(w.strands, w.letters[:p] + r + w.letters[p + len(r) :])
    if step.kind == "destab":
        # the destabilized letter is the last letter of the word
        if not w.letters or w.letters[-1] != step.sign * step.index:
            raise ValueError(f"destab step {step} does not match word {w}")
        if sum(1 for x in w.letters if abs(x) == step.index) != 1:
            raise ValueError(f"generator {step.index} is not unique in {w}")
        return _remove_strand_letter(w, len(w.letters) - 1)
    raise ValueError(f"unknown step kind {step.kind!r}")


@dataclass(frozen=True)
class ReductionTrace:
    source: BraidWord
    result: BraidWord
    pos_destabs: int
    neg_destabs: int
    steps: tuple[ReductionStep, ...] = field(default=())

    def replay(self) -> BraidWord:
        w = self.source
        for step in self.steps:
            w = apply_step(w, step)
        return w

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "result": self.result.to_json(),
            "pos_destabs": self.pos_destabs,
            "neg_destabs": self.neg_destabs,
            "steps": [s.to_json() for s in self.steps],
        }

    @classmethod
    def from_json(cls, d: dict) -> "ReductionTrace":
        return cls(
            BraidWord.from_json(d["source"]),
            BraidWord.from_json(d["result"]),
            d["pos_destabs"],
            d["neg_destabs"],
            tuple(ReductionStep.from_json(s) for s in d["steps"]),
        )


def _find_destab(w: BraidWord, interior: bool, prefer: int = 1) -> tuple[int, int, int] | None:
    """First (sign, offset, index) for which rotating by ``offset`` puts a
    uniquely occurring generator letter of the given sign last."""
    n, letters = w.strands, w.letters
    if n < 2 or not letters:
        return None
    counts: dict[int, int] = {}
    for x in letters:
        counts[abs(x)] = counts.get(abs(x), 0) + 1
    L = len(letters)
    for sign in (prefer, -prefer):
        for k in range(L):
            x = letters[k - 1]  # last letter after rotating by k
            j = abs(x)
            if (x > 0) != (sign > 0) or counts[j] != 1:
                continue
            if j == n - 1 or interior:
                return sign, k, j
    return None


def canonical_reduce(w: BraidWord, interior: bool = True, prefer: int = 1) -> ReductionTrace:
    """Greedy fixpoint of free cancellation, cyclic rotation and
    destabilization, recording every move.

    Only rotations and free reductions are searched (no general conjugation
    or exchange moves), so the destabilization counts are lower bounds on
    what is achievable for the closure.  With ``interior=False`` only the
    last strand is ever removed; ``prefer=-1`` tries negative
    destabilizations before positive ones.
    """
    steps: list[ReductionStep] = []
    pos = neg = 0
    cur = w
    while True:
        red = free_reduce(cur)
        if red != cur:
            steps.append(ReductionStep("free-cancel"))
            cur = red
        if len(cur.letters) >= 2 and cur.letters[0] == -cur.letters[-1]:
            steps.append(ReductionStep("cyclic-rotate", offset=1))
            cur = cyclic_rotate(cur, 1)
            continue
        found = _find_destab(cur, interior, prefer)
        if found is None:
            break
        sign, k, j = found
        if k % max(len(cur.letters), 1):
            steps.append(ReductionStep("cyclic-rotate", offset=k))
            cur = cyclic_rotate(cur, k)
        step = ReductionStep("destab", sign=sign, index=j)
        cur = apply_step(cur, step)
        steps.append(step)
        if sign > 0:
            pos += 1
        else:
            neg += 1
    return ReductionTrace(w, cur, pos, neg, tuple(steps))


def _concat(prefix: tuple[ReductionStep, ...], trace: ReductionTrace, source: BraidWord) -> ReductionTrace:
    return ReductionTrace(source, trace.result, trace.pos_destabs, trace.neg_destabs, prefix + trace.steps)


def isotopy_reduce(
    w: BraidWord,
    sign: int = 1,
    positions: Iterable[int] | None = None,
    max_states: int = 2000,
    target: int | None = None,
    interior: bool = True,
) -> ReductionTrace:
    """Best-first search over braid-relation rewrites of ``w`` (windows
    starting in ``positions``; everywhere when ``None``), scoring each word by
    the destabilizations of that sign :func:`canonical_reduce` finds.

    Relation moves keep the length, so letter positions are stable along the
    search.  Returns the best trace found, relation steps included; it is a
    lower bound, never a proof of impossibility.
    """
    pos_set = None if positions is None else sorted(set(positions))

    def score(tr: ReductionTrace) -> int:
        return tr.pos_destabs if sign > 0 else tr.neg_destabs

    start = canonical_reduce(w, interior, prefer=sign)
    best = start
    if target is not None and score(best) >= target:
        return best
    seen = {w.letters}
    counter = itertools.count()
    heap = [(-score(start), 0, next(counter), w.letters, ())]
    while heap and len(seen) < max_states:
        _, depth, _, letters, path = heapq.heappop(heap)
        for p, r in _relation_moves(letters, pos_set):
            nxt = letters[:p] + r + letters[p + len(r) :]
            if nxt in seen:
                continue
            seen.add(nxt)
            steps = path + (ReductionStep("relation", offset=p, replacement=r),)
            tr = canonical_reduce(BraidWord(w.strands, nxt), interior, prefer=sign)
            if score(tr) > score(best):
                best = _concat(steps, tr, w)
                if target is not None and score(best) >= target:
                    return best
            heapq.heappush(heap, (-score(tr), depth + 1, next(counter), nxt, steps))
    return best


# -- skein triples ----------------------------------------------------------------

@dataclass(frozen=True)
class SkeinTriple:
    plus: BraidWord
    minus: BraidWord
    zero: BraidWord
    original: str  # "plus" | "minus" | "zero"
    site: int

    def members(self) -> dict[str, BraidWord]:
        return {"plus": self.plus, "minus": self.minus, "zero": self.zero}

    def others(self) -> dict[str, BraidWord]:
        return {k: v for k, v in self.members().items() if k != self.original}

    def to_json(self) -> dict:
        return {
            "plus": self.plus.to_json(),
            "minus": self.minus.to_json(),
            "zero": self.zero.to_json(),
            "original": self.original,
            "site": self.site,
        }


def skein_triple(w: BraidWord, site: int) -> SkeinTriple:
    if not 0 <= site < len(w.letters):
        raise IndexError(f"site {site} out of range for word of length {len(w.letters)}")
    letters = list(w.letters)
    x = letters[site]
    j = abs(x)
    plus = letters.copy()
    plus[site] = j
    minus = letters.copy()
    minus[site] = -j
    zero = letters[:site] + letters[site + 1 :]
    return SkeinTriple(
        BraidWord(w.strands, tuple(plus)),
        BraidWord(w.strands, tuple(minus)),
        BraidWord(w.strands, tuple(zero)),
        "plus" if x > 0 else "minus",
        site,
    )
