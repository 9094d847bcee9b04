"""Band-generator calculus on three-strand braids.

Band words use the letters ``+-1, +-2, +-3`` for ``a_i`` and their inverses,
with ``a_1 = s1``, ``a_2 = s2``, ``a_3 = s2 s1 s2^-1``.  A closed band word
is read cyclically.  Moves act on cyclic windows: applying a step at
position ``p`` rotates the word so the window comes first and then
replaces it, so the resulting word starts with the replacement.
"""

from __future__ import annotations

import heapq
import itertools
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .braid import BraidWord, _burau2, _mat_mul, components, free_reduce

#: the three spellings of alpha
ALPHAS = ((1, 3), (2, 1), (3, 2))
ALPHA_BARS = tuple((-b, -a) for a, b in ALPHAS)


def _shift(i: int, k: int = 1) -> int:
    """Subscript ``i + k`` taken in {1, 2, 3}, sign kept."""
    s = 1 if i > 0 else -1
    return s * ((abs(i) - 1 + k) % 3 + 1)


@dataclass(frozen=True)
class BandWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > 3:
                raise ValueError(f"band letter {x} out of range")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def to_text(self) -> str:
        return " ".join(f"a{abs(x)}" + ("'" if x < 0 else "") for x in self.letters)

    @classmethod
    def from_text(cls, text: str) -> "BandWord":
        out = []
        for tok in text.split():
            m = re.fullmatch(r"a([123])('?)", tok)
            if not m:
                raise ValueError(f"bad band letter {tok!r}")
            i = int(m.group(1))
            out.append(-i if m.group(2) else i)
        return cls(tuple(out))

    def shifted(self, k: int = 1) -> "BandWord":
        return BandWord(tuple(_shift(x, k) for x in self.letters))

    def inverse(self) -> "BandWord":
        return BandWord(tuple(-x for x in reversed(self.letters)))

    def __add__(self, other: "BandWord") -> "BandWord":
        return BandWord(self.letters + other.letters)

    def __str__(self) -> str:
        return self.to_text()


def parse_band(text: str) -> BandWord:
    return BandWord.from_text(text)


_ARTIN = {1: (1,), 2: (2,), 3: (2, 1, -2), -1: (-1,), -2: (-2,), -3: (2, -1, -2)}


def band_to_artin(w: BandWord) -> BraidWord:
    letters: list[int] = []
    for x in w.letters:
        letters.extend(_ARTIN[x])
    return free_reduce(BraidWord(3, tuple(letters)))


def band_matrix(w: BandWord):
    """Burau image (faithful on three strands) of a band word."""
    from .laurent import LaurentPoly1

    one, zero = LaurentPoly1.one(), LaurentPoly1.zero()
    m = ((one, zero), (zero, one))
    for x in band_to_artin(w).letters:
        m = _mat_mul(m, _burau2(x))
    return m


def band_components(w: BandWord) -> int:
    return components(band_to_artin(w))


@lru_cache(maxsize=None)
def two_letter_relations() -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
    """Equalities between two-letter band words that are not trivial."""
    letters = (1, 2, 3, -1, -2, -3)
    classes: dict = {}
    for u in itertools.product(letters, repeat=2):
        if u[0] == -u[1]:
            continue
        classes.setdefault(band_matrix(BandWord(u)), []).append(u)
    out = {}
    for words in classes.values():
        for u in words:
            rest = tuple(v for v in words if v != u)
            if rest:
                out[u] = rest
    return out


# -- families ---------------------------------------------------------------------

def family_word(kind: str, *params: int, strict: bool = True) -> BandWord:
    """``A_x``, ``B_{x,y}``, ``C_{x,y,z}``, ``D_{x,y,z,w}``.

    ``strict`` enforces the parameter ranges under which the closure is a
    knot; with ``strict=False`` any positive exponents are accepted."""
    kind = kind.upper()
    if not strict:
        heads = {"A": ((-3, -2), (1,)), "B": ((-3, -3), (1, 2)), "C": ((-2,), (1, 2, 3)), "D": ((-2,), (1, 2, 3, 1))}
        if kind not in heads:
            raise ValueError(f"unknown family {kind!r}")
        head, gens = heads[kind]
        if len(params) != len(gens) or min(params) < 1:
            raise ValueError(f"{kind} needs {len(gens)} positive exponents")
        body = tuple(g for g, k in zip(gens, params) for _ in range(k))
        return BandWord(head + body)
    if kind == "A":
        (x,) = params
        if x < 2 or x % 2:
            raise ValueError("A_x needs x >= 2 even")
        return BandWord((-3, -2) + (1,) * x)
    if kind == "B":
        x, y = params
        if x < 3 or y < 3 or x % 2 == 0 or y % 2 == 0:
            raise ValueError("B_{x,y} needs x, y >= 3 odd")
        return BandWord((-3, -3) + (1,) * x + (2,) * y)
    if kind == "C":
        x, y, z = params
        if min(x, y, z) < 1 or (x + z) % 2 == 0 or y % 2:
            raise ValueError("C_{x,y,z} needs x + z odd, y even, x, y, z >= 1")
        return BandWord((-2,) + (1,) * x + (2,) * y + (3,) * z)
    if kind == "D":
        x, y, z, w = params
        if x < 2 or y < 2 or z < 1 or w < 1:
            raise ValueError("D_{x,y,z,w} needs x, y >= 2 and z, w >= 1")
        return BandWord((-2,) + (1,) * x + (2,) * y + (3,) * z + (1,) * w)
    raise ValueError(f"unknown family {kind!r}")


def c_word(x: int, y: int, z: int) -> BandWord:
    """``C_{x,y,z}`` without the knot parity constraints (x, y, z >= 1)."""
    if min(x, y, z) < 1:
        raise ValueError("C needs positive exponents")
    return BandWord((-2,) + (1,) * x + (2,) * y + (3,) * z)


def family_shape(w: BandWord) -> str | None:
    """Name of the family whose letter pattern ``w`` has, up to rotation and
    subscript symmetry (parity constraints ignored)."""
    L = w.letters
    for k in range(3):
        s = BandWord(L).shifted(k).letters
        for r in range(max(len(s), 1)):
            rot = s[r:] + s[:r]
            text = "".join(f"({x})" for x in rot)
            for name in ("D", "C", "B", "A"):
                if re.fullmatch(_pattern(name), text):
                    return name
    return None


@lru_cache(maxsize=None)
def _pattern(name: str) -> str:
    seq = {"A": [(-3, 1), (-2, 1), (1, 2)], "B": [(-3, 1), (-3, 1), (1, 3), (2, 3)],
           "C": [(-2, 1), (1, 1), (2, 1), (3, 1)], "D": [(-2, 1), (1, 2), (2, 2), (3, 1), (1, 1)]}[name]
    parts = []
    for x, lo in seq:
        tok = re.escape(f"({x})")
        parts.append(f"(?:{tok}){{{lo},}}")
    return "".join(parts)


# -- Xu forms -----------------------------------------------------------------------

@dataclass(frozen=True)
class XuForm:
    kind: str  # "PosPower" | "NegPower" | "Mixed"
    k: int
    N: BandWord
    P: BandWord
    word: BandWord

    def to_json(self) -> dict:
        return {"kind": self.kind, "k": self.k, "N": self.N.to_text(), "P": self.P.to_text(), "word": self.word.to_text()}


def _canon(letters: tuple[int, ...]) -> tuple[int, ...]:
    if not letters:
        return letters
    return min(letters[i:] + letters[:i] for i in range(len(letters)))


def _relation_neighbours(letters: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    rel = two_letter_relations()
    L = len(letters)
    if L < 2:
        return
    for p in range(L):
        rot = letters[p:] + letters[:p]
        for r in rel.get(rot[:2], ()):
            yield r + rot[2:]


def _free_cancel_neighbours(letters: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    L = len(letters)
    for p in range(L):
        rot = letters[p:] + letters[:p]
        if L >= 2 and rot[0] == -rot[1]:
            yield rot[2:]


def _nondecreasing(xs: Iterable[int]) -> bool:
    xs = [abs(x) for x in xs]
    return all(a <= b for a, b in zip(xs, xs[1:]))


def _parse_xu(letters: tuple[int, ...]) -> XuForm | None:
    w = BandWord(letters)
    if all(x > 0 for x in letters):
        k = 0
        while 2 * k + 2 <= len(letters) and letters[2 * k : 2 * k + 2] in ALPHAS:
            k += 1
        for kk in range(k, -1, -1):
            P = letters[2 * kk :]
            if _nondecreasing(P):
                return XuForm("PosPower", kk, BandWord(), BandWord(P), w)
        return None
    if all(x < 0 for x in letters):
        k = 0
        L = len(letters)
        while 2 * k + 2 <= L and letters[L - 2 * k - 2 : L - 2 * k] in ALPHA_BARS:
            k += 1
        for kk in range(k, -1, -1):
            N = letters[: L - 2 * kk]
            if _nondecreasing(N):
                return XuForm("NegPower", kk, BandWord(N), BandWord(), w)
        return None
    split = next(i for i, x in enumerate(letters) if x > 0)
    N, P = letters[:split], letters[split:]
    if all(x > 0 for x in P) and _nondecreasing(N) and _nondecreasing(P):
        return XuForm("Mixed", 0, BandWord(N), BandWord(P), w)
    return None


def xu_classify_small(w: BandWord, budget: int = 20000) -> XuForm | None:
    """Shortest cyclic representative reachable by band relations, free
    cancellation and rotation, parsed into Xu's trichotomy.  ``None`` when
    the search exceeds ``budget`` states or nothing parses."""
    start = _canon(w.letters)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in itertools.chain(_relation_neighbours(cur), _free_cancel_neighbours(cur)):
            c = _canon(nxt)
            if c not in seen:
                seen.add(c)
                if len(seen) > budget:
                    return None
                queue.append(c)
    m = min(len(s) for s in seen)
    if len(w.letters) == m:
        own = _parse_xu(w.letters)
        if own is not None:
            return own
    forms = []
    for s in seen:
        if len(s) != m:
            continue
        for k in range(3):
            sh = BandWord(s).shifted(k).letters
            for r in range(max(len(sh), 1)):
                rot = sh[r:] + sh[:r]
                f = _parse_xu(rot)
                if f is not None:
                    forms.append(((-f.k, f.word.letters), f))
    if not forms:
        return None
    return min(forms, key=lambda t: t[0])[1]


# -- deplumbing moves -----------------------------------------------------------------

RULES = ("PosDeplumb", "NegDeplumb", "MMTrick", "Relation")


@dataclass(frozen=True)
class MoveStep:
    rule: str
    position: int
    before: tuple[int, ...]
    after: tuple[int, ...]
    weight: int = 0  # negative Hopf bands removed

    def to_json(self) -> dict:
        return {"rule": self.rule, "position": self.position, "before": list(self.before),
                "after": list(self.after), "weight": self.weight}

    @classmethod
    def from_json(cls, d: dict) -> "MoveStep":
        return cls(d["rule"], d["position"], tuple(d["before"]), tuple(d["after"]), d.get("weight", 0))


@lru_cache(maxsize=None)
def _patterns() -> tuple[tuple[str, tuple[int, ...], tuple[int, ...], int], ...]:
    pats: list[tuple[str, tuple[int, ...], tuple[int, ...], int]] = []
    for i in (1, 2, 3):
        pats.append(("PosDeplumb", (i, i), (i,), 0))
    for a in ALPHAS:
        pats.append(("PosDeplumb", a + a, a, 0))
        for i in (1, 2, 3):
            pats.append(("PosDeplumb", a + (i, _shift(i), _shift(i, 2)), a, 0))
    for i in (1, 2, 3):
        pats.append(("NegDeplumb", (-i, -i), (-i,), 1))
    for a in ALPHA_BARS:
        pats.append(("NegDeplumb", a + a, a, 2))
    for i in (1, 2, 3):
        prev, nxt = _shift(i, -1), _shift(i)
        for u, v in (((-i, prev, i), (-i, -prev, i)), ((i, nxt, -i), (i, -nxt, -i))):
            pats.append(("MMTrick", u, v, 0))
            pats.append(("MMTrick", v, u, 0))
    for u, vs in sorted(two_letter_relations().items()):
        for v in vs:
            pats.append(("Relation", u, v, 0))
    return tuple(pats)


def apply_move(w: BandWord, step: MoveStep) -> BandWord:
    L = w.letters
    if not L:
        raise ValueError("no moves apply to the empty word")
    p = step.position % len(L)
    rot = L[p:] + L[:p]
    if len(step.before) > len(rot) or rot[: len(step.before)] != step.before:
        raise ValueError(f"step {step} does not match {w}")
    if (step.rule, step.before, step.after, step.weight) not in _patterns():
        raise ValueError(f"{step} is not a recognised move")
    return BandWord(step.after + rot[len(step.before) :])


@lru_cache(maxsize=None)
def _patterns_by_head() -> dict[int, tuple[tuple[str, tuple[int, ...], tuple[int, ...], int], ...]]:
    heads: dict[int, list] = {}
    for pat in _patterns():
        heads.setdefault(pat[1][0], []).append(pat)
    return {h: tuple(v) for h, v in heads.items()}


_RULE_ORDER = {r: i for i, r in enumerate(RULES)}


def applicable_moves(w: BandWord) -> list[MoveStep]:
    """Every pattern match on every cyclic window (windows no longer than
    the word; patterns are already closed under subscript symmetry)."""
    L = w.letters
    n = len(L)
    heads = _patterns_by_head()
    out = []
    for p in range(n):
        pats = heads.get(L[p])
        if not pats:
            continue
        rot = L[p:] + L[:p]
        for rule, before, after, weight in pats:
            if len(before) <= n and rot[: len(before)] == before:
                out.append(MoveStep(rule, p, before, after, weight))
    out.sort(key=lambda s: (len(s.after) - len(s.before), _RULE_ORDER[s.rule], s.position, s.before, s.after))
    return out


def is_lambda_base(letters: tuple[int, ...]) -> bool:
    """Two bands joining distinct disk pairs: a disk, whose boundary is the unknot."""
    return len(letters) == 2 and abs(letters[0]) != abs(letters[1])


@dataclass(frozen=True)
class LambdaResult:
    value: int
    trace: tuple[MoveStep, ...]
    source: BandWord
    final: BandWord
    exact: bool = True  # False: an upper bound the exact search could not confirm

    def replay(self) -> BandWord:
        w = self.source
        for s in self.trace:
            w = apply_move(w, s)
        return w

    def verify(self) -> bool:
        return (
            self.replay() == self.final
            and is_lambda_base(self.final.letters)
            and sum(s.weight for s in self.trace) == self.value
        )

    def to_json(self) -> dict:
        return {"lambda": self.value, "exact": self.exact, "source": self.source.to_text(),
                "final": self.final.to_text(), "trace": [s.to_json() for s in self.trace]}


def _best_first(w: BandWord, priority, depth_budget: int, max_states: int,
                bound: int | None = None) -> tuple[LambdaResult | None, bool]:
    """Generic best-first search to a base word.  Returns the first base
    word settled and whether the state space was exhausted."""
    start = w.letters
    key0 = _canon(start)
    # key -> (cost, depth, parent key, step, letters as reached)
    info: dict = {key0: (0, 0, None, None, start)}
    heap = [(priority(0, 0, start), key0)]
    done: set = set()
    truncated = False
    while heap:
        prio, key = heapq.heappop(heap)
        if key in done:
            continue
        cost, depth, _, _, letters = info[key]
        if prio != priority(cost, depth, letters):
            continue
        done.add(key)
        if is_lambda_base(letters):
            trace = []
            k = key
            while info[k][2] is not None:
                trace.append(info[k][3])
                k = info[k][2]
            return LambdaResult(cost, tuple(reversed(trace)), w, BandWord(letters)), False
        if len(done) > max_states:
            return None, False
        if depth >= depth_budget:
            truncated = True
            continue
        for step in applicable_moves(BandWord(letters)):
            c = cost + step.weight
            if bound is not None and c >= bound:
                continue
            rot = letters[step.position:] + letters[:step.position]
            new = step.after + rot[len(step.before):]
            k = _canon(new)
            if k in done:
                continue
            pr = priority(c, depth + 1, new)
            old = info.get(k)
            if old is not None and priority(old[0], old[1], old[4]) <= pr:
                continue
            info[k] = (c, depth + 1, key, step, new)
            heapq.heappush(heap, (pr, k))
    return None, not truncated


def lambda_search(w: BandWord, depth_budget: int = 40, max_states: int = 20000) -> LambdaResult | None:
    """Cheapest (fewest negative Hopf bands) move sequence from ``w`` to a
    base word; ``None`` if no base word is reached within budget.

    A greedy pass ordered by word length finds an upper bound fast.  A
    Dijkstra pass on (cost, steps) then looks for anything strictly
    cheaper.  If that pass runs out of budget the greedy answer is returned
    with ``exact=False``.
    """
    if is_lambda_base(w.letters):
        return LambdaResult(0, (), w, w)
    greedy, _ = _best_first(w, lambda c, d, L: (len(L), c, d), depth_budget, max_states)
    bound = None if greedy is None else greedy.value
    if bound == 0:
        return greedy
    better, exhausted = _best_first(w, lambda c, d, L: (c, d), depth_budget, max_states, bound)
    if better is not None:
        return better
    if greedy is None:
        return None
    if exhausted:
        return greedy
    return LambdaResult(greedy.value, greedy.trace, w, greedy.final, exact=False)


# -- the NP case table ------------------------------------------------------------------

_NEG = {"A": (-2, -1, -3), "B": (-1, -3, -2)}  # the two negative triples
_PREFIX = {
    "i": ((), "A", 1, 1), "ii": ((), "A", 1, 0), "iii": ((), "A", 1, 0),
    "iv": ((-3,), "A", 0, 1), "v": ((-3,), "A", 0, 0), "vi": ((-3,), "A", 0, 0),
    "vii": ((-1, -3), "A", 0, 1), "viii": ((-1, -3), "A", 0, 0), "ix": ((-1, -3), "A", 0, 0),
    "i'": ((), "B", 1, 1), "ii'": ((), "B", 1, 0), "iii'": ((), "B", 1, 0),
    "iv'": ((-2,), "B", 0, 1), "v'": ((-2,), "B", 0, 0), "vi'": ((-2,), "B", 0, 0),
    "vii'": ((-3, -2), "B", 0, 1), "viii'": ((-3, -2), "B", 0, 0), "ix'": ((-3, -2), "B", 0, 0),
}
_TAIL = {"i": (), "ii": (1,), "iii": (1, 2), "iv": (), "v": (1,), "vi": (1, 2), "vii": (), "viii": (1,), "ix": (1, 2)}
CASES = tuple(_PREFIX)


def case_word(case: str, k: int, l: int) -> BandWord:
    prefix, triple, kmin, lmin = _PREFIX[case]
    if k < kmin or l < lmin:
        raise ValueError(f"case {case} needs k >= {kmin}, l >= {lmin}")
    tail = _TAIL[case.rstrip("'")]
    return BandWord(prefix + _NEG[triple] * k + (1, 2, 3) * l + tail)


@dataclass(frozen=True)
class CaseOutcome:
    case: str
    k: int
    l: int
    word: BandWord
    components: int
    lam: int | None
    verdict: str
    consistent: bool

    def to_json(self) -> dict:
        return {"case": self.case, "k": self.k, "l": self.l, "word": self.word.to_text(),
                "components": self.components, "lambda": self.lam, "verdict": self.verdict,
                "consistent": self.consistent}


def abcd_case_replay(kl_max: int = 3, depth_budget: int = 40, max_states: int = 3000) -> list[CaseOutcome]:
    """Instantiate the eighteen NP cases and check each against the claim
    that a lambda = 1 knot has one of the four family shapes."""
    out = []
    for case in CASES:
        _, _, kmin, lmin = _PREFIX[case]
        for k in range(kmin, kl_max + 1):
            for l in range(lmin, kl_max + 1):
                w = case_word(case, k, l)
                comps = band_components(w)
                if comps > 1:
                    out.append(CaseOutcome(case, k, l, w, comps, None, "multi-component", True))
                    continue
                res = lambda_search(w, depth_budget, max_states)
                lam = None if res is None else res.value
                if res is None:
                    verdict, ok = "external fact, skipped (no reduction within budget)", True
                elif lam != 1:
                    verdict, ok = f"lambda={lam}", True
                else:
                    shape = family_shape(w)
                    if shape is not None:
                        verdict, ok = f"lambda=1 family {shape}", True
                    else:
                        xf = xu_classify_small(w)
                        shape = family_shape(xf.word) if xf is not None else None
                        if shape is not None:
                            verdict, ok = f"lambda=1 family {shape} (after Xu normalisation)", True
                        else:
                            verdict, ok = "lambda=1 knot outside the families", False
                out.append(CaseOutcome(case, k, l, w, comps, lam, verdict, ok))
    return out
