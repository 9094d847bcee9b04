"""HOMFLYPT polynomials of closed braids.

Conventions: ``v^{-1} P(K+) - v P(K-) = z P(K0)`` and ``P(unknot) = 1``; the
letter ``+i`` is a positive crossing.  Two independent engines are provided:

* :func:`homfly_skein` resolves crossings of the closure diagram until it
  is descending (hence an unlink);
* :func:`homfly_hecke` works in the Hecke algebra with the basis of positive
  permutation braids and evaluates a Markov trace recursively.
"""

from __future__ import annotations

import sys
import threading
from dataclasses import dataclass
from typing import Callable

from .braid import BraidWord, SkeinTriple, cyclically_reduce
from .laurent import LaurentPoly2

P2 = LaurentPoly2
ONE = P2.one()
#: value of the two-component unlink, (v^{-1} - v) z^{-1}
DELTA = P2({(-1, -1): 1, (1, -1): -1})

DEFAULT_HECKE_STRAND_LIMIT = 8


# -- closure diagrams -----------------------------------------------------------

@dataclass(frozen=True)
class OrientedDiagram:
    """Closure of a braid word seen as a diagram.

    ``crossings[t]`` is ``(sign, over_strand_start, under_strand_start)``:
    the braid positions the over and under strands enter crossing ``t`` at.
    ``traversal`` lists ``(crossing, is_over)`` in the order the crossings
    are met, components taken by lowest starting strand, each started at the
    top of that strand.
    """

    word: BraidWord
    crossings: tuple[tuple[int, int, int], ...]
    traversal: tuple[tuple[int, bool], ...]
    component_starts: tuple[int, ...]

    @property
    def n_components(self) -> int:
        return len(self.component_starts)

    def first_bad_crossing(self) -> int | None:
        seen: set[int] = set()
        for t, is_over in self.traversal:
            if t in seen:
                continue
            if not is_over:
                return t
            seen.add(t)
        return None

    def key(self) -> tuple:
        return (self.word.strands, self.word.letters)


def closure_diagram(w: BraidWord) -> OrientedDiagram:
    n, letters = w.strands, w.letters
    crossings = []
    for x in letters:
        i = abs(x)  # positions i, i+1 (1-based)
        # positive letter: the strand moving right (from i to i+1) is over
        if x > 0:
            crossings.append((1, i, i + 1))
        else:
            crossings.append((-1, i + 1, i))
    traversal: list[tuple[int, bool]] = []
    visited = [False] * (n + 1)
    starts = []
    for start in range(1, n + 1):
        if visited[start]:
            continue
        starts.append(start)
        p = start
        while not visited[p]:
            visited[p] = True
            for t, x in enumerate(letters):
                i = abs(x)
                if p == i:
                    traversal.append((t, crossings[t][1] == i))
                    p = i + 1
                elif p == i + 1:
                    traversal.append((t, crossings[t][1] == i + 1))
                    p = i
    return OrientedDiagram(w, tuple(crossings), tuple(traversal), tuple(starts))


# -- skein engine -----------------------------------------------------------------

class _Memo:
    """Thread-safe memo table (dict operations are atomic; the lock only
    guards clearing)."""

    def __init__(self):
        self._d: dict = {}
        self._lock = threading.Lock()

    def get(self, k):
        return self._d.get(k)

    def put(self, k, v):
        self._d[k] = v

    def clear(self):
        with self._lock:
            self._d.clear()

    def __len__(self):
        return len(self._d)


_SKEIN_MEMO = _Memo()
_SKEIN_RAW_MEMO = _Memo()


def clear_caches() -> None:
    _SKEIN_MEMO.clear()
    _SKEIN_RAW_MEMO.clear()


def _split(w: BraidWord) -> tuple[BraidWord, BraidWord] | None:
    """Split the braid at an unused generator, if any."""
    used = {abs(x) for x in w.letters}
    for j in range(1, w.strands):
        if j not in used:
            left = BraidWord(j, tuple(x for x in w.letters if abs(x) < j))
            right = BraidWord(
                w.strands - j,
                tuple((x - j) if x > 0 else (x + j) for x in w.letters if abs(x) > j),
            )
            return left, right
    return None


def _simplify(w: BraidWord) -> tuple[LaurentPoly2, list[BraidWord]] | None:
    """One isotopy-invariant simplification: ``P(w) = factor * prod P(parts)``.
    Returns ``None`` when nothing applies."""
    r = cyclically_reduce(w)
    if r.letters != w.letters:
        return ONE, [r]
    if w.strands == 1:
        return None
    parts = _split(w)
    if parts is not None:
        return DELTA, list(parts)
    counts: dict[int, int] = {}
    for x in w.letters:
        counts[abs(x)] = counts.get(abs(x), 0) + 1
    for j in range(w.strands - 1, 0, -1):
        if counts.get(j) == 1:
            # L sigma_j^e R closes to closure(L) # closure(R)
            pos = next(p for p, x in enumerate(w.letters) if abs(x) == j)
            rest = w.letters[pos + 1 :] + w.letters[:pos]
            left = BraidWord(j, tuple(x for x in rest if abs(x) < j))
            right = BraidWord(
                w.strands - j, tuple((x - j) if x > 0 else (x + j) for x in rest if abs(x) > j)
            )
            return ONE, [left, right]
    return None


def _skein(w: BraidWord, simplify: bool, memo: _Memo) -> LaurentPoly2:
    key = (w.strands, w.letters)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if simplify:
        s = _simplify(w)
        if s is not None:
            factor, parts = s
            result = factor
            for part in parts:
                result = result * _skein(part, simplify, memo)
            memo.put(key, result)
            return result
    diagram = closure_diagram(w)
    t = diagram.first_bad_crossing()
    if t is None:
        result = DELTA ** (diagram.n_components - 1)
    else:
        letters = list(w.letters)
        x = letters[t]
        switched = letters.copy()
        switched[t] = -x
        p_switch = _skein(BraidWord(w.strands, tuple(switched)), simplify, memo)
        p_smooth = _skein(BraidWord(w.strands, tuple(letters[:t] + letters[t + 1 :])), simplify, memo)
        if x > 0:
            # P+ = v^2 P- + v z P0
            result = p_switch.shift(2, 0) + p_smooth.shift(1, 1)
        else:
            # P- = v^-2 P+ - v^-1 z P0
            result = p_switch.shift(-2, 0) - p_smooth.shift(-1, 1)
    memo.put(key, result)
    return result


def homfly_skein(w: BraidWord, simplify: bool = True) -> LaurentPoly2:
    """HOMFLYPT polynomial by skein resolution to descending diagrams.

    With ``simplify`` the recursion also cancels letters cyclically, splits
    off unused generators and removes uniquely occurring generators
    (connected-sum decomposition); without it every node is resolved by the
    descending-diagram rule alone.
    """
    memo = _SKEIN_MEMO if simplify else _SKEIN_RAW_MEMO
    limit = sys.getrecursionlimit()
    need = 4 * len(w.letters) + 100
    if need > limit:
        sys.setrecursionlimit(need)
    return _skein(w, simplify, memo)


# -- Hecke algebra engine ------------------------------------------------------------

_VZ = (1, 1)
_V2 = (2, 0)
_VM2 = (-2, 0)
_VM1Z = (-1, 1)

Perm = tuple  # one-line notation, values 1..m


def _add_into(d: dict, key, poly: LaurentPoly2) -> None:
    cur = d.get(key)
    if cur is None:
        d[key] = poly
    else:
        s = cur + poly
        if s:
            d[key] = s
        else:
            del d[key]


def hecke_multiply(element: dict, gen: int) -> dict:
    """Right multiplication of ``sum c_w T_w`` by ``g_|gen|^{sign(gen)}``.

    Quadratic relation ``g^2 = v z g + v^2`` (equivalently the skein relation
    ``v^{-1} g - v g^{-1} = z``).
    """
    i = abs(gen) - 1
    out: dict = {}
    for w, c in element.items():
        ws = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
        up = w[i] < w[i + 1]
        if gen > 0:
            if up:
                _add_into(out, ws, c)
            else:
                _add_into(out, w, c.shift(*_VZ))
                _add_into(out, ws, c.shift(*_V2))
        else:
            if up:
                _add_into(out, ws, c.shift(*_VM2))
                _add_into(out, w, -c.shift(*_VM1Z))
            else:
                _add_into(out, ws, c)
    return out


def hecke_element(w: BraidWord) -> dict:
    elem = {tuple(range(1, w.strands + 1)): ONE}
    for x in w.letters:
        elem = hecke_multiply(elem, x)
    return elem


def homfly_hecke(w: BraidWord, strand_limit: int = DEFAULT_HECKE_STRAND_LIMIT) -> LaurentPoly2:
    """HOMFLYPT polynomial via the Hecke algebra and its Markov trace."""
    if w.strands > strand_limit:
        raise ValueError(f"{w.strands} strands exceeds the Hecke engine limit {strand_limit}")
    elem = hecke_element(w)
    # push the trace down one strand at a time on the whole element
    return _trace_element(elem)


def _trace_element(elem: dict) -> LaurentPoly2:
    while elem:
        m = len(next(iter(elem)))
        if m == 1:
            return elem.get((1,), P2.zero())
        # group by the position of the largest value
        groups: dict[int, dict] = {}
        for w, c in elem.items():
            k = w.index(m)
            u = w[:k] + w[k + 1 :]
            _add_into(groups.setdefault(k, {}), u, c)
        nxt: dict = {}
        for k, sub in groups.items():
            if k == m - 1:
                for u, c in sub.items():
                    _add_into(nxt, u, c * DELTA)
                continue
            for j in range(m - 2, k, -1):
                sub = hecke_multiply(sub, j)
            for u, c in sub.items():
                _add_into(nxt, u, c)
        elem = nxt
    return P2.zero()


# -- skein checks -----------------------------------------------------------------

Engine = Callable[[BraidWord], LaurentPoly2]


def skein_holds(p_plus: LaurentPoly2, p_minus: LaurentPoly2, p_zero: LaurentPoly2) -> bool:
    return p_plus.shift(-1, 0) - p_minus.shift(1, 0) == p_zero.shift(0, 1)


def triple_polys(t: SkeinTriple, engine: Engine = homfly_skein) -> tuple[LaurentPoly2, LaurentPoly2, LaurentPoly2]:
    return engine(t.plus), engine(t.minus), engine(t.zero)


def check_skein(t: SkeinTriple, engine: Engine = homfly_skein, polys=None) -> bool:
    """True iff ``v^{-1} P(plus) - v P(minus) == z P(zero)`` exactly."""
    pp, pm, p0 = polys if polys is not None else triple_polys(t, engine)
    return skein_holds(pp, pm, p0)


def degree_lemma_holds(pp: LaurentPoly2, pm: LaurentPoly2, p0: LaurentPoly2) -> bool:
    for p in (pp, pm, p0):
        if p.is_zero():
            raise ValueError("degree bounds need nonzero polynomials")
    lp, hp = pp.v_degrees()
    lm, hm = pm.v_degrees()
    l0, h0 = p0.v_degrees()
    return (
        hp <= max(hm + 2, h0 + 1)
        and hm <= max(hp - 2, h0 - 1)
        and h0 <= max(hp - 1, hm + 1)
        and lp >= min(lm + 2, l0 + 1)
        and lm >= min(lp - 2, l0 - 1)
        and l0 >= min(lp - 1, lm + 1)
    )


def degree_lemma_check(t: SkeinTriple, engine: Engine = homfly_skein, polys=None) -> bool:
    """All six v-degree inequalities relating P(K+), P(K-), P(K0)."""
    pp, pm, p0 = polys if polys is not None else triple_polys(t, engine)
    return degree_lemma_holds(pp, pm, p0)
