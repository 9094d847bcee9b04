"""Alexander polynomials: Seifert matrices of braid and band surfaces and an
independent Burau-representation oracle.

``Delta(t) = det(V^T - t V)``; comparisons are made up to units ``+-t^k``
through :func:`normalize`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .band3 import BandWord, band_to_artin, family_word
from .braid import BraidWord
from .laurent import LaurentPoly1

T1 = LaurentPoly1
ONE = T1.one()
ZERO = T1.zero()
T = T1.monomial(1, 1)
TI = T1.monomial(1, -1)


# -- exact determinants --------------------------------------------------------------

def det(matrix: Sequence[Sequence[LaurentPoly1]]) -> LaurentPoly1:
    """Bareiss fraction-free elimination over Z[t, t^-1]."""
    n = len(matrix)
    if n == 0:
        return ONE
    a = [[T1(x) if isinstance(x, int) else x for x in row] for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q = num.divide_exact(prev)
                if q is None:
                    raise ArithmeticError("Bareiss step was not exact")
                a[i][j] = q
            a[i][k] = ZERO
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def normalize(p: LaurentPoly1) -> LaurentPoly1:
    """Representative of ``p`` up to ``+-t^k``: lowest term at ``t^0`` with a
    positive coefficient."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no normal form")
    return p.normalized()


def leading_terms(delta: LaurentPoly1, k: int) -> list[int]:
    if delta.is_zero():
        raise ValueError("the zero polynomial has no leading terms")
    _, coeffs = normalize(delta).coeffs()
    return (coeffs + [0] * k)[:k]


# -- Burau oracle ----------------------------------------------------------------------

def burau_matrix(x: int, n: int) -> list[list[LaurentPoly1]]:
    """Reduced Burau matrix ((n-1) x (n-1)) of ``sigma_|x|^{sign x}``."""
    m = [[ONE if r == c else ZERO for c in range(n - 1)] for r in range(n - 1)]
    i = abs(x) - 1
    if x > 0:
        m[i][i] = -T
        if i > 0:
            m[i][i - 1] = T
        if i < n - 2:
            m[i][i + 1] = ONE
    else:
        m[i][i] = -TI
        if i > 0:
            m[i][i - 1] = ONE
        if i < n - 2:
            m[i][i + 1] = TI
    return m


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for r in range(n):
        row = []
        for c in range(m):
            s = ZERO
            for j in range(k):
                if not a[r][j].is_zero() and not b[j][c].is_zero():
                    s = s + a[r][j] * b[j][c]
            row.append(s)
        out.append(row)
    return out


def alexander_burau(w: BraidWord) -> LaurentPoly1:
    """``det(I - Burau(w)) / (1 + t + ... + t^{n-1})``, normalized."""
    n = w.strands
    if n == 1:
        return ONE
    m = [[ONE if r == c else ZERO for c in range(n - 1)] for r in range(n - 1)]
    for x in w.letters:
        m = _matmul(m, burau_matrix(x, n))
    ident = [[(ONE if r == c else ZERO) - m[r][c] for c in range(n - 1)] for r in range(n - 1)]
    d = det(ident)
    if d.is_zero():
        return d
    q = d.divide_exact(T1.from_coeffs([1] * n))
    if q is None:
        raise ArithmeticError("Burau determinant not divisible by the strand factor")
    return normalize(q)


# -- Seifert matrices ---------------------------------------------------------------------

@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]
    basis: tuple[str, ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SeifertMatrix":
        n = self.size
        return SeifertMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)), self.basis)

    def reordered(self, order: Sequence[int], signs: Sequence[int] | None = None) -> "SeifertMatrix":
        """Matrix in the basis ``signs[k] * old[order[k]]``."""
        if sorted(order) != list(range(self.size)):
            raise ValueError("order must be a permutation of the basis")
        sg = list(signs) if signs is not None else [1] * self.size
        e = self.entries
        rows = tuple(tuple(sg[i] * sg[j] * e[order[i]][order[j]] for j in range(self.size)) for i in range(self.size))
        labels = tuple(self.basis[k] for k in order) if self.basis else ()
        return SeifertMatrix(rows, labels)

    def intersection_det(self) -> int:
        n = self.size
        m = [[T1(self.entries[j][i] - self.entries[i][j]) for j in range(n)] for i in range(n)]
        return det(m).coeff(0)

    def to_json(self) -> dict:
        return {"entries": [list(r) for r in self.entries], "basis": list(self.basis)}


def alexander_from_seifert(V: SeifertMatrix) -> LaurentPoly1:
    n = V.size
    m = [[T1(V.entries[j][i]) - T1(V.entries[i][j]) * T for j in range(n)] for i in range(n)]
    return det(m)


def _occurrences(letters: Sequence[int], n: int) -> list[list[int]]:
    return [[p for p, x in enumerate(letters) if abs(x) == i] for i in range(1, n)]


def _artin_loops(letters: Sequence[int], n: int) -> list[tuple[int, int, int]]:
    """Loops ``(generator, first band, next band)`` of the braid-closure
    Seifert surface, generator by generator."""
    loops = []
    for i, occ in enumerate(_occurrences(letters, n), start=1):
        for a, b in zip(occ, occ[1:]):
            loops.append((i, a, b))
    return loops


def _half_kernel(letters: Sequence[int], pair: Sequence[int], e: int, f: int, adjacent) -> Fraction:
    """Seifert pairing of oriented bands ``e`` and ``f`` on a disk-and-band
    surface (bands read in word order).  Integral on closed loops."""
    if e == f:
        return Fraction(-1 if letters[e] > 0 else 1, 2)
    if pair[e] == pair[f]:
        return Fraction(1 if e < f else -1, 2)
    if adjacent(pair[e], pair[f]):
        return Fraction(-1 if e < f else 1, 2)
    return Fraction(0)


def _loop_form(letters: Sequence[int], pair: Sequence[int], adjacent, loops: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(letters)
    support = [[e for e in range(n) if x[e]] for x in loops]
    K = {}
    rows = []
    for x, sx in zip(loops, support):
        row = []
        for y, sy in zip(loops, support):
            val = Fraction(0)
            for e in sx:
                for f in sy:
                    if (e, f) not in K:
                        K[e, f] = _half_kernel(letters, pair, e, f, adjacent)
                    val += x[e] * y[f] * K[e, f]
            if val.denominator != 1:
                raise ArithmeticError("non-integral Seifert pairing")
            row.append(int(val))
        rows.append(row)
    return rows


def _artin_form(letters: Sequence[int], loops: list[tuple[int, int, int]]) -> list[list[int]]:
    """Seifert form of the surface made of one disk per strand and one
    twisted band per letter, on the loops of :func:`_artin_loops`."""
    vecs = []
    for _, a, b in loops:
        v = [0] * len(letters)
        v[a], v[b] = 1, -1
        vecs.append(v)
    return _loop_form(letters, [abs(x) for x in letters], lambda i, j: j == i + 1, vecs)


def seifert_matrix_braid(w: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the canonical surface of a braid closure."""
    loops = _artin_loops(w.letters, w.strands)
    V = _artin_form(w.letters, loops)
    return SeifertMatrix(tuple(tuple(r) for r in V), tuple(f"s{i}[{a},{b}]" for i, a, b in loops))


# -- Bennequin surfaces of three-strand band words ----------------------------------
#
# Disks D1, D2, D3; a letter a_k (or its inverse) is a twisted band joining
# D_k to D_{k+1} (indices mod 3), oriented that way.  Loops are integer
# combinations of oriented bands with zero boundary on every disk; pairs of
# disks are cyclically adjacent, otherwise the braid-surface kernel applies.

def band_loops(w: BandWord) -> list[tuple[str, tuple[int, ...]]]:
    """Basis loops of the Bennequin surface: consecutive bands joining the
    same disk pair (pair by pair, band order within), then one triangle
    through the first band of each pair when all three pairs occur."""
    L = w.letters
    occ = [[p for p, x in enumerate(L) if abs(x) == k] for k in (1, 2, 3)]
    used = [k for k in range(3) if occ[k]]
    if len(used) < 2:
        raise ValueError(f"{w}: band surface is disconnected (needs bands on two disk pairs)")
    out = []
    for k in range(3):
        # each loop climbs from the lower-numbered disk through its first band
        up = -1 if k == 2 else 1
        for a, b in zip(occ[k], occ[k][1:]):
            v = [0] * len(L)
            v[a], v[b] = up, -up
            out.append((f"a{k + 1}[{a},{b}]", tuple(v)))
    if len(used) == 3:
        v = [0] * len(L)
        for k in range(3):
            v[occ[k][0]] = 1
        out.append(("tri[" + ",".join(str(occ[k][0]) for k in range(3)) + "]", tuple(v)))
    return out


def seifert_matrix_band(w: BandWord) -> SeifertMatrix:
    """Seifert matrix of the Bennequin surface of a connected band word."""
    loops = band_loops(w)
    pair = [abs(x) - 1 for x in w.letters]
    V = _loop_form(w.letters, pair, lambda i, j: j == (i + 1) % 3, [v for _, v in loops])
    return SeifertMatrix(tuple(tuple(r) for r in V), tuple(lbl for lbl, _ in loops))


def printed_basis_order(x: int, y: int, z: int) -> list[int]:
    """Permutation taking :func:`seifert_matrix_band` of ``C_{x,y,z}`` to the
    basis of :func:`seifert_matrix_C`: the loop through the inverse band and
    the first ``a2``, the triangle, then the three chains."""
    n1, n2, n3 = x - 1, y, z - 1
    tri = n1 + n2 + n3
    return [n1, tri] + list(range(n1)) + list(range(n1 + 1, n1 + n2)) + list(range(n1 + n2, tri))


def seifert_matrix_C(x: int, y: int, z: int) -> SeifertMatrix:
    """The explicit matrix ``V_{x,y,z}`` for ``C_{x,y,z} = a2^-1 a1^x a2^y a3^z``:
    rows ``u1, u2`` then chains of sizes ``x-1, y-1, z-1`` with ``-1`` on the
    diagonal and ``+1`` just above it."""
    if min(x, y, z) < 1:
        raise ValueError("C_{x,y,z} needs x, y, z >= 1")
    n = x + y + z - 1
    V = [[0] * n for _ in range(n)]
    b3, b4, b5 = 2, x + 1, x + y
    V[0][1] = V[1][0] = 1
    if y > 1:
        V[0][b4] = 1
    if x > 1:
        V[1][b3] = -1
    if z > 1:
        V[1][b5] = 1
    for start, size in ((b3, x - 1), (b4, y - 1), (b5, z - 1)):
        for i in range(size):
            V[start + i][start + i] = -1
            if i + 1 < size:
                V[start + i][start + i + 1] = 1
    labels = ["u1", "u2"] + [f"u3_{i}" for i in range(1, x)] + [f"u4_{i}" for i in range(1, y)] + [f"u5_{i}" for i in range(1, z)]
    return SeifertMatrix(tuple(tuple(r) for r in V), tuple(labels))


def alexander_band(w: BandWord) -> LaurentPoly1:
    return alexander_from_seifert(seifert_matrix_band(w))


def recurrence_check(y: int, z: int, x_max: int, builder=seifert_matrix_C) -> bool:
    """``Delta_x = (t - 1) Delta_{x-1} + t Delta_{x-2}`` for ``3 <= x <= x_max``
    (exact, no normalization), with the degree growing by one per step."""
    if y < 1 or z < 1 or x_max < 3:
        raise ValueError("need y, z >= 1 and x_max >= 3")
    deltas = {x: alexander_from_seifert(builder(x, y, z)) for x in range(1, x_max + 1)}
    for x in range(3, x_max + 1):
        if deltas[x] != (T - ONE) * deltas[x - 1] + T * deltas[x - 2]:
            return False
        if deltas[x].is_zero() or _span(deltas[x]) != _span(deltas[x - 1]) + 1:
            return False
    return True


def _span(p: LaurentPoly1) -> int:
    lo, hi = p.degree_range()
    return hi - lo


def kn_alexander(n: int, template=None) -> LaurentPoly1:
    """Alexander polynomial of the template knot ``K_n`` (Burau oracle)."""
    from .families import kn_word

    return alexander_burau(kn_word(n, template))


# -- the leading-term table -------------------------------------------------------------

@dataclass(frozen=True)
class LeadingTermRow:
    label: str
    kind: str
    bounds: tuple[tuple[int, int | None], ...]  # (low, fixed-or-None) per parameter
    expected: tuple[int, ...]

    def parameters(self, top: int) -> list[tuple[int, ...]]:
        ranges = [range(lo, lo + 1) if fixed is not None else range(lo, top + 1) for lo, fixed in self.bounds]
        return list(itertools.product(*ranges))


def _free(lo: int) -> tuple[int, None]:
    return (lo, None)


def _fix(v: int) -> tuple[int, int]:
    return (v, v)


LEADING_TERM_TABLE: tuple[LeadingTermRow, ...] = (
    LeadingTermRow("A_x", "A", (_free(2),), (1, -3)),
    LeadingTermRow("B_{x,y}", "B", (_free(3), _free(3)), (1, -3)),
    LeadingTermRow("C_{x,y,z}", "C", (_free(2), _free(1), _free(2)), (1, -5)),
    LeadingTermRow("C_{1,2,z}", "C", (_fix(1), _fix(2), _free(4)), (1, -4, 6, -7)),
    LeadingTermRow("C_{1,y,2}", "C", (_fix(1), _free(4), _fix(2)), (1, -4, 6, -7)),
    LeadingTermRow("C_{2,y,1}", "C", (_fix(2), _free(4), _fix(1)), (1, -4, 6, -7)),
    LeadingTermRow("C_{x,2,1}", "C", (_free(4), _fix(2), _fix(1)), (1, -4, 6, -7)),
    LeadingTermRow("C_{1,y,z}", "C", (_fix(1), _free(3), _free(3)), (1, -4, 7)),
    LeadingTermRow("C_{x,y,1}", "C", (_free(3), _free(3), _fix(1)), (1, -4, 7)),
    LeadingTermRow("D_{x,y,z,w}", "D", (_free(2), _free(2), _free(2), _free(2)), (1, -6)),
    LeadingTermRow("D_{x,y,z,1}", "D", (_free(2), _free(2), _free(2), _fix(1)), (1, -6)),
    LeadingTermRow("D_{x,y,1,w}", "D", (_free(2), _free(2), _fix(1), _free(2)), (1, -5)),
)

KN_LEADING_TERMS = (1, -4, -6, 8)


@dataclass(frozen=True)
class LeadingTermCheck:
    row: str
    params: tuple[int, ...]
    components: int
    seifert: tuple[int, ...]
    burau: tuple[int, ...]
    expected: tuple[int, ...]

    @property
    def engines_agree(self) -> bool:
        return self.seifert == self.burau

    @property
    def passed(self) -> bool:
        return self.engines_agree and self.seifert[: len(self.expected)] == self.expected

    def to_json(self) -> dict:
        return {"row": self.row, "params": list(self.params), "components": self.components,
                "seifert": list(self.seifert), "burau": list(self.burau),
                "expected": list(self.expected), "passed": self.passed}


def alexander_table(top: int = 4, knots_only: bool = True, rows: Sequence[LeadingTermRow] = LEADING_TERM_TABLE,
                    depth: int = 4) -> list[LeadingTermCheck]:
    """Every row of the leading-term table for parameters up to ``top``,
    computed by both the band-surface Seifert matrix and the Burau oracle."""
    from .band3 import band_components

    out = []
    for row in rows:
        for params in row.parameters(top):
            w = family_word(row.kind, *params, strict=False)
            comps = band_components(w)
            if knots_only and comps != 1:
                continue
            s = tuple(leading_terms(alexander_band(w), depth))
            b = tuple(leading_terms(alexander_burau(band_to_artin(w)), depth))
            out.append(LeadingTermCheck(row.label, params, comps, s, b, row.expected))
    return out
