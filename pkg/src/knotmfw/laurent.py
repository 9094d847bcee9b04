"""Sparse Laurent polynomials with arbitrary-precision integer coefficients.

Two concrete rings are used throughout the package:

* :class:`LaurentPoly2` -- ``Z[v^{+-1}, z^{+-1}]``, home of HOMFLYPT polynomials;
* :class:`LaurentPoly1` -- ``Z[t^{+-1}]``, home of Alexander polynomials.

Values are immutable and hashable.  Terms are stored in a dict keyed by
exponent tuples; zero coefficients are never stored.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

Exp = tuple  # tuple[int, ...]


class _Laurent:
    __slots__ = ("_terms", "_hash")
    VARS: tuple[str, ...] = ()

    def __init__(self, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] | int | None = None):
        d: dict[Exp, int] = {}
        if terms is None:
            pass
        elif isinstance(terms, int):
            if terms:
                d[(0,) * len(self.VARS)] = terms
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            nv = len(self.VARS)
            for e, c in items:
                e = tuple(e)
                if len(e) != nv:
                    raise ValueError(f"exponent {e} does not match variables {self.VARS}")
                c = int(c)
                if c:
                    c += d.get(e, 0)
                    if c:
                        d[e] = c
                    else:
                        d.pop(e, None)
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d: dict[Exp, int]):
        # d must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0,) * len(cls.VARS): 1})

    @classmethod
    def monomial(cls, coef: int, *exps: int):
        if len(exps) != len(cls.VARS):
            raise ValueError("wrong number of exponents")
        return cls._raw({tuple(exps): coef} if coef else {})

    # -- container protocol -------------------------------------------------
    def items(self) -> list[tuple[Exp, int]]:
        """Terms in canonical (ascending lexicographic) order."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Exp, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, *exps: int) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._terms)
        for e, c in other._terms.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                del d[e]
        return self._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.zero()
            return self._raw({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        d: dict[Exp, int] = {}
        if len(b) == 1:
            ((eb, cb),) = b.items()
            for ea, ca in a.items():
                d[tuple(x + y for x, y in zip(ea, eb))] = ca * cb
            return self._raw(d)
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = d.get(e, 0) + ca * cb
                if s:
                    d[e] = s
                else:
                    d.pop(e, None)
        return self._raw(d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return self._raw({tuple(x * k for x in e): c ** (-k)})
        result = self.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, *exps: int):
        """Multiply by the monomial with the given exponents."""
        return self._raw({tuple(x + y for x, y in zip(e, exps)): c for e, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self)(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    # -- degrees ------------------------------------------------------------
    def degree_range(self, var: int = 0) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        exps = [e[var] for e in self._terms]
        return min(exps), max(exps)

    # -- exact division -----------------------------------------------------
    def divide_exact(self, other):
        """Return ``r`` with ``other * r == self``, or ``None`` when no such
        Laurent polynomial exists."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot divide by this type")
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self.zero()
        nv = len(self.VARS)
        lo = [self.degree_range(i)[0] - other.degree_range(i)[0] for i in range(nv)]
        hi = [self.degree_range(i)[1] - other.degree_range(i)[1] for i in range(nv)]
        if any(a > b for a, b in zip(lo, hi)):
            return None
        lead_q = max(other._terms)
        cq = other._terms[lead_q]
        rem = dict(self._terms)
        quot: dict[Exp, int] = {}
        while rem:
            lead_r = max(rem)
            cr = rem[lead_r]
            if cr % cq:
                return None
            e = tuple(x - y for x, y in zip(lead_r, lead_q))
            if any(not (a <= x <= b) for a, x, b in zip(lo, e, hi)):
                return None
            c = cr // cq
            quot[e] = c
            for eq, cqq in other._terms.items():
                k = tuple(x + y for x, y in zip(eq, e))
                s = rem.get(k, 0) - c * cqq
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return self._raw(quot)

    # -- serialization ------------------------------------------------------
    def to_json(self) -> list[list[int]]:
        return [[c, *e] for e, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]):
        terms = []
        for row in data:
            row = list(row)
            if len(row) != len(cls.VARS) + 1:
                raise ValueError(f"bad term {row!r}")
            terms.append((tuple(row[1:]), row[0]))
        return cls(terms)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(f"{v}^{x}" for v, x in zip(self.VARS, e) if x)
            body = f"{abs(c)}*{mono}" if mono else f"{abs(c)}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    @classmethod
    def from_text(cls, text: str):
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls.zero()
        # split on +/- signs that do not belong to an exponent
        tokens = [t for t in re.split(r"(?<!\^)(?=[+-])", s) if t]
        terms = []
        for tok in tokens:
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            coef = 1
            exps = [0] * len(cls.VARS)
            for factor in tok.split("*"):
                if not factor:
                    raise ValueError(f"cannot parse term {tok!r}")
                if factor.isdigit():
                    coef *= int(factor)
                    continue
                m = re.fullmatch(r"([a-z])(?:\^(-?\d+))?", factor)
                if not m or m.group(1) not in cls.VARS:
                    raise ValueError(f"cannot parse factor {factor!r}")
                exps[cls.VARS.index(m.group(1))] += int(m.group(2) or 1)
            terms.append((tuple(exps), sign * coef))
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()!r})"


class LaurentPoly2(_Laurent):
    """Laurent polynomial in ``v`` and ``z``; exponents are ``(e_v, e_z)``."""

    __slots__ = ()
    VARS = ("v", "z")

    def v_degrees(self) -> tuple[int, int]:
        """``(d_minus, d_plus)``: minimal and maximal power of ``v``."""
        return self.degree_range(0)

    def substitute_v(self, value: int) -> "LaurentPoly1":
        """Set ``v`` to an integer (only +-1 keeps Laurent exponents valid);
        the result is a polynomial in ``z`` returned as a LaurentPoly1."""
        if value not in (1, -1):
            raise ValueError("only v = +-1 is supported")
        d: dict[Exp, int] = {}
        for (ev, ez), c in self._terms.items():
            d[(ez,)] = d.get((ez,), 0) + c * value ** (ev % 2)
        return LaurentPoly1(d)

    def mirror(self) -> "LaurentPoly2":
        """Polynomial of the mirror image: ``v -> -v^{-1}``."""
        return self._raw({(-ev, ez): (-c if ev % 2 else c) for (ev, ez), c in self._terms.items()})


class LaurentPoly1(_Laurent):
    """Laurent polynomial in ``t``."""

    __slots__ = ()
    VARS = ("t",)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly1":
        """Build ``sum c_i t^(low+i)``."""
        return cls(((low + i,), c) for i, c in enumerate(coeffs))

    def coeffs(self) -> tuple[int, list[int]]:
        """Return ``(low, [c_low, ..., c_high])``."""
        lo, hi = self.degree_range()
        return lo, [self._terms.get((k,), 0) for k in range(lo, hi + 1)]

    def evaluate(self, t: int) -> int:
        if any(e < 0 for (e,) in self._terms) and t not in (1, -1):
            raise ValueError("negative powers need a unit argument")
        return sum(c * t ** e if e >= 0 else c * t ** (-e) for (e,), c in self._terms.items())

    def invert_variable(self) -> "LaurentPoly1":
        """``t -> t^{-1}``."""
        return self._raw({(-e,): c for (e,), c in self._terms.items()})

    def normalized(self) -> "LaurentPoly1":
        """Representative of the class under multiplication by +-t^k whose
        lowest term is ``+1 * t^0`` up to its coefficient being positive."""
        if not self._terms:
            return self
        lo, coeffs = self.coeffs()
        sign = -1 if coeffs[0] < 0 else 1
        return self.from_coeffs([sign * c for c in coeffs])

    def equivalent(self, other: "LaurentPoly1") -> bool:
        """Equality up to multiplication by a unit ``+-t^k``."""
        return self.normalized() == other.normalized()
