"""Sparse multivariate polynomials with exact rational coefficients.

Variables are doubly indexed coordinates ``x[s,i]``, ``y[s,j]`` (or any other
single-letter family used for generic symbols).  A monomial is a tuple of
``(VarId, exponent)`` pairs sorted by the canonical variable order, so that
every polynomial has exactly one stored form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

Scalar = Union[int, Fraction]


class VarId(NamedTuple):
    """A coordinate function.

    Field order is the canonical sort order: family first, then column, then
    row.  Build instances with :func:`var` (or :func:`xv`/:func:`yv`), which
    take the more natural ``(family, row, col)`` argument order.
    """

    family: str
    col: int
    row: int

    def __str__(self) -> str:
        return f"{self.family}[{self.row},{self.col}]"


def var(family: str, row: int, col: int) -> VarId:
    if row < 1 or col < 1:
        raise ValueError(f"indices are 1-based, got {family}[{row},{col}]")
    return VarId(family, col, row)


def xv(s: int, i: int) -> VarId:
    return var("x", s, i)


def yv(s: int, j: int) -> VarId:
    return var("y", s, j)


Monomial = tuple  # tuple[tuple[VarId, int], ...], sorted, exponents > 0

ONE: Monomial = ()


@lru_cache(maxsize=1 << 20)
def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    db = dict(b)
    return all(db.get(v, 0) >= e for v, e in a)


def mono_from_dict(d: dict) -> Monomial:
    return tuple(sorted((v, e) for v, e in d.items() if e))


def mono_key(m: Monomial):
    """Sort key: higher degree first, then lexicographic in the variable order."""
    return (-mono_degree(m), tuple((v, -e) for v, e in m))


def mono_str(m: Monomial, fmt=str) -> str:
    return "*".join(fmt(v) if e == 1 else f"{fmt(v)}^{e}" for v, e in m)


def scalar_str(c: Scalar) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render_terms(items) -> str:
    """Join ``(coef, body)`` pairs as ``a*body + b*body - ...``."""
    out = []
    for coef, body in items:
        c = Fraction(coef)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not body:
            s = scalar_str(c)
        elif c == 1:
            s = body
        else:
            s = f"{scalar_str(c)}*{body}"
        out.append((sign, s))
    if not out:
        return "0"
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, s in out[1:]:
        text += f" {sign} {s}"
    return text


class Poly:
    """Polynomial as a dict ``{monomial: coefficient}`` with no zero entries.

    Instances are treated as immutable; every operation returns a new object.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({ONE: c})

    @classmethod
    def variable(cls, v: VarId, power: int = 1) -> "Poly":
        return cls({((v, power),) if power else ONE: 1})

    @classmethod
    def monomial(cls, m: Monomial, c: Scalar = 1) -> "Poly":
        return cls({m: c})

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly._raw({})
            return Poly._raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        t: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                s = t.get(m, 0) + ca * cb
                if s:
                    t[m] = s
                else:
                    del t[m]
        return Poly._raw(t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def diff(self, v: VarId, times: int = 1) -> "Poly":
        t: dict = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(v, 0)
            if e < times:
                continue
            f = 1
            for j in range(times):
                f *= e - j
            d[v] = e - times
            t[mono_from_dict(d)] = c * f
        return Poly._raw(t)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mono_key(mc[0]))

    def __str__(self):
        return render_terms((c, mono_str(m)) for m, c in self.sorted_terms())

    def __repr__(self):
        return f"Poly({self})"


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def partial_derivative(p: Poly, v: VarId) -> Poly:
    return p.diff(v)


class NotHomogeneous(ValueError):
    pass


def monomial_column_degrees(m: Monomial, k: int) -> tuple:
    deg = [0] * k
    for v, e in m:
        if v.col > k:
            raise ValueError(f"variable {v} outside columns 1..{k}")
        deg[v.col - 1] += e
    return tuple(deg)


def column_multidegree(p: Poly, k: int) -> tuple:
    """Common column multidegree of all terms of ``p`` (columns ``1..k``).

    Raises :class:`NotHomogeneous` if the terms disagree and ``ValueError``
    for the zero polynomial.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no multidegree")
    degs = {monomial_column_degrees(m, k) for m in p.terms}
    if len(degs) != 1:
        raise NotHomogeneous(f"terms have column degrees {sorted(degs)}")
    return degs.pop()


def x(s: int, i: int) -> Poly:
    return Poly.variable(xv(s, i))


def y(s: int, j: int) -> Poly:
    return Poly.variable(yv(s, j))


def symbol(family: str, row: int, col: int) -> Poly:
    return Poly.variable(var(family, row, col))


def poly_sum(items: Iterable[Poly]) -> Poly:
    t: dict = {}
    for p in items:
        for m, c in p.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                del t[m]
    return Poly._raw(t)
