"""Polynomial-coefficient differential operators in normal order.

A term ``(pos, der)`` means ``x^pos * d^der``: all multiplication operators sit
to the left of all derivatives.  Products are brought back to this form with
the closed reordering rule

    d^m x^n = sum_j C(m, j) (n)_j x^(n-j) d^(m-j)

applied independently in every variable.

Operators may carry a power of the imaginary unit (``ipow`` in {0, 1}), which
keeps the scalars rational while still letting ``sqrt(-1) * (...)`` generators
be written down literally.  ``i*i`` is folded into the coefficient as ``-1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .poly import (
    ONE,
    Monomial,
    Poly,
    Scalar,
    VarId,
    mono_degree,
    mono_from_dict,
    mono_key,
    mono_mul,
    mono_str,
    render_terms,
)


def _dstr(v: VarId) -> str:
    return f"d[{v.family},{v.row},{v.col}]"


@lru_cache(maxsize=1 << 20)
def _reorder(der: Monomial, pos: Monomial) -> tuple:
    """Normal-order ``d^der * x^pos``; returns ``((coef, pos', der'), ...)``."""
    if not der or not pos:
        return ((1, pos, der),)
    dd = dict(der)
    pp = dict(pos)
    common = [v for v in dd if v in pp]
    if not common:
        return ((1, pos, der),)
    choices = []
    for v in common:
        m, n = dd[v], pp[v]
        opts = []
        falling = 1
        for j in range(min(m, n) + 1):
            if j:
                falling *= n - j + 1
            opts.append((comb(m, j) * falling, v, j))
        choices.append(opts)
    out = []
    for pick in product(*choices):
        coef = 1
        p2 = dict(pp)
        d2 = dict(dd)
        for c, v, j in pick:
            coef *= c
            p2[v] -= j
            d2[v] -= j
        out.append((coef, mono_from_dict(p2), mono_from_dict(d2)))
    return tuple(out)


class WeylOp:
    """Normal-ordered differential operator ``{(pos, der): coef}``."""

    __slots__ = ("terms", "ipow")

    def __init__(self, terms: dict | None = None, ipow: int = 0):
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}
        if ipow not in (0, 1):
            raise ValueError("ipow must be 0 or 1")
        self.ipow = ipow

    @classmethod
    def _raw(cls, terms: dict, ipow: int = 0) -> "WeylOp":
        w = cls.__new__(cls)
        w.terms = terms
        w.ipow = ipow
        return w

    @classmethod
    def const(cls, c: Scalar) -> "WeylOp":
        return cls({(ONE, ONE): c})

    @classmethod
    def zero(cls) -> "WeylOp":
        return cls._raw({})

    @classmethod
    def mult(cls, v: VarId) -> "WeylOp":
        return cls._raw({(((v, 1),), ONE): 1})

    @classmethod
    def deriv(cls, v: VarId) -> "WeylOp":
        return cls._raw({(ONE, ((v, 1),)): 1})

    @classmethod
    def from_poly(cls, p: Poly) -> "WeylOp":
        return cls._raw({(m, ONE): c for m, c in p.terms.items()})

    @classmethod
    def from_derivative_poly(cls, p: Poly) -> "WeylOp":
        """Constant-coefficient operator obtained by substituting d for x in ``p``."""
        return cls._raw({(ONE, m): c for m, c in p.terms.items()})

    def times_i(self) -> "WeylOp":
        if self.ipow:
            return WeylOp._raw({k: -c for k, c in self.terms.items()}, 0)
        return WeylOp._raw(dict(self.terms), 1)

    # -- arithmetic ---------------------------------------------------------

    def _phase_for_sum(self, other: "WeylOp") -> int:
        if not self.terms:
            return other.ipow
        if not other.terms:
            return self.ipow
        if self.ipow != other.ipow:
            raise ValueError("cannot add operators with different powers of sqrt(-1)")
        return self.ipow

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylOp.const(other)
        if not isinstance(other, WeylOp):
            return NotImplemented
        ipow = self._phase_for_sum(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return WeylOp._raw(t, ipow)

    __radd__ = __add__

    def __neg__(self):
        return WeylOp._raw({k: -c for k, c in self.terms.items()}, self.ipow)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylOp.const(other)
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return WeylOp._raw({})
            return WeylOp._raw({k: c * other for k, c in self.terms.items()}, self.ipow)
        if not isinstance(other, WeylOp):
            return NotImplemented
        return weyl_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        result = WeylOp.const(1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylOp.const(other)
        if not isinstance(other, WeylOp):
            return NotImplemented
        return weyl_equal(self, other)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> int:
        """Highest derivative degree (-1 for the zero operator)."""
        return max((mono_degree(d) for _, d in self.terms), default=-1)

    def top_order_part(self) -> "WeylOp":
        top = self.order()
        return WeylOp._raw(
            {k: c for k, c in self.terms.items() if mono_degree(k[1]) == top}, self.ipow
        )

    def sorted_terms(self):
        def key(item):
            (p, d), _ = item
            return (-(mono_degree(p) + mono_degree(d)), mono_key(p), mono_key(d))

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        parts = []
        for (p, d), c in self.sorted_terms():
            body = "*".join(s for s in (mono_str(p), mono_str(d, _dstr)) if s)
            parts.append((c, body))
        text = render_terms(parts)
        if self.ipow and self.terms:
            return f"I*({text})"
        return text

    def __repr__(self):
        return f"WeylOp({self})"


def weyl_from_poly(p: Poly) -> WeylOp:
    return WeylOp.from_poly(p)


def weyl_mul(a: WeylOp, b: WeylOp) -> WeylOp:
    """Composition ``a o b`` in normal order."""
    ipow = a.ipow + b.ipow
    sign = 1
    if ipow == 2:
        ipow, sign = 0, -1
    t: dict = {}
    for (pa, da), ca in a.terms.items():
        for (pb, db), cb in b.terms.items():
            c0 = ca * cb * sign
            for c, p, d in _reorder(da, pb):
                key = (mono_mul(pa, p), mono_mul(d, db))
                s = t.get(key, 0) + c0 * c
                if s:
                    t[key] = s
                else:
                    del t[key]
    return WeylOp._raw(t, ipow)


def weyl_commutator(a: WeylOp, b: WeylOp) -> WeylOp:
    return weyl_mul(a, b) - weyl_mul(b, a)


def weyl_equal(a: WeylOp, b: WeylOp) -> bool:
    if not a.terms and not b.terms:
        return True
    return a.ipow == b.ipow and a.terms == b.terms


def _diff_monomial(m: Monomial, der: Monomial):
    """``d^der (x^m)`` as ``(coef, monomial)`` or ``None`` if it vanishes."""
    if not der:
        return 1, m
    d = dict(m)
    coef = 1
    for v, k in der:
        e = d.get(v, 0)
        if e < k:
            return None
        for j in range(k):
            coef *= e - j
        d[v] = e - k
    return coef, mono_from_dict(d)


def weyl_apply(op: WeylOp, f: Poly) -> Poly:
    """Act by ``op`` on ``f``: derivatives first, then multiplications."""
    if op.ipow and op.terms and f.terms:
        raise ValueError("operator carries an odd power of sqrt(-1); result not rational")
    by_der: dict = {}
    for (p, d), c in op.terms.items():
        by_der.setdefault(d, []).append((p, c))
    t: dict = {}
    for d, pos_terms in by_der.items():
        for m, cf in f.terms.items():
            r = _diff_monomial(m, d)
            if r is None:
                continue
            k, md = r
            for p, c in pos_terms:
                key = mono_mul(p, md)
                s = t.get(key, 0) + c * cf * k
                if s:
                    t[key] = s
                else:
                    del t[key]
    return Poly._raw(t)


def weyl_sum(items) -> WeylOp:
    total = WeylOp.zero()
    for w in items:
        total = total + w
    return total


def bounded_degree_monomials(variables, max_degree: int):
    """All monomials of total degree ``<= max_degree`` in ``variables``."""
    variables = sorted(variables)
    result = []
    stack = [({}, 0, 0)]
    while stack:
        d, idx, deg = stack.pop()
        if idx == len(variables):
            result.append(mono_from_dict(d))
            continue
        for e in range(max_degree - deg + 1):
            nd = dict(d)
            if e:
                nd[variables[idx]] = e
            stack.append((nd, idx + 1, deg + e))
    return sorted(result, key=mono_key)


def agree_on_monomials(a: WeylOp, b: WeylOp, max_degree: int) -> bool:
    """Compare the actions of ``a`` and ``b`` on every monomial of degree ``<= max_degree``.

    For operators of order ``<= max_degree`` this decides operator equality;
    it is the independent oracle for :func:`weyl_mul`.
    """
    if a.ipow != b.ipow and a.terms and b.terms:
        return False
    variables = set()
    for w in (a, b):
        for p, d in w.terms:
            variables.update(v for v, _ in p)
            variables.update(v for v, _ in d)
    a0 = WeylOp._raw(a.terms)
    b0 = WeylOp._raw(b.terms)
    for m in bounded_degree_monomials(variables, max_degree):
        f = Poly.monomial(m)
        if weyl_apply(a0, f) != weyl_apply(b0, f):
            return False
    return True
