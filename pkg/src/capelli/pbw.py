"""The enveloping algebra U(gl_m) (or U(gl_m + gl_m)) in PBW normal form.

Generators are ``GLGen(copy, a, b)`` standing for ``E_ab`` in the given copy,
totally ordered as tuples.  A PBW monomial is a weakly increasing tuple of
generators.  Straightening uses

    [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb

within a copy; generators of different copies commute.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .context import CaseContext, omega_E
from .poly import Scalar, render_terms
from .weyl import WeylOp, weyl_mul


class GLGen(NamedTuple):
    copy: int
    a: int
    b: int


PBWMonomial = tuple  # weakly increasing tuple of GLGen


def _bracket(x: GLGen, y: GLGen) -> tuple:
    """``[x, y]`` as ``((coef, gen), ...)``."""
    if x.copy != y.copy:
        return ()
    out = []
    if x.b == y.a:
        out.append((1, GLGen(x.copy, x.a, y.b)))
    if y.b == x.a:
        out.append((-1, GLGen(x.copy, y.a, x.b)))
    if len(out) == 2 and out[0][1] == out[1][1]:
        return ()
    return tuple(out)


def _acc(t: dict, key, c):
    s = t.get(key, 0) + c
    if s:
        t[key] = s
    else:
        t.pop(key, None)


@lru_cache(maxsize=1 << 20)
def _mul_mono_gen(mono: PBWMonomial, g: GLGen) -> tuple:
    """Straighten ``mono * g``; returns ``((monomial, coef), ...)``."""
    if not mono or mono[-1] <= g:
        return ((mono + (g,), 1),)
    x = mono[-1]
    prefix = mono[:-1]
    t: dict = {}
    # prefix*x*g = (prefix*g)*x + prefix*[x,g]
    for m1, c1 in _mul_mono_gen(prefix, g):
        for m2, c2 in _mul_mono_gen(m1, x):
            _acc(t, m2, c1 * c2)
    for c, h in _bracket(x, g):
        for m2, c2 in _mul_mono_gen(prefix, h):
            _acc(t, m2, c * c2)
    return tuple(t.items())


def _mul_monos(a: PBWMonomial, b: PBWMonomial) -> dict:
    cur = {a: 1}
    for g in b:
        nxt: dict = {}
        for m, c in cur.items():
            for m2, c2 in _mul_mono_gen(m, g):
                _acc(nxt, m2, c * c2)
        cur = nxt
    return cur


class PBWElement:
    """Element of U(gl_m) (``copies`` = 1) or U(gl_m + gl_m) (``copies`` = 2)."""

    __slots__ = ("terms", "m", "copies")

    def __init__(self, terms: dict | None, m: int, copies: int = 1):
        if copies not in (1, 2):
            raise ValueError("copies must be 1 or 2")
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        self.copies = copies
        t: dict = {}
        for word, c in (terms or {}).items():
            word = tuple(GLGen(*g) for g in word)
            for g in word:
                self._check_gen(g)
            if c:
                for m2, c2 in _straighten_word_memo(word):
                    _acc(t, m2, c * c2)
        self.terms = t

    def _check_gen(self, g: GLGen):
        if not (1 <= g.copy <= self.copies and 1 <= g.a <= self.m and 1 <= g.b <= self.m):
            raise IndexError(f"generator {tuple(g)} outside gl_{self.m} x {self.copies}")

    @classmethod
    def _raw(cls, terms: dict, m: int, copies: int) -> "PBWElement":
        e = cls.__new__(cls)
        e.terms = terms
        e.m = m
        e.copies = copies
        return e

    @classmethod
    def gen(cls, m: int, a: int, b: int, copy: int = 1, copies: int = 1) -> "PBWElement":
        e = cls._raw({}, m, copies)
        g = GLGen(copy, a, b)
        e._check_gen(g)
        e.terms = {(g,): 1}
        return e

    @classmethod
    def const(cls, c: Scalar, m: int, copies: int = 1) -> "PBWElement":
        return cls._raw({(): c} if c else {}, m, copies)

    @classmethod
    def zero(cls, m: int, copies: int = 1) -> "PBWElement":
        return cls._raw({}, m, copies)

    def _same_algebra(self, other: "PBWElement"):
        if (self.m, self.copies) != (other.m, other.copies):
            raise ValueError(
                f"algebra mismatch: gl_{self.m}x{self.copies} vs gl_{other.m}x{other.copies}"
            )

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return PBWElement.const(other, self.m, self.copies)
        if isinstance(other, PBWElement):
            self._same_algebra(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return PBWElement._raw(t, self.m, self.copies)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement._raw({k: -c for k, c in self.terms.items()}, self.m, self.copies)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return PBWElement.zero(self.m, self.copies)
            return PBWElement._raw(
                {k: c * other for k, c in self.terms.items()}, self.m, self.copies
            )
        if not isinstance(other, PBWElement):
            return NotImplemented
        return pbw_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(k) for k in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: (-len(kc[0]), kc[0]))

    def _gen_str(self, g: GLGen) -> str:
        name = "E" if self.copies == 1 else ("Ex" if g.copy == 1 else "Ey")
        return f"{name}[{g.a},{g.b}]"

    def _mono_str(self, mono: PBWMonomial) -> str:
        parts = []
        i = 0
        while i < len(mono):
            j = i
            while j < len(mono) and mono[j] == mono[i]:
                j += 1
            s = self._gen_str(mono[i])
            parts.append(s if j - i == 1 else f"{s}^{j - i}")
            i = j
        return "*".join(parts)

    def __str__(self):
        return render_terms((c, self._mono_str(k)) for k, c in self.sorted_terms())

    def __repr__(self):
        return f"PBWElement({self})"


def pbw_mul(a: PBWElement, b: PBWElement) -> PBWElement:
    a._same_algebra(b)
    t: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            for m, c in _mul_monos(ma, mb).items():
                _acc(t, m, ca * cb * c)
    return PBWElement._raw(t, a.m, a.copies)


def pbw_commutator(a: PBWElement, b: PBWElement) -> PBWElement:
    return pbw_mul(a, b) - pbw_mul(b, a)


@lru_cache(maxsize=1 << 16)
def _straighten_word_memo(word: tuple) -> tuple:
    return tuple(_mul_monos((), word).items())


def straighten_word(word, strategy: str = "leftmost", seed: int | None = None) -> dict:
    """Straighten an arbitrary word of generators by adjacent-swap rewriting.

    Independent of the memoized insertion used by :func:`pbw_mul`; the
    ``strategy`` picks which out-of-order adjacent pair to rewrite next
    (``leftmost``, ``rightmost`` or ``random``).  Used to test confluence.
    """
    rng = random.Random(seed)
    pending = {tuple(GLGen(*g) for g in word): 1}
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        inversions = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
        if not inversions:
            _acc(done, w, c)
            continue
        if strategy == "leftmost":
            i = inversions[0]
        elif strategy == "rightmost":
            i = inversions[-1]
        elif strategy == "random":
            i = rng.choice(inversions)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        x, y = w[i], w[i + 1]
        _acc(pending, w[:i] + (y, x) + w[i + 2 :], c)
        for cb, h in _bracket(x, y):
            _acc(pending, w[:i] + (h,) + w[i + 2 :], c * cb)
    return done


# -- the representation omega on U(m) ----------------------------------------


def _check_ctx(e: PBWElement, ctx: CaseContext):
    if e.m != ctx.gl_size or e.copies != ctx.copies:
        raise ValueError(
            f"PBW element in gl_{e.m}x{e.copies} does not match case {ctx.label()} "
            f"(needs gl_{ctx.gl_size}x{ctx.copies})"
        )


@lru_cache(maxsize=1 << 16)
def _omega_mono(ctx: CaseContext, mono: PBWMonomial) -> WeylOp:
    if not mono:
        return WeylOp.const(1)
    g = mono[-1]
    return weyl_mul(_omega_mono(ctx, mono[:-1]), omega_E(ctx, g.a, g.b, g.copy))


def pbw_map_omega(e: PBWElement, ctx: CaseContext) -> WeylOp:
    """Apply the algebra morphism ``E_st -> omega(E_st)`` to ``e``."""
    _check_ctx(e, ctx)
    t: dict = {}
    for mono, c in e.terms.items():
        for key, c2 in _omega_mono(ctx, mono).terms.items():
            _acc(t, key, c * c2)
    return WeylOp._raw(t)


def h_basis(ctx: CaseContext) -> list:
    """A basis of the subalgebra h inside m, as degree-one PBW elements."""
    m, cp = ctx.gl_size, ctx.copies

    def E(a, b, copy=1):
        return PBWElement.gen(m, a, b, copy, cp)

    n = ctx.n
    if ctx.case == "R":
        return [E(s, t) - E(t, s) for s in range(1, n + 1) for t in range(s + 1, n + 1)]
    if ctx.case == "C":
        return [E(s, t, 1) - E(t, s, 2) for s in range(1, n + 1) for t in range(1, n + 1)]
    out = [E(s, t) - E(n + t, n + s) for s in range(1, n + 1) for t in range(1, n + 1)]
    out += [E(s, n + t) + E(t, n + s) for s in range(1, n + 1) for t in range(s, n + 1)]
    out += [E(n + s, t) + E(n + t, s) for s in range(1, n + 1) for t in range(s, n + 1)]
    return out
