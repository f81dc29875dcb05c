"""See-saw case parameters and the explicit Weil-representation operators.

Three cases are supported:

* ``R``: (Sp_2k, U_k) against (U_n, O_n) on ``V = Mat(n, k)``;
* ``C``: (U_{p,q}, U_p x U_q) against (U_n x U_n, U_n) on
  ``V = Mat(n, p) + Mat(n, q)`` with coordinates ``x[s,i]`` and ``y[s,j]``;
* ``H``: (O*_2k, U_k) against (U_2n, USp_n) on ``V = Mat(2n, k)``, where row
  ``s + n`` plays the role of the partner row of ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import xv, yv
from .weyl import WeylOp


@dataclass(frozen=True)
class CaseContext:
    case: str
    n: int
    k: int | None = None
    p: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.case not in ("R", "C", "H"):
            raise ValueError(f"unknown case {self.case!r}")
        if self.case == "C":
            if self.p is None or self.q is None or self.k is not None:
                raise ValueError("case C takes p and q (not k)")
            sizes = (self.n, self.p, self.q)
        else:
            if self.k is None or self.p is not None or self.q is not None:
                raise ValueError(f"case {self.case} takes k (not p, q)")
            sizes = (self.n, self.k)
        if any(s < 1 for s in sizes):
            raise ValueError("all size parameters must be >= 1")

    @classmethod
    def real(cls, k: int, n: int) -> "CaseContext":
        return cls("R", n, k=k)

    @classmethod
    def complex(cls, p: int, q: int, n: int) -> "CaseContext":
        return cls("C", n, p=p, q=q)

    @classmethod
    def quaternionic(cls, k: int, n: int) -> "CaseContext":
        return cls("H", n, k=k)

    @property
    def rank(self) -> int:
        """Number of generators of the invariant algebra ``S(p)^K``."""
        if self.case == "R":
            return self.k
        if self.case == "C":
            return min(self.p, self.q)
        return self.k // 2

    @property
    def gl_size(self) -> int:
        return 2 * self.n if self.case == "H" else self.n

    @property
    def copies(self) -> int:
        return 2 if self.case == "C" else 1

    @property
    def max_capelli_degree(self) -> int:
        """Largest d for which the Capelli element is a non-empty sum."""
        return self.n

    @property
    def params(self) -> dict:
        if self.case == "C":
            return {"case": "C", "p": self.p, "q": self.q, "n": self.n}
        return {"case": self.case, "k": self.k, "n": self.n}

    def label(self) -> str:
        return ",".join(f"{key}={val}" for key, val in self.params.items())

    def variables(self) -> list:
        if self.case == "R":
            return [xv(s, i) for s in range(1, self.n + 1) for i in range(1, self.k + 1)]
        if self.case == "C":
            return [xv(s, i) for s in range(1, self.n + 1) for i in range(1, self.p + 1)] + [
                yv(s, j) for s in range(1, self.n + 1) for j in range(1, self.q + 1)
            ]
        return [xv(s, i) for s in range(1, 2 * self.n + 1) for i in range(1, self.k + 1)]

    def g_dims(self) -> tuple:
        """Shape ``(rows, cols)`` of the G block (F is its transpose shape)."""
        if self.case == "C":
            return self.p, self.q
        return self.k, self.k


def _check(index, lo, hi, what):
    if not lo <= index <= hi:
        raise IndexError(f"{what} index {index} outside {lo}..{hi}")


def _mono2(v, w) -> WeylOp:
    return WeylOp.mult(v) * WeylOp.mult(w)


def _der2(v, w) -> WeylOp:
    return WeylOp.deriv(v) * WeylOp.deriv(w)


def _euler(v, w) -> WeylOp:
    """``v * d/dw``."""
    return WeylOp.mult(v) * WeylOp.deriv(w)


def _sum(ops) -> WeylOp:
    total = WeylOp.zero()
    for op in ops:
        total = total + op
    return total


@lru_cache(maxsize=None)
def omega_G(ctx: CaseContext, i: int, j: int) -> WeylOp:
    rows, cols = ctx.g_dims()
    _check(i, 1, rows, "G row")
    _check(j, 1, cols, "G column")
    n = ctx.n
    if ctx.case == "R":
        op = _sum(_mono2(xv(s, i), xv(s, j)) for s in range(1, n + 1))
    elif ctx.case == "C":
        op = _sum(_mono2(xv(s, i), yv(s, j)) for s in range(1, n + 1))
    else:
        op = _sum(
            _mono2(xv(s, i), xv(s + n, j)) - _mono2(xv(s + n, i), xv(s, j))
            for s in range(1, n + 1)
        )
    return op.times_i()


@lru_cache(maxsize=None)
def omega_F(ctx: CaseContext, i: int, j: int) -> WeylOp:
    """Image of ``F_ij``; in case C, ``1 <= i <= q`` and ``1 <= j <= p``."""
    rows, cols = ctx.g_dims()
    _check(i, 1, cols, "F row")
    _check(j, 1, rows, "F column")
    n = ctx.n
    if ctx.case == "R":
        op = _sum(_der2(xv(s, i), xv(s, j)) for s in range(1, n + 1))
    elif ctx.case == "C":
        op = _sum(_der2(xv(s, j), yv(s, i)) for s in range(1, n + 1))
    else:
        op = _sum(
            _der2(xv(s, j), xv(s + n, i)) - _der2(xv(s + n, j), xv(s, i))
            for s in range(1, n + 1)
        )
    return op.times_i()


@lru_cache(maxsize=None)
def omega_H(ctx: CaseContext, i: int, j: int, block: str = "x") -> WeylOp:
    """Image of ``H_ij`` (case C: ``block`` selects H^(x) or H^(y))."""
    n = ctx.n
    delta = 1 if i == j else 0
    if ctx.case == "R":
        _check(i, 1, ctx.k, "H")
        _check(j, 1, ctx.k, "H")
        return _sum(_euler(xv(s, i), xv(s, j)) for s in range(1, n + 1)) + Fraction(n, 2) * delta
    if ctx.case == "C":
        if block == "x":
            _check(i, 1, ctx.p, "H^(x)")
            _check(j, 1, ctx.p, "H^(x)")
            return (
                _sum(_euler(xv(s, i), xv(s, j)) for s in range(1, n + 1))
                + Fraction(n, 2) * delta
            )
        if block == "y":
            _check(i, 1, ctx.q, "H^(y)")
            _check(j, 1, ctx.q, "H^(y)")
            return (
                -_sum(_euler(yv(s, j), yv(s, i)) for s in range(1, n + 1))
                - Fraction(n, 2) * delta
            )
        raise ValueError(f"block must be 'x' or 'y', got {block!r}")
    _check(i, 1, ctx.k, "H")
    _check(j, 1, ctx.k, "H")
    return _sum(_euler(xv(s, i), xv(s, j)) for s in range(1, 2 * n + 1)) + n * delta


@lru_cache(maxsize=None)
def omega_E(ctx: CaseContext, s: int, t: int, copy: int = 1) -> WeylOp:
    """Image of the matrix unit ``E_st`` of m (case C: ``copy`` 1 is E^(x), 2 is E^(y))."""
    m = ctx.gl_size
    _check(s, 1, m, "E")
    _check(t, 1, m, "E")
    delta = 1 if s == t else 0
    if ctx.case == "C":
        if copy == 1:
            return (
                _sum(_euler(xv(s, i), xv(t, i)) for i in range(1, ctx.p + 1))
                + Fraction(ctx.p, 2) * delta
            )
        if copy == 2:
            return (
                _sum(_euler(yv(s, j), yv(t, j)) for j in range(1, ctx.q + 1))
                + Fraction(ctx.q, 2) * delta
            )
        raise ValueError(f"copy must be 1 or 2, got {copy}")
    if copy != 1:
        raise ValueError(f"case {ctx.case} has a single gl copy")
    return (
        _sum(_euler(xv(s, i), xv(t, i)) for i in range(1, ctx.k + 1))
        + Fraction(ctx.k, 2) * delta
    )
