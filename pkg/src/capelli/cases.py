"""Capelli identities for the three see-saw cases.

For each case this module builds ``omega(iota(X_d))`` directly in the Weyl
algebra and the Capelli element ``C_d`` in the enveloping algebra of m, then
compares ``omega(C_d)`` with the former as normal-ordered operators.
"""

from __future__ import annotations

from fractions import Fraction

from .context import CaseContext, omega_E, omega_F, omega_G, omega_H
from .nclinalg import column_det, index_sets, paired_rows, pfaffian
from .pbw import PBWElement, h_basis, pbw_commutator, pbw_map_omega
from .poly import Poly, xv
from .weyl import WeylOp, weyl_commutator, weyl_mul

__all__ = [
    "CaseContext",
    "omega_E",
    "omega_F",
    "omega_G",
    "omega_H",
    "iota_Xd",
    "capelli_Cd",
    "verify_identity",
    "verify_h_invariance",
    "verify_capelli_lemma",
    "verify_degree_consistency",
    "omega_bracket_check",
]


def iota_Xd(ctx: CaseContext, d: int) -> WeylOp:
    """``omega(iota(X_d))``: G-minors to the left of F-minors."""
    if not 1 <= d <= ctx.rank:
        raise ValueError(f"d={d} outside 1..{ctx.rank} for case {ctx.label()}")
    total = WeylOp.zero()
    if ctx.case in ("R", "C"):
        rows, cols = ctx.g_dims()
        Is, Js = index_sets(rows, d), index_sets(cols, d)
        detG = {
            (I, J): column_det([[omega_G(ctx, i, j) for j in J] for i in I]) for I in Is for J in Js
        }
        detF = {
            (J, I): column_det([[omega_F(ctx, j, i) for i in I] for j in J]) for I in Is for J in Js
        }
        for I in Is:
            for J in Js:
                total = total + weyl_mul(detG[I, J], detF[J, I])
    else:
        for I in index_sets(ctx.k, 2 * d):
            pg = pfaffian([[omega_G(ctx, i, j) for j in I] for i in I])
            pf = pfaffian([[omega_F(ctx, i, j) for j in I] for i in I])
            total = total + weyl_mul(pg, pf)
    if total.ipow and total.terms:
        raise ArithmeticError("odd power of sqrt(-1) survived in iota(X_d)")
    return WeylOp._raw(total.terms)


def _shifted_cdet(ctx: CaseContext, S, T, shift, copy: int = 1) -> PBWElement:
    """``cdet(E_{s_a t_b} + shift(b) delta_{s_a t_b})_{a,b}`` in U(m)."""
    m, cp = ctx.gl_size, ctx.copies
    M = []
    for s in S:
        row = []
        for b, t in enumerate(T, start=1):
            e = PBWElement.gen(m, s, t, copy, cp)
            if s == t:
                e = e + shift(b)
            row.append(e)
        M.append(row)
    return column_det(M)


def capelli_Cd(ctx: CaseContext, d: int, shifted: bool = True) -> PBWElement:
    """The Capelli element ``C_d`` (zero when ``d > n``, an empty sum).

    With ``shifted=False`` every diagonal shift is dropped; the result has the
    same top-degree part and is used for the principal-symbol comparison.
    """
    if not 1 <= d <= max(ctx.n, ctx.rank):
        raise ValueError(f"d={d} outside 1..{max(ctx.n, ctx.rank)} for case {ctx.label()}")
    m, cp = ctx.gl_size, ctx.copies
    total = PBWElement.zero(m, cp)
    n = ctx.n

    def sh(c):
        if not shifted:
            return lambda b: 0
        return lambda b: d - b + c

    if ctx.case == "R":
        half = Fraction(ctx.k, 2)
        for S in index_sets(n, d):
            for T in index_sets(n, d):
                left = _shifted_cdet(ctx, S, T, sh(-1 - half))
                right = _shifted_cdet(ctx, S, T, sh(-half))
                total = total + left * right
        return total if d % 2 == 0 else -total
    if ctx.case == "C":
        for S in index_sets(n, d):
            for T in index_sets(n, d):
                left = _shifted_cdet(ctx, S, T, sh(-Fraction(ctx.p, 2)), copy=1)
                right = _shifted_cdet(ctx, S, T, sh(-Fraction(ctx.q, 2)), copy=2)
                total = total + left * right
        return total if d % 2 == 0 else -total
    shift = sh(d - Fraction(ctx.k, 2))
    for S0 in index_sets(n, d):
        for T0 in index_sets(n, d):
            S, T = paired_rows(S0, n), paired_rows(T0, n)
            total = total + _shifted_cdet(ctx, S, T, shift)
    return total


def verify_identity(ctx: CaseContext, d: int) -> dict:
    """Compare ``omega(iota(X_d))`` with ``omega(C_d)``; reports the difference."""
    lhs = iota_Xd(ctx, d)
    rhs = pbw_map_omega(capelli_Cd(ctx, d), ctx)
    diff = lhs - rhs
    return {"holds": diff.is_zero(), "lhs": lhs, "rhs": rhs, "diff": diff}


def first_term(op: WeylOp) -> str:
    """The leading term of ``op`` in the canonical order (empty for zero)."""
    items = op.sorted_terms()
    if not items:
        return ""
    return str(WeylOp._raw(dict(items[:1]), op.ipow))


def verify_h_invariance(ctx: CaseContext, d: int) -> dict:
    """``[h, C_d] = 0`` for a basis of h, in U(m) and after applying omega."""
    C = capelli_Cd(ctx, d)
    wC = pbw_map_omega(C, ctx)
    pbw_fail, omega_fail = [], []
    basis = h_basis(ctx)
    for h in basis:
        if not pbw_commutator(h, C).is_zero():
            pbw_fail.append(str(h))
        if not weyl_commutator(pbw_map_omega(h, ctx), wC).is_zero():
            omega_fail.append(str(h))
    return {
        "holds": not pbw_fail and not omega_fail,
        "basis_size": len(basis),
        "pbw_failures": pbw_fail,
        "omega_failures": omega_fail,
    }


def verify_degree_consistency(ctx: CaseContext, d: int) -> dict:
    """Order of ``iota(X_d)`` is ``2d`` and its top part matches the unshifted ``C_d``."""
    lhs = iota_Xd(ctx, d)
    top = pbw_map_omega(capelli_Cd(ctx, d, shifted=False), ctx).top_order_part()
    expected_order = 2 * d if ctx.n >= d else -1
    ok = lhs.order() == expected_order and (lhs.top_order_part() - top).is_zero()
    return {"holds": ok, "order": lhs.order(), "expected_order": expected_order}


# -- the two lemmas behind the Case R proof -----------------------------------


def _xdet(S, I) -> Poly:
    return column_det([[Poly.variable(xv(s, i)) for i in I] for s in S])


def _ddet(T, J) -> WeylOp:
    return WeylOp.from_derivative_poly(_xdet(T, J))


def _euler_matrix(k, S, T, u) -> list:
    """``(sum_i x_{s_a i} d_{t_b i} + u(b) delta_{s_a t_b})_{a,b}``."""
    M = []
    for s in S:
        row = []
        for b, t in enumerate(T, start=1):
            e = WeylOp.zero()
            for i in range(1, k + 1):
                e = e + WeylOp.mult(xv(s, i)) * WeylOp.deriv(xv(t, i))
            if s == t:
                e = e + u(b)
            row.append(e)
        M.append(row)
    return M


def lemma_star_holds(k: int, n: int, d: int, S, T) -> bool:
    ctx = CaseContext.real(k, n)
    lhs = WeylOp.zero()
    for J in index_sets(k, d):
        lhs = lhs + WeylOp.from_poly(_xdet(S, J)) * _ddet(T, J)
    half = Fraction(k, 2)
    M = []
    for s in S:
        row = []
        for b, t in enumerate(T, start=1):
            e = omega_E(ctx, s, t)
            if s == t:
                e = e + (d - b - half)
            row.append(e)
        M.append(row)
    return (lhs - column_det(M)).is_zero()


def lemma_double_star_holds(k: int, n: int, d: int, S, T, I, u) -> bool:
    X = WeylOp.from_poly(_xdet(S, I))
    left = X * column_det(_euler_matrix(k, S, T, u))
    right = column_det(_euler_matrix(k, S, T, lambda b: u(b) - 1)) * X
    return (left - right).is_zero()


def lemma_shift_offsets(k: int) -> tuple:
    """Constant offsets ``c`` in ``u_b = d - b + c`` tried for the commutation lemma."""
    return (Fraction(0), Fraction(-1), -Fraction(k, 2))


def verify_capelli_lemma(k: int, n: int, d: int, double_star: bool = True) -> dict:
    """Both lemmas for every ``S, T`` (and every ``I`` for the second)."""
    if not 1 <= d <= min(k, n):
        raise ValueError(f"need 1 <= d <= min(k, n), got d={d}, k={k}, n={n}")
    star_fail, dstar_fail = [], []
    for S in index_sets(n, d):
        for T in index_sets(n, d):
            if not lemma_star_holds(k, n, d, S, T):
                star_fail.append((S, T))
            if not double_star:
                continue
            for I in index_sets(k, d):
                for c in lemma_shift_offsets(k):
                    if not lemma_double_star_holds(k, n, d, S, T, I, lambda b, c=c: d - b + c):
                        dstar_fail.append((S, T, I, c))
    return {
        "holds": not star_fail and not dstar_fail,
        "star_failures": star_fail,
        "double_star_failures": dstar_fail,
    }


# -- omega as a Lie algebra map on g ------------------------------------------


def _mat_bracket(X: dict, Y: dict) -> dict:
    out: dict = {}
    for (a, b), c in X.items():
        for (b2, e), c2 in Y.items():
            if b == b2:
                out[a, e] = out.get((a, e), 0) + c * c2
    for (a, b), c in Y.items():
        for (b2, e), c2 in X.items():
            if b == b2:
                out[a, e] = out.get((a, e), 0) - c * c2
    return {k: v for k, v in out.items() if v}


def g_generators(ctx: CaseContext) -> list:
    """``(label, matrix, omega image, pivot)`` for a basis of g.

    Matrices are the standard realizations in gl_2k (R, H) or gl_{p+q} (C);
    ``pivot`` is a matrix position where this basis element alone is nonzero.
    """
    out = []
    if ctx.case == "C":
        p, q = ctx.p, ctx.q
        for i in range(1, p + 1):
            for j in range(1, p + 1):
                out.append((f"Hx[{i},{j}]", {(i, j): 1}, omega_H(ctx, i, j, "x"), (i, j)))
        for i in range(1, q + 1):
            for j in range(1, q + 1):
                out.append(
                    (f"Hy[{i},{j}]", {(p + i, p + j): 1}, omega_H(ctx, i, j, "y"), (p + i, p + j))
                )
        for i in range(1, p + 1):
            for j in range(1, q + 1):
                out.append((f"G[{i},{j}]", {(i, p + j): 1}, omega_G(ctx, i, j), (i, p + j)))
                out.append((f"F[{j},{i}]", {(p + j, i): 1}, omega_F(ctx, j, i), (p + j, i)))
        return out
    k = ctx.k
    sign = 1 if ctx.case == "R" else -1
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            out.append(
                (f"H[{i},{j}]", _clean([((i, j), 1), ((k + j, k + i), -1)]), omega_H(ctx, i, j), (i, j))
            )
    first = 1 if ctx.case == "R" else 2
    for i in range(1, k + 1):
        for j in range(i + first - 1, k + 1):
            G = _clean([((i, k + j), 1), ((j, k + i), sign)])
            F = _clean([((k + i, j), 1), ((k + j, i), sign)])
            out.append((f"G[{i},{j}]", G, omega_G(ctx, i, j), (i, k + j)))
            out.append((f"F[{i},{j}]", F, omega_F(ctx, i, j), (k + i, j)))
    return out


def _clean(items) -> dict:
    out: dict = {}
    for key, c in items:
        out[key] = out.get(key, 0) + c
    return {key: c for key, c in out.items() if c}


def _decompose(M: dict, gens: list) -> list:
    coeffs = []
    rebuilt: dict = {}
    for _, mat, _, piv in gens:
        c = Fraction(M.get(piv, 0), mat[piv])
        if c:
            coeffs.append(c)
            for key, v in mat.items():
                rebuilt[key] = rebuilt.get(key, 0) + c * v
        else:
            coeffs.append(0)
    if _clean(rebuilt.items()) != M:
        raise ValueError("bracket does not lie in the span of the generators")
    return coeffs


def omega_bracket_check(ctx: CaseContext) -> dict:
    """``[omega(X), omega(Y)] = omega([X, Y])`` for all pairs of g-generators,
    and omega(g) commutes with omega(h)."""
    gens = g_generators(ctx)
    failures = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            la, ma, wa, _ = gens[a]
            lb, mb, wb, _ = gens[b]
            coeffs = _decompose(_mat_bracket(ma, mb), gens)
            expected = WeylOp.zero()
            for c, g in zip(coeffs, gens):
                if c:
                    expected = expected + g[2] * c
            if not (weyl_commutator(wa, wb) - expected).is_zero():
                failures.append(f"[{la},{lb}]")
    h_ops = [pbw_map_omega(h, ctx) for h in h_basis(ctx)]
    for label, _, w, _ in gens:
        for wh in h_ops:
            if not weyl_commutator(w, wh).is_zero():
                failures.append(f"[{label},h]")
                break
    return {"holds": not failures, "pairs": len(gens) * (len(gens) - 1) // 2, "failures": failures}
