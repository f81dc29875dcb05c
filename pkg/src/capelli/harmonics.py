"""Harmonic polynomials on M_{2n,k} and the decomposition of U_lam cap V_lam.

Coordinates are ``x[s,i]`` (first ``n`` rows) and ``y[s,i]`` (last ``n``
rows), ``1 <= s <= n``, ``1 <= i <= k``.  Every space here is a column
multidegree eigenspace; inside it we further split by *row weight*, where
``x[s,*]`` has weight ``+e_s`` and ``y[s,*]`` has weight ``-e_s``.  All the
operators used (Laplacians, column raising, row raising) map row-weight
spaces to row-weight spaces, so kernels are computed block by block.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product

from .context import CaseContext
from .linalg import nullspace, rref
from .nclinalg import column_det, index_sets
from .partitions import as_partition, compose, is_dominant, lr_coefficient, pad, partitions, weyl_dim
from .pbw import pbw_map_omega
from .cases import capelli_Cd
from .poly import Poly, column_multidegree, mono_from_dict, mono_key, var, xv, yv
from .weyl import WeylOp, weyl_apply


def row_weight(m, n: int) -> tuple:
    w = [0] * n
    for v, e in m:
        w[v.row - 1] += e if v.family == "x" else -e
    return tuple(w)


def poly_row_weight(p: Poly, n: int) -> tuple:
    weights = {row_weight(m, n) for m in p.terms}
    if len(weights) != 1:
        raise ValueError("polynomial is not a row-weight vector")
    return weights.pop()


def _column_monomials(n: int, col: int, deg: int) -> list:
    vs = [xv(s, col) for s in range(1, n + 1)] + [yv(s, col) for s in range(1, n + 1)]
    out = []
    for combo in combinations_with_replacement(vs, deg):
        out.append(Counter(combo))
    return out


@dataclass(frozen=True)
class GradedSlice:
    """Monomials on M_{2n,k} of a fixed column multidegree."""

    n: int
    k: int
    column_degrees: tuple
    basis: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lam = tuple(self.column_degrees)
        if len(lam) != self.k or any(d < 0 for d in lam):
            raise ValueError(f"column degrees {lam} must be k={self.k} nonnegative integers")
        object.__setattr__(self, "column_degrees", lam)
        pieces = [_column_monomials(self.n, j + 1, lam[j]) for j in range(self.k)]
        monos = []
        for choice in product(*pieces):
            d: dict = {}
            for c in choice:
                for v, e in c.items():
                    d[v] = d.get(v, 0) + e
            monos.append(mono_from_dict(d))
        object.__setattr__(self, "basis", tuple(sorted(monos, key=mono_key)))

    def weight_blocks(self) -> dict:
        blocks: dict = {}
        for m in self.basis:
            blocks.setdefault(row_weight(m, self.n), []).append(m)
        return dict(sorted(blocks.items(), reverse=True))

    def __len__(self):
        return len(self.basis)


@dataclass
class Subspace:
    """Span of polynomials inside a slice, kept in reduced echelon form."""

    ambient: GradedSlice
    vectors: list

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def blocks(self) -> dict:
        out: dict = {}
        for v in self.vectors:
            out.setdefault(poly_row_weight(v, self.ambient.n), []).append(v)
        return dict(sorted(out.items(), reverse=True))

    def echelon_key(self):
        return [tuple(sorted(v.terms.items())) for v in self.vectors]


def _canonical(polys) -> list:
    """Reduced echelon form of a list of polynomials (pivots in monomial order)."""
    polys = list(polys)
    monos = sorted({m for p in polys for m in p.terms}, key=mono_key)
    index = {m: i for i, m in enumerate(monos)}
    rows = [{index[m]: c for m, c in p.terms.items()} for p in polys]
    return [Poly._raw({monos[i]: c for i, c in r.items()}) for r in rref(rows)]


def joint_kernel(ops, vectors) -> list:
    """Basis (canonical) of ``{f in span(vectors) : op(f) = 0 for all ops}``."""
    vectors = list(vectors)
    if not vectors:
        return []
    if not ops:
        return _canonical(vectors)
    columns = []
    for v in vectors:
        col = {}
        for idx, op in enumerate(ops):
            for m, c in weyl_apply(op, v).terms.items():
                col[idx, m] = c
        columns.append(col)
    out = []
    for coeffs in nullspace(columns):
        f = Poly()
        for c, v in zip(coeffs, vectors):
            if c:
                f = f + v * c
        out.append(f)
    return _canonical(out)


def _preserves_row_weight(op: WeylOp, n: int) -> bool:
    return all(row_weight(p, n) == row_weight(d, n) for p, d in op.terms)


def _blockwise_kernel(ops, blocks: dict) -> list:
    out = []
    for _, vecs in blocks.items():
        out.extend(joint_kernel(ops, vecs))
    return out


# -- operators ----------------------------------------------------------------


def _delta(n, i, j) -> WeylOp:
    op = WeylOp.zero()
    for a in range(1, n + 1):
        op = op + WeylOp.deriv(xv(a, i)) * WeylOp.deriv(yv(a, j))
    return op


def laplace_ops(n: int, k: int, family: str = "GL") -> list:
    """The Laplace operators defining harmonics for GL_n, O_2n or Sp_2n."""
    if n < 1 or k < 1:
        raise ValueError("n, k must be >= 1")
    if family == "GL":
        return [_delta(n, i, j) for i in range(1, k + 1) for j in range(1, k + 1)]
    if family == "O":
        return [_delta(n, i, j) + _delta(n, j, i) for i in range(1, k + 1) for j in range(i, k + 1)]
    if family == "Sp":
        return [_delta(n, i, j) - _delta(n, j, i) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    raise ValueError(f"family must be GL, O or Sp, got {family!r}")


def column_raising_ops(n: int, k: int) -> list:
    """``R_ij = sum_s (x_si d/dx_sj + y_si d/dy_sj)`` for ``i < j``."""
    ops = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            op = WeylOp.zero()
            for s in range(1, n + 1):
                op = op + WeylOp.mult(xv(s, i)) * WeylOp.deriv(xv(s, j))
                op = op + WeylOp.mult(yv(s, i)) * WeylOp.deriv(yv(s, j))
            ops.append(op)
    return ops


def row_raising_ops(n: int, k: int) -> list:
    """GL_n raising ``eps_ab = sum_j (x_aj d/dx_bj - y_bj d/dy_aj)`` for ``a < b``."""
    ops = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            op = WeylOp.zero()
            for j in range(1, k + 1):
                op = op + WeylOp.mult(xv(a, j)) * WeylOp.deriv(xv(b, j))
                op = op - WeylOp.mult(yv(b, j)) * WeylOp.deriv(yv(a, j))
            ops.append(op)
    return ops


def stacked_raising_ops(n: int, k: int) -> list:
    """Raising operators of GL_2n acting on the rows of the stacked matrix (x over y)."""
    rows = [("x", s) for s in range(1, n + 1)] + [("y", s) for s in range(1, n + 1)]
    ops = []
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            op = WeylOp.zero()
            for j in range(1, k + 1):
                va = var(rows[a][0], rows[a][1], j)
                vb = var(rows[b][0], rows[b][1], j)
                op = op + WeylOp.mult(va) * WeylOp.deriv(vb)
            ops.append(op)
    return ops


# -- the four computational steps ---------------------------------------------


def graded_kernel(ops, slc: GradedSlice) -> Subspace:
    """Joint kernel of ``ops`` on the slice."""
    monos = [Poly.monomial(m) for m in slc.basis]
    if all(_preserves_row_weight(op, slc.n) for op in ops):
        blocks = {w: [Poly.monomial(m) for m in ms] for w, ms in slc.weight_blocks().items()}
        return Subspace(slc, _blockwise_kernel(ops, blocks))
    return Subspace(slc, joint_kernel(ops, monos))


def nk_invariants(sub: Subspace) -> Subspace:
    ops = column_raising_ops(sub.ambient.n, sub.ambient.k)
    return Subspace(sub.ambient, _blockwise_kernel(ops, sub.blocks()))


class NonDominantWeight(ArithmeticError):
    pass


def gln_hwvs(sub: Subspace) -> list:
    """``[(weight, vector), ...]``: a basis of the GL_n highest weight vectors."""
    n = sub.ambient.n
    ops = row_raising_ops(n, sub.ambient.k)
    out = []
    for w, vecs in sub.blocks().items():
        ker = joint_kernel(ops, vecs)
        if ker and not is_dominant(w):
            raise NonDominantWeight(f"highest weight vector of non-dominant weight {w}")
        out.extend((w, v) for v in ker)
    return out


def predicted_pairs(lam, n: int, k: int) -> list:
    """``[(mu, nu, c), ...]`` with ``c = c^lam_{mu nu} > 0`` and ``l(mu) + l(nu) <= n``."""
    lam = as_partition(lam)
    size = sum(lam)
    out = []
    for a in range(size + 1):
        for mu in partitions(a, k):
            for nu in partitions(size - a, k):
                if len(mu) + len(nu) > n:
                    continue
                c = lr_coefficient(mu, nu, lam)
                if c:
                    out.append((mu, nu, c))
    return out


def _check_lkn(lam, n, k) -> tuple:
    lam = as_partition(lam)
    if k > n:
        raise ValueError(f"need k <= n, got k={k}, n={n}")
    if len(lam) > k:
        raise ValueError(f"lambda={lam} has more than k={k} parts")
    return lam


@lru_cache(maxsize=None)
def intersection_space(lam: tuple, n: int, k: int) -> Subspace:
    """``U_lam cap V_lam``: N_k-invariant GL_n-harmonics of column degree ``lam``."""
    slc = GradedSlice(n, k, pad(lam, k))
    return nk_invariants(graded_kernel(laplace_ops(n, k, "GL"), slc))


def intersection_decomposition(lam, n: int, k: int) -> dict:
    lam = _check_lkn(lam, n, k)
    sub = intersection_space(lam, n, k)
    hw = gln_hwvs(sub)
    pairs = predicted_pairs(lam, n, k)
    predicted_dim = sum(c * weyl_dim(compose(mu, nu, n), n) for mu, nu, c in pairs)
    predicted_weights = sorted(
        (compose(mu, nu, n) for mu, nu, c in pairs for _ in range(c)), reverse=True
    )
    hwv_weights = sorted((w for w, _ in hw), reverse=True)
    return {
        "lambda": lam,
        "n": n,
        "k": k,
        "computed_dim": sub.dim,
        "predicted_dim": predicted_dim,
        "hwv_weights": hwv_weights,
        "predicted_weights": predicted_weights,
        "pairs": pairs,
        "holds": sub.dim == predicted_dim and hwv_weights == predicted_weights,
    }


@lru_cache(maxsize=None)
def _capelli_operator(ctx: CaseContext, d: int) -> WeylOp:
    return pbw_map_omega(capelli_Cd(ctx, d), ctx)


def verify_annihilation(lam, n: int, k: int) -> dict:
    """Every Capelli operator of the Case C context ``p = q = k`` kills ``U_lam cap V_lam``.

    There ``omega(F_ji) = sqrt(-1) * Delta_ij``, so the harmonics are the joint
    kernel of omega(p^-) up to that scalar.
    """
    lam = _check_lkn(lam, n, k)
    sub = intersection_space(lam, n, k)
    ctx = CaseContext.complex(k, k, n)
    failures = []
    degrees = list(range(1, min(k, n) + 1))
    for d in degrees:
        op = _capelli_operator(ctx, d)
        for idx, f in enumerate(sub.vectors):
            if not weyl_apply(op, f).is_zero():
                failures.append((d, idx))
    return {
        "holds": not failures,
        "basis_size": sub.dim,
        "degrees": degrees,
        "failures": failures,
    }


# -- calibration --------------------------------------------------------------


def leading_minor(j: int, rows_family: str = "x") -> Poly:
    rows = tuple(range(1, j + 1))
    return column_det(
        [[Poly.variable(var(rows_family, s, i)) for i in rows] for s in rows]
    )


def xi_lambda(lam, k: int) -> Poly:
    """Product of leading principal minors ``prod_j minor_j^(lam_j - lam_{j+1})``."""
    lam = pad(as_partition(lam), k)
    f = Poly.const(1)
    for j in range(1, k + 1):
        e = lam[j - 1] - (lam[j] if j < k else 0)
        if e:
            f = f * leading_minor(j) ** e
    return f


def calibration_check(lam, n: int, k: int) -> dict:
    """``xi_lam`` is O- and Sp-harmonic, N_k-invariant and a GL_2n highest weight vector."""
    lam = _check_lkn(lam, n, k)
    f = xi_lambda(lam, k)
    checks = {
        "O_harmonic": all(weyl_apply(op, f).is_zero() for op in laplace_ops(n, k, "O")),
        "Sp_harmonic": all(weyl_apply(op, f).is_zero() for op in laplace_ops(n, k, "Sp")),
        "Nk_invariant": all(weyl_apply(op, f).is_zero() for op in column_raising_ops(n, k)),
        "GL2n_hwv": all(weyl_apply(op, f).is_zero() for op in stacked_raising_ops(n, k)),
        "column_degree": f.is_zero() is False and column_multidegree(f, k) == pad(lam, k),
    }
    return {"holds": all(checks.values()), **checks}


# -- the tensor product algebra ----------------------------------------------


def _check_ta(n, k):
    if 2 * k > n:
        raise ValueError(f"need 2k <= n, got k={k}, n={n}")


def tensor_gamma(j: int, I, n: int, k: int) -> Poly:
    """Minor of ``X`` with rows ``1..j`` and columns ``I``."""
    _check_ta(n, k)
    I = tuple(I)
    if len(I) != j or any(not 1 <= i <= k for i in I):
        raise ValueError(f"bad column set {I} for j={j}, k={k}")
    return column_det([[Poly.variable(xv(s, i)) for i in I] for s in range(1, j + 1)])


def tensor_eta(m: int, J, n: int, k: int) -> Poly:
    """Same minor in ``yhat[i,j] = y[n-i+1, j]``."""
    _check_ta(n, k)
    J = tuple(J)
    if len(J) != m or any(not 1 <= i <= k for i in J):
        raise ValueError(f"bad column set {J} for m={m}, k={k}")
    return column_det([[Poly.variable(yv(n - s + 1, i)) for i in J] for s in range(1, m + 1)])


def _exponents(parts, k) -> list:
    p = pad(as_partition(parts), k)
    return [p[j] - (p[j + 1] if j + 1 < k else 0) for j in range(k)]


def _generator_products(fn, exps, n, k) -> list:
    """All products ``prod_j prod_{c < a_j} fn(j, I_{j,c})`` over multisets of index sets."""
    per_j = []
    for j, a in enumerate(exps, start=1):
        sets = index_sets(k, j)
        choices = []
        for multiset in combinations_with_replacement(sets, a):
            f = Poly.const(1)
            for I in multiset:
                f = f * fn(j, I, n, k)
            choices.append(f)
        per_j.append(choices)
    out = []
    for combo in product(*per_j):
        f = Poly.const(1)
        for g in combo:
            f = f * g
        out.append(f)
    return out


def xi_mu_nu(mu, nu, n: int, k: int) -> Poly:
    """``gamma_1^a_1 .. gamma_k^a_k * eta_1^b_1 .. eta_k^b_k`` with leading index sets."""
    f = Poly.const(1)
    for j, a in enumerate(_exponents(mu, k), start=1):
        if a:
            f = f * tensor_gamma(j, range(1, j + 1), n, k) ** a
    for j, b in enumerate(_exponents(nu, k), start=1):
        if b:
            f = f * tensor_eta(j, range(1, j + 1), n, k) ** b
    return f


def _x_part_degrees(p: Poly, k: int, family: str) -> tuple:
    degs = set()
    for m in p.terms:
        d = [0] * k
        for v, e in m:
            if v.family == family:
                d[v.col - 1] += e
        degs.add(tuple(d))
    if len(degs) != 1:
        raise ValueError("not homogeneous in the requested family")
    return degs.pop()


def ta_component_dim(mu, nu, lam, n: int, k: int) -> dict:
    """Dimension of the N_k-invariant part of ``span(generator products)`` in column degree ``lam``.

    Compared with ``c^lam_{mu nu}``; also checks that every product is
    harmonic and a GL_n highest weight vector of weight ``mu (.) nu``, and that
    ``xi_{mu nu}`` is one with column weights ``mu`` (x) and ``nu`` (y).
    """
    _check_ta(n, k)
    mu, nu, lam = as_partition(mu), as_partition(nu), as_partition(lam)
    for p in (mu, nu, lam):
        if len(p) > k:
            raise ValueError(f"{p} has more than k={k} parts")
    target = pad(lam, k)
    weight = compose(mu, nu, n)
    prods = _generator_products(tensor_gamma, _exponents(mu, k), n, k)
    prods_y = _generator_products(tensor_eta, _exponents(nu, k), n, k)
    candidates = []
    for f in prods:
        for g in prods_y:
            h = f * g
            if not h.is_zero() and column_multidegree(h, k) == target:
                candidates.append(h)
    span = _canonical(candidates)
    harmonic = all(
        weyl_apply(op, f).is_zero() for op in laplace_ops(n, k, "GL") for f in span
    )
    n_invariant = all(weyl_apply(op, f).is_zero() for op in row_raising_ops(n, k) for f in span)
    weight_ok = all(poly_row_weight(f, n) == weight for f in span)
    inv = joint_kernel(column_raising_ops(n, k), span)
    expected = lr_coefficient(mu, nu, lam)

    xi = xi_mu_nu(mu, nu, n, k)
    xi_checks = {
        "harmonic": all(weyl_apply(op, xi).is_zero() for op in laplace_ops(n, k, "GL")),
        "gln_hwv": all(weyl_apply(op, xi).is_zero() for op in row_raising_ops(n, k)),
        "nk_invariant": all(weyl_apply(op, xi).is_zero() for op in column_raising_ops(n, k)),
        "row_weight": poly_row_weight(xi, n) == weight,
        "x_column_weight": _x_part_degrees(xi, k, "x") == pad(mu, k),
        "y_column_weight": _x_part_degrees(xi, k, "y") == pad(nu, k),
    }
    return {
        "mu": mu,
        "nu": nu,
        "lambda": lam,
        "n": n,
        "k": k,
        "span_dim": len(span),
        "dim": len(inv),
        "expected": expected,
        "span_harmonic": harmonic,
        "span_gln_invariant": n_invariant,
        "span_weight_ok": weight_ok,
        "xi": xi_checks,
        "holds": len(inv) == expected
        and harmonic
        and n_invariant
        and weight_ok
        and all(xi_checks.values()),
    }
