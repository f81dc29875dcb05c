"""Determinants and Pfaffians over possibly noncommutative rings.

Matrices are plain lists of rows.  Entries may be ``Poly``, ``WeylOp``,
``PBWElement`` or scalars; the only requirements are ``+``, ``-``, ``*`` and
``==`` against 0.  All index arguments are 1-based.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .poly import Poly, poly_sum, symbol


def index_sets(N: int, d: int) -> list:
    """All ``d``-subsets of ``{1..N}`` in lexicographic order."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return [tuple(c) for c in combinations(range(1, N + 1), d)]


def _shape(M) -> tuple:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise ValueError("ragged matrix")
    return rows, cols


def submatrix(M, I, J) -> list:
    rows, cols = _shape(M)
    for i in I:
        if not 1 <= i <= rows:
            raise IndexError(f"row {i} outside 1..{rows}")
    for j in J:
        if not 1 <= j <= cols:
            raise IndexError(f"column {j} outside 1..{cols}")
    return [[M[i - 1][j - 1] for j in J] for i in I]


def transpose(M) -> list:
    rows, cols = _shape(M)
    return [[M[i][j] for i in range(rows)] for j in range(cols)]


def _add(total, term):
    return term if total is None else total + term


def column_det(M):
    """``sum_sigma sgn(sigma) M[sigma(1)][1] ... M[sigma(d)][d]``, factors in column order.

    Evaluated by first-column Laplace expansion with memoization on the set of
    remaining rows; since every product keeps its factors in column order this
    agrees with the permutation sum for noncommuting entries.
    """
    d, cols = _shape(M)
    if d != cols:
        raise ValueError(f"column_det needs a square matrix, got {d}x{cols}")
    if d == 0:
        return 1
    memo: dict = {}

    def f(rows: tuple, col: int):
        if len(rows) == 1:
            return M[rows[0]][col]
        hit = memo.get(rows)
        if hit is not None:
            return hit
        total = None
        for pos, r in enumerate(rows):
            entry = M[r][col]
            if entry == 0:
                continue
            sub = f(rows[:pos] + rows[pos + 1 :], col + 1)
            term = entry * sub
            total = _add(total, -term if pos % 2 else term)
        if total is None:
            total = M[rows[0]][col] * 0
        memo[rows] = total
        return total

    return f(tuple(range(d)), 0)


def permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def column_det_permutations(M):
    """Literal permutation-sum column determinant (oracle, small sizes only)."""
    d, cols = _shape(M)
    if d != cols:
        raise ValueError(f"column_det needs a square matrix, got {d}x{cols}")
    if d == 0:
        return 1
    total = None
    for perm in permutations(range(d)):
        term = M[perm[0]][0]
        for col in range(1, d):
            term = term * M[perm[col]][col]
        total = _add(total, term if permutation_sign(perm) > 0 else -term)
    return total


def is_alternating(M) -> bool:
    rows, cols = _shape(M)
    if rows != cols:
        return False
    for i in range(rows):
        if not M[i][i] == 0:
            return False
        for j in range(i + 1, rows):
            if not M[i][j] == -M[j][i]:
                return False
    return True


def pfaffian(M, check_commuting: bool = True):
    """Pfaffian of an alternating matrix with pairwise commuting entries."""
    rows, cols = _shape(M)
    if rows != cols or rows % 2:
        raise ValueError(f"pfaffian needs an even square matrix, got {rows}x{cols}")
    if not is_alternating(M):
        raise ValueError("matrix is not alternating")
    if rows == 0:
        return 1
    upper = [M[i][j] for i in range(rows) for j in range(i + 1, rows)]
    if check_commuting:
        for a in range(len(upper)):
            for b in range(a + 1, len(upper)):
                if not upper[a] * upper[b] == upper[b] * upper[a]:
                    raise ValueError("pfaffian entries do not pairwise commute")
    memo: dict = {}

    def pf(idx: tuple):
        if not idx:
            return None
        if len(idx) == 2:
            return M[idx[0]][idx[1]]
        hit = memo.get(idx)
        if hit is not None:
            return hit
        first = idx[0]
        total = None
        for pos in range(1, len(idx)):
            j = idx[pos]
            entry = M[first][j]
            if entry == 0:
                continue
            rest = pf(idx[1:pos] + idx[pos + 1 :])
            term = entry * rest
            total = _add(total, -term if pos % 2 == 0 else term)
        if total is None:
            total = M[idx[0]][idx[1]] * 0
        memo[idx] = total
        return total

    return pf(tuple(range(rows)))


# -- generic symbolic matrices and the two classical lemmas -------------------


def symbolic_matrix(family: str, rows: int, cols: int) -> list:
    return [[symbol(family, i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)]


def symmetric_symbolic_matrix(family: str, n: int) -> list:
    return [[symbol(family, min(i, j), max(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)]


def matmul(A, B) -> list:
    ra, ca = _shape(A)
    rb, cb = _shape(B)
    if ca != rb:
        raise ValueError(f"shape mismatch {ra}x{ca} * {rb}x{cb}")
    return [[poly_sum(A[i][s] * B[s][j] for s in range(ca)) for j in range(cb)] for i in range(ra)]


def matsub(A, B) -> list:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def cauchy_binet_check(A, B) -> bool:
    """``det(AB) = sum_S det A[:,S] det B[S,:]`` for commuting entries."""
    d, N = _shape(A)
    rb, cb = _shape(B)
    if rb != N or cb != d:
        raise ValueError(f"expected {d}x{N} and {N}x{d}, got {rb}x{cb} for B")
    lhs = column_det(matmul(A, B))
    rows = tuple(range(1, d + 1))
    rhs = Poly()
    for S in index_sets(N, d):
        rhs = rhs + column_det(submatrix(A, rows, S)) * column_det(submatrix(B, S, rows))
    return Poly() + lhs == rhs


def _iw_shape(A, B) -> tuple:
    n, two_d = _shape(A)
    if _shape(B) != (n, two_d) or two_d % 2:
        raise ValueError("A and B must both be n x 2d")
    d = two_d // 2
    if d > n:
        raise ValueError("need d <= n")
    return n, d


def paired_rows(S0, n: int) -> tuple:
    """``(s_1..s_d, n+s_1..n+s_d)`` for ``S0 = (s_1..s_d)``."""
    return tuple(S0) + tuple(n + s for s in S0)


def ishikawa_wakayama_check(A, B) -> bool:
    """Minor-Pfaffian identity at ``X = I``.

    ``Pf(A^t B - B^t A) = (-1)^(d(d-1)/2) sum_S0 det (A over B)[S, :]`` with
    ``S = paired_rows(S0)``.
    """
    n, d = _iw_shape(A, B)
    lhs = pfaffian(matsub(matmul(transpose(A), B), matmul(transpose(B), A)))
    stacked = A + B
    cols = tuple(range(1, 2 * d + 1))
    rhs = Poly()
    for S0 in index_sets(n, d):
        rhs = rhs + column_det(submatrix(stacked, paired_rows(S0, n), cols))
    if (d * (d - 1) // 2) % 2:
        rhs = -rhs
    return Poly() + lhs == rhs


def ishikawa_wakayama_general_check(A, B, X) -> bool:
    """Minor-Pfaffian identity for symmetric ``X``.

    ``Pf(A^t X B - B^t X A) = sum_S Pf(J_X)[S,S] det (A over B)[S, :]`` where
    ``J_X`` is the block matrix ``(0, X; -X, 0)`` and ``S`` runs over
    ``2d``-subsets of ``{1..2n}``.
    """
    n, d = _iw_shape(A, B)
    if _shape(X) != (n, n) or any(X[i][j] != X[j][i] for i in range(n) for j in range(n)):
        raise ValueError("X must be a symmetric n x n matrix")
    At, Bt = transpose(A), transpose(B)
    lhs = pfaffian(matsub(matmul(At, matmul(X, B)), matmul(Bt, matmul(X, A))))
    zero = Poly()
    J = [[zero] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            J[i][n + j] = X[i][j]
            J[n + i][j] = -X[i][j]
    stacked = A + B
    cols = tuple(range(1, 2 * d + 1))
    rhs = Poly()
    for S in index_sets(2 * n, 2 * d):
        pf = pfaffian(submatrix(J, S, S), check_commuting=False)
        if pf == 0:
            continue
        rhs = rhs + pf * column_det(submatrix(stacked, S, cols))
    return Poly() + lhs == rhs
