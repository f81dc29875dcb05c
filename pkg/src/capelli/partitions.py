"""Partitions, Littlewood-Richardson coefficients and GL_n dimensions."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement


def as_partition(parts) -> tuple:
    """Validate and strip trailing zeros; raises ``ValueError`` on bad input."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"partition parts must be nonnegative: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def is_dominant(w) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def pad(parts, length: int) -> tuple:
    parts = tuple(parts)
    if len(parts) > length:
        raise ValueError(f"{parts} has more than {length} parts")
    return parts + (0,) * (length - len(parts))


def partitions(size: int, max_len: int | None = None, max_part: int | None = None) -> list:
    """Partitions of ``size`` in reverse lexicographic order."""
    out = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for p in range(min(remaining, cap), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(size, size if max_part is None else max_part, [])
    return out


def partitions_up_to(total: int, max_len: int | None = None) -> list:
    return [p for s in range(total + 1) for p in partitions(s, max_len)]


def compose(mu, nu, n: int) -> tuple:
    """``(mu_1, .., mu_p, 0, .., 0, -nu_q, .., -nu_1)`` of length ``n``."""
    mu, nu = as_partition(mu), as_partition(nu)
    if len(mu) + len(nu) > n:
        raise ValueError(f"l(mu) + l(nu) = {len(mu) + len(nu)} exceeds n = {n}")
    return mu + (0,) * (n - len(mu) - len(nu)) + tuple(-v for v in reversed(nu))


def lr_coefficient(mu, nu, lam) -> int:
    """Number of LR tableaux of shape ``lam/mu`` and content ``nu``."""
    mu, nu, lam = as_partition(mu), as_partition(nu), as_partition(lam)
    if sum(mu) + sum(nu) != sum(lam) or len(mu) > len(lam):
        return 0
    mu_p = pad(mu, len(lam))
    if any(m > l for m, l in zip(mu_p, lam)):
        return 0
    if not nu:
        return 1
    rows = len(lam)
    filling = [dict() for _ in range(rows)]
    count = [0] * (len(nu) + 1)

    def cells():
        # reverse reading order: rows top to bottom, each right to left
        for r in range(rows):
            for c in range(lam[r] - 1, mu_p[r] - 1, -1):
                yield r, c

    order = list(cells())
    total = 0

    def rec(pos):
        nonlocal total
        if pos == len(order):
            total += 1
            return
        r, c = order[pos]
        hi = len(nu)
        right = filling[r].get(c + 1)
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if r > 0 and c in filling[r - 1]:
            lo = filling[r - 1][c] + 1
        for v in range(lo, hi + 1):
            if count[v] >= nu[v - 1]:
                continue
            if v > 1 and count[v] + 1 > count[v - 1]:
                continue
            filling[r][c] = v
            count[v] += 1
            rec(pos + 1)
            count[v] -= 1
            del filling[r][c]

    rec(0)
    return total


def lr_product(mu, nu) -> dict:
    """``{lam: c^lam_{mu nu}}`` over all partitions of the right size."""
    mu, nu = as_partition(mu), as_partition(nu)
    out = {}
    for lam in partitions(sum(mu) + sum(nu), len(mu) + len(nu)):
        c = lr_coefficient(mu, nu, lam)
        if c:
            out[lam] = c
    return out


# -- independent oracles ------------------------------------------------------


def ssyt(shape, n: int):
    """Yield semistandard tableaux (tuples of rows) of ``shape`` in letters ``1..n``."""
    shape = as_partition(shape)
    if not shape:
        yield ()
        return

    def rec(r, above, acc):
        if r == len(shape):
            yield tuple(acc)
            return
        for row in combinations_with_replacement(range(1, n + 1), shape[r]):
            if above is not None and any(row[c] <= above[c] for c in range(len(row))):
                continue
            acc.append(row)
            yield from rec(r + 1, row, acc)
            acc.pop()

    yield from rec(0, None, [])


def ssyt_count(shape, n: int) -> int:
    return sum(1 for _ in ssyt(shape, n))


@lru_cache(maxsize=None)
def schur_polynomial(shape, n: int) -> dict:
    """Monomial expansion ``{exponent vector: coefficient}`` of ``s_shape(x_1..x_n)``."""
    out: Counter = Counter()
    for t in ssyt(shape, n):
        exp = [0] * n
        for row in t:
            for v in row:
                exp[v - 1] += 1
        out[tuple(exp)] += 1
    return dict(out)


def schur_product_oracle(mu, nu, num_vars: int) -> dict:
    """Schur expansion of ``s_mu * s_nu`` via dense monomial expansion."""
    mu, nu = as_partition(mu), as_partition(nu)
    if num_vars < len(mu) + len(nu):
        raise ValueError("need num_vars >= l(mu) + l(nu)")
    a = schur_polynomial(mu, num_vars)
    b = schur_polynomial(nu, num_vars)
    prod: Counter = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            prod[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    result = {}
    while True:
        prod = Counter({e: c for e, c in prod.items() if c})
        if not prod:
            return result
        lead = max(prod)
        c = prod[lead]
        if not is_dominant(lead):
            raise ArithmeticError("leading monomial is not a partition")
        lam = as_partition(lead)
        result[lam] = c
        for e, cs in schur_polynomial(lam, num_vars).items():
            prod[e] -= c * cs


def weyl_dim(w, n: int) -> int:
    """Dimension of the irreducible GL_n module of highest weight ``w``."""
    w = tuple(w)
    if len(w) != n:
        raise ValueError(f"weight {w} does not have length {n}")
    if not is_dominant(w):
        raise ValueError(f"weight {w} is not dominant")
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(w[i] - w[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=None)
def gt_pattern_count(top: tuple) -> int:
    """Number of Gelfand-Tsetlin patterns with top row ``top``."""
    if len(top) <= 1:
        return 1
    total = 0

    def rec(i, acc):
        nonlocal total
        if i == len(top) - 1:
            total += gt_pattern_count(tuple(acc))
            return
        for v in range(top[i + 1], top[i] + 1):
            acc.append(v)
            rec(i + 1, acc)
            acc.pop()

    rec(0, [])
    return total
