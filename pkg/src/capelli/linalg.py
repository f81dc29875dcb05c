"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``{coordinate: scalar}`` with arbitrary sortable
coordinates.  Elimination is fraction-free: rows are scaled to integers and
kept primitive (content removed) so intermediate entries stay small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _primitive(row: dict) -> dict:
    """Integer multiple of ``row`` with content 1 and positive leading entry."""
    den = 1
    for c in row.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    ints = {k: int(c * den) for k, c in row.items() if c}
    g = 0
    for c in ints.values():
        g = gcd(g, c)
    if g == 0:
        return {}
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {k: c // g for k, c in ints.items()}


def _eliminate(row: dict, piv: object, prow: dict) -> dict:
    """Clear ``row[piv]`` using pivot row ``prow`` (fraction-free)."""
    a = prow[piv]
    b = row[piv]
    g = gcd(a, b)
    fa, fb = a // g, b // g
    out = {k: c * fa for k, c in row.items()}
    for k, c in prow.items():
        v = out.get(k, 0) - fb * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return _primitive(out)


class Echelon:
    """Incrementally maintained row-echelon basis of a span of sparse vectors."""

    def __init__(self):
        self.pivots: dict = {}  # pivot coordinate -> primitive integer row

    def reduce(self, row: dict) -> dict:
        row = _primitive(row)
        while row:
            piv = min(row)
            prow = self.pivots.get(piv)
            if prow is None:
                return row
            row = _eliminate(row, piv, prow)
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; returns False if it was already in the span."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def __len__(self):
        return len(self.pivots)

    def rref(self) -> list:
        """Reduced echelon basis (pivot entry 1), sorted by pivot coordinate."""
        keys = sorted(self.pivots)
        rows = {k: dict(self.pivots[k]) for k in keys}
        for k in reversed(keys):
            r = rows[k]
            for k2 in keys:
                if k2 >= k:
                    break
                r2 = rows[k2]
                if k in r2:
                    rows[k2] = _eliminate(r2, k, r)
        out = []
        for k in keys:
            r = rows[k]
            p = r[k]
            out.append({c: Fraction(v, p) for c, v in r.items()})
        return out


def rref(vectors) -> list:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rref()


def rank(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def nullspace(columns: list) -> list:
    """Basis of ``{c : sum_i c_i * columns[i] = 0}`` as lists of Fractions.

    ``columns[i]`` is a sparse vector; the returned basis is in reduced
    echelon form with respect to the column index order.
    """
    m = len(columns)
    # row-reduce the transpose system: rows indexed by coordinates
    rows: dict = {}
    for i, col in enumerate(columns):
        for coord, c in col.items():
            if c:
                rows.setdefault(coord, {})[i] = c
    reduced = rref(rows.values())
    pivot_cols = [min(r) for r in reduced]
    free = [i for i in range(m) if i not in set(pivot_cols)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m
        v[f] = Fraction(1)
        for pc, r in zip(pivot_cols, reduced):
            c = r.get(f)
            if c:
                v[pc] = -c
        basis.append({i: c for i, c in enumerate(v) if c})
    return [[r.get(i, Fraction(0)) for i in range(m)] for r in rref(basis)]
