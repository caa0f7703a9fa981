"""Exact dense/sparse linear algebra over Q and Q(sqrt d).

Matrices are lists of rows; vectors are lists.  Entries may be ints,
Fractions or QuadScalars.  Over Q the rank path is fraction-free
(integer rows, content-reduced); Bareiss elimination is provided as an
independent determinant/rank route.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import QuadScalar


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) or (isinstance(x, QuadScalar) and x.b == 0)


def _as_fraction(x) -> Fraction:
    if isinstance(x, QuadScalar):
        return x.a
    return Fraction(x)


def all_rational(rows) -> bool:
    return all(_is_rational(x) for row in rows for x in row)


def zeros(m: int, n: int) -> list:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> list:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a) -> list:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a, b) -> list:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def matvec(a, v) -> list:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)


def rref(rows):
    """Reduced row echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c] if not isinstance(m[r][c], int) else Fraction(1, m[r][c])
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(a, ncols: int | None = None) -> list:
    """Basis of {x : a x = 0}, one vector per free column, in column order."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    red, pivots = rref(a) if a else ([], [])
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(red, pivots):
            if row[free]:
                v[p] = -row[free]
        basis.append(v)
    return basis


def _sparse_int_rows(rows):
    out = []
    for row in rows:
        vals = {j: _as_fraction(x) for j, x in enumerate(row) if x}
        if not vals:
            continue
        den = 1
        for v in vals.values():
            den = math.lcm(den, v.denominator)
        ints = {j: int(v * den) for j, v in vals.items()}
        out.append(ints)
    return out


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return row
    return {j: v // g for j, v in row.items()} if g > 1 else row


def rank_sparse_rational(rows) -> int:
    """Fraction-free rank of a rational matrix via sparse integer elimination."""
    pending = _sparse_int_rows(rows)
    pivots: dict = {}  # column -> pivot row
    for row in pending:
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = _primitive(row)
                break
            a, b = p[c], row[c]
            new = {j: a * v for j, v in row.items()}
            for j, v in p.items():
                w = new.get(j, 0) - b * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            row = _primitive(new) if new else new
    return len(pivots)


def rank(rows) -> int:
    rows = [r for r in rows]
    if not rows:
        return 0
    if all_rational(rows):
        return rank_sparse_rational(rows)
    return len(rref(rows)[0])


def bareiss(rows):
    """Fraction-free Bareiss elimination on an integer matrix.

    Returns ``(rank, det_or_None)``; the determinant is given for square input.
    """
    m = [list(map(int, r)) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    det = None
    if nrows == ncols:
        det = sign * m[-1][-1] if r == nrows and nrows else (1 if nrows == 0 else 0)
    return r, det


def bareiss_rank(rows) -> int:
    ints = []
    for row in rows:
        den = 1
        for x in row:
            den = math.lcm(den, _as_fraction(x).denominator)
        ints.append([int(_as_fraction(x) * den) for x in row])
    return bareiss(ints)[0] if ints else 0


def det(a):
    n = len(a)
    if n == 0:
        return Fraction(1)
    if all_rational(a):
        dens = []
        ints = []
        for row in a:
            den = 1
            for x in row:
                den = math.lcm(den, _as_fraction(x).denominator)
            dens.append(den)
            ints.append([int(_as_fraction(x) * den) for x in row])
        _, d = bareiss(ints)
        return Fraction(d, math.prod(dens))
    m = [list(r) for r in a]
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result = result * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def solve(a, b):
    """One solution x of a x = b, or None if inconsistent."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return x


def span_basis(vectors) -> list:
    """Deterministic (reduced echelon) basis of the span of ``vectors``."""
    vecs = [list(v) for v in vectors]
    if not vecs:
        return []
    return rref(vecs)[0]


def in_span(basis, v) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(list(basis))


def coordinates(basis, v):
    """Coefficients c with sum c_i basis_i = v, or None."""
    if not basis:
        return [] if not any(v) else None
    return solve(transpose(basis), list(v))


def subspace_equal(u, w) -> bool:
    ru, rw = rank(u) if u else 0, rank(w) if w else 0
    if ru != rw:
        return False
    if ru == 0:
        return True
    return rank(list(u) + list(w)) == ru


def complement(sub, ambient_dim: int) -> list:
    """Standard basis vectors completing ``sub`` to the whole space, in index order."""
    chosen = [list(v) for v in sub]
    r = rank(chosen) if chosen else 0
    out = []
    for i in range(ambient_dim):
        e = [Fraction(int(i == j)) for j in range(ambient_dim)]
        if rank(chosen + [e]) > r:
            chosen.append(e)
            out.append(e)
            r += 1
    return out
