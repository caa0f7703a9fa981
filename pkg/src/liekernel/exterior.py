"""Sparse exterior algebra on an n-dimensional space and its dual.

Basis indices are 0-based internally; JSON uses 1-based ``idx`` lists.
Pairing uses the determinant convention:
``<e^{i1..ik}, e_{j1..jk}> = det(delta)`` with no 1/k! factor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import linalg
from .scalars import scalar_from_json, scalar_to_json


def sort_sign(idx):
    """Sort ``idx`` returning ``(sign, sorted_tuple)``; sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


@lru_cache(maxsize=None)
def basis(n: int, k: int) -> tuple:
    """Lexicographically ordered basis tuples of Lambda^k of an n-space."""
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=None)
def basis_index(n: int, k: int) -> dict:
    return {t: i for i, t in enumerate(basis(n, k))}


class _Alternating:
    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int, terms=None):
        self.dim = dim
        self.degree = degree
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for idx, c in items:
                if not c:
                    continue
                idx = tuple(idx)
                if len(idx) != degree:
                    raise ValueError(f"index {idx} has wrong degree (expected {degree})")
                if any(i < 0 or i >= dim for i in idx):
                    raise ValueError(f"index {idx} out of range for dimension {dim}")
                s, key = sort_sign(idx)
                if s == 0:
                    continue
                v = clean.get(key, 0) + (c if s > 0 else -c)
                if v:
                    clean[key] = v
                else:
                    clean.pop(key, None)
        self.terms = clean

    @classmethod
    def basis_element(cls, dim: int, *idx):
        return cls(dim, len(idx), {tuple(idx): Fraction(1)})

    @classmethod
    def zero(cls, dim: int, degree: int):
        return cls(dim, degree)

    @classmethod
    def from_vector(cls, dim: int, degree: int, coeffs):
        return cls(dim, degree, {t: c for t, c in zip(basis(dim, degree), coeffs) if c})

    def to_vector(self) -> list:
        idx = basis_index(self.dim, self.degree)
        v = [Fraction(0)] * len(idx)
        for t, c in self.terms.items():
            v[idx[t]] = c
        return v

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} and {type(other).__name__}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        if other.degree != self.degree and other.terms and self.terms:
            raise ValueError("degree mismatch in sum")
        deg = self.degree if self.terms or not other.terms else other.degree
        out = dict(self.terms)
        for t, c in other.terms.items():
            v = out.get(t, 0) + c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return type(self)._raw(self.dim, deg, out)

    __radd__ = __add__

    @classmethod
    def _raw(cls, dim, degree, terms):
        obj = cls.__new__(cls)
        obj.dim, obj.degree, obj.terms = dim, degree, terms
        return obj

    def __neg__(self):
        return type(self)._raw(self.dim, self.degree, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        if isinstance(s, _Alternating):
            return NotImplemented
        if not s:
            return type(self)._raw(self.dim, self.degree, {})
        return type(self)._raw(self.dim, self.degree, {t: c * s for t, c in self.terms.items() if c * s})

    __rmul__ = __mul__

    def __truediv__(self, s):
        return self * (1 / s) if not isinstance(s, int) else self * Fraction(1, s)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.dim == other.dim and (self - other).terms == {}

    def __hash__(self):
        return hash((type(self).__name__, self.dim, frozenset(self.terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*{'^'.join(str(i + 1) for i in t) or '1'}" for t, c in sorted(self.terms.items()))
        return f"{type(self).__name__}(deg={self.degree}, {body or '0'})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"idx": [i + 1 for i in t], "coeff": scalar_to_json(c)}
                for t, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, dim: int, doc: dict):
        k = int(doc["degree"])
        return cls(dim, k, [(tuple(i - 1 for i in term["idx"]), scalar_from_json(term["coeff"])) for term in doc["terms"]])


class KForm(_Alternating):
    """Element of Lambda^k of the dual space."""


class KVector(_Alternating):
    """Element of Lambda^k of the base space."""


def wedge(a, b):
    """Exterior product; both arguments must be of the same kind."""
    a._check(b)
    out: dict = {}
    for ta, ca in a.terms.items():
        for tb, cb in b.terms.items():
            s, key = sort_sign(ta + tb)
            if s == 0:
                continue
            v = out.get(key, 0) + (ca * cb if s > 0 else -(ca * cb))
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return type(a)._raw(a.dim, a.degree + b.degree, out)


def w(*factors):
    """Wedge of several factors, left to right."""
    out = factors[0]
    for f in factors[1:]:
        out = wedge(out, f)
    return out


def pair(phi: KForm, v: KVector):
    if not isinstance(phi, KForm) or not isinstance(v, KVector):
        raise TypeError("pair expects (KForm, KVector)")
    if phi.dim != v.dim:
        raise ValueError("dimension mismatch")
    if phi.degree != v.degree and phi.terms and v.terms:
        raise ValueError(f"degree mismatch: {phi.degree} vs {v.degree}")
    total = Fraction(0)
    small, big = (phi.terms, v.terms) if len(phi.terms) <= len(v.terms) else (v.terms, phi.terms)
    for t, c in small.items():
        d = big.get(t)
        if d:
            total = total + c * d
    return total


def contract(p: KVector, c: KForm) -> KForm:
    """Interior product p ⌟ c, characterised by <p⌟c, v> = <c, p∧v>."""
    if not isinstance(p, KVector) or not isinstance(c, KForm):
        raise TypeError("contract expects (KVector, KForm)")
    if p.degree > c.degree:
        raise ValueError(f"cannot contract a {p.degree}-vector into a {c.degree}-form")
    out: dict = {}
    for tp, cp in p.terms.items():
        sp = set(tp)
        for tc, cc in c.terms.items():
            if not sp.issubset(tc):
                continue
            rest = tuple(i for i in tc if i not in sp)
            s, _ = sort_sign(tp + rest)
            # e^{tc} = s * e^{tp} ∧ e^{rest}
            v = out.get(rest, 0) + (cp * cc if s > 0 else -(cp * cc))
            if v:
                out[rest] = v
            else:
                out.pop(rest, None)
    return KForm._raw(c.dim, c.degree - p.degree, out)


def evaluate(phi: KForm, *vectors: KVector):
    """phi(X_1, ..., X_k) for degree-one vectors, determinant convention."""
    return pair(phi, w(*vectors)) if vectors else (phi.terms.get((), Fraction(0)))


def vector(dim: int, coeffs) -> KVector:
    return KVector(dim, 1, {(i,): c for i, c in enumerate(coeffs) if c})


def covector(dim: int, coeffs) -> KForm:
    return KForm(dim, 1, {(i,): c for i, c in enumerate(coeffs) if c})


# --- endomorphisms --------------------------------------------------------
# An endomorphism is an n x n matrix M acting on the base space by columns:
# f(e_j) = sum_i M[i][j] e_i.  On the dual it acts by pullback (transpose).


def apply_endo(m, v: KVector) -> KVector:
    n = len(m)
    out = {}
    for (j,), c in v.terms.items():
        for i in range(n):
            if m[i][j]:
                out[(i,)] = out.get((i,), 0) + m[i][j] * c
    return KVector(n, 1, out)


def induced_endo(m, k: int):
    """Matrix of Lambda^k f on the lexicographic basis (columns are images)."""
    n = len(m)
    if not 0 <= k <= n:
        raise ValueError("degree out of range")
    b = basis(n, k)
    out = []
    for rows in b:
        out.append([linalg.det([[m[i][j] for j in cols] for i in rows]) for cols in b])
    return out


def pullback_matrix(m, k: int):
    """Matrix of the pullback f^* on Lambda^k of the dual (transpose of Lambda^k f)."""
    return linalg.transpose(induced_endo(m, k))


def pullback(m, phi: KForm) -> KForm:
    """(f^*phi)(X_1..X_k) = phi(f X_1, ..., f X_k)."""
    n = len(m)
    out = KForm.zero(n, phi.degree)
    for t, c in phi.terms.items():
        term = None
        for i in t:
            row = covector(n, m[i])  # e^i ∘ f
            term = row if term is None else wedge(term, row)
        out = out + (term * c if term is not None else KForm(n, 0, {(): c}))
    return out


def induced_gram(g, k: int):
    """Gram matrix on Lambda^k: G_k(e_I, e_J) = det(G[I, J])."""
    n = len(g)
    b = basis(n, k)
    return [[linalg.det([[g[i][j] for j in J] for i in I]) for J in b] for I in b]
