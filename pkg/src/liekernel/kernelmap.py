"""The Lie kernel P = ker(Λ²g -> g) and the linear algebra living on it.

Functionals on P are represented by 2-forms; two representatives define the
same functional exactly when they differ by an element of d(g*), which is why
:class:`PFunctional` compares values on a basis of P rather than coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exterior import KForm, KVector, contract, pair, sort_sign, wedge
from .liealg import LieAlgebra


class PreconditionError(ValueError):
    pass


@dataclass
class Subspace:
    ambient: str
    dim_ambient: int
    basis: list  # reduced row echelon rows

    @classmethod
    def span(cls, ambient: str, dim_ambient: int, vectors) -> Subspace:
        vectors = [list(v) for v in vectors if any(v)]
        if not vectors:
            return cls(ambient, dim_ambient, [])
        rows, _ = linalg.rref(vectors)
        return cls(ambient, dim_ambient, [r for r in rows if any(r)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def contains(self, v) -> bool:
        v = v.to_vector() if hasattr(v, "to_vector") else list(v)
        return linalg.in_span(self.basis, v) if self.basis else not any(v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim_ambient == other.dim_ambient and linalg.subspace_equal(self.basis, other.basis)

    def degree(self) -> int:
        return 2 if self.ambient == "L2g" else 1

    def kvectors(self, n: int) -> list:
        deg = self.degree()
        return [KVector.from_vector(n, deg, v) for v in self.basis]

    def to_json(self, n: int) -> dict:
        return {"ambient": self.ambient, "dim": self.dim, "basis": [kv.to_json() for kv in self.kvectors(n)]}


def lie_kernel(g: LieAlgebra) -> Subspace:
    """Kernel of the bracket map Λ²g -> g."""
    n = g.dim
    m = g.bracket_map_matrix()
    ncols = n * (n - 1) // 2
    null = linalg.nullspace(m, ncols) if ncols else []
    return Subspace.span("L2g", ncols, null)


@dataclass
class PFunctional:
    """Element of P*, given by a 2-form representative."""

    algebra: LieAlgebra
    rep: KForm
    P: Subspace

    def values(self) -> list:
        return [pair(self.rep, p) for p in self.P.kvectors(self.algebra.dim)]

    def __call__(self, p: KVector):
        if not self.P.contains(p):
            raise PreconditionError("argument is not in the Lie kernel")
        return pair(self.rep, p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PFunctional):
            return NotImplemented
        if self.P != other.P:
            return False
        return all(a == b for a, b in zip(self.values(), other.values()))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values())


def restrict_to_P(g: LieAlgebra, omega: KForm, P: Subspace | None = None) -> PFunctional:
    return PFunctional(g, omega, P or lie_kernel(g))


def dP(g: LieAlgebra, beta) -> KForm:
    rep = beta.rep if isinstance(beta, PFunctional) else beta
    return g.d(rep)


def ad_on_bivector(g: LieAlgebra, a, p: KVector) -> KVector:
    """A·(X∧Y) = [A,X]∧Y + X∧[A,Y], extended linearly."""
    n = g.dim
    ad = g.ad_matrix(a)
    out: dict = {}
    for t, c in p.terms.items():
        for slot, i in enumerate(t):
            for j in range(n):
                coef = ad[j][i]
                if not coef:
                    continue
                s, key = sort_sign(t[:slot] + (j,) + t[slot + 1:])
                if s == 0:
                    continue
                v = out.get(key, 0) + (c * coef if s > 0 else -(c * coef))
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return KVector(n, p.degree, out)


def stabilizer(g: LieAlgebra, beta: PFunctional) -> Subspace:
    """{A in g : beta(A·p) = 0 for every p in P}."""
    n = g.dim
    ps = beta.P.kvectors(n)
    rows = []
    for p in ps:
        rows.append([pair(beta.rep, ad_on_bivector(g, [Fraction(int(i == a)) for i in range(n)], p)) for a in range(n)])
    if not rows:
        return Subspace.span("g", n, [[Fraction(int(i == j)) for i in range(n)] for j in range(n)])
    return Subspace.span("g", n, linalg.nullspace(rows, n))


def killing_form(g: LieAlgebra) -> list:
    n = g.dim
    ads = [g.ad_matrix([Fraction(int(i == a)) for i in range(n)]) for a in range(n)]
    out = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            prod = linalg.matmul(ads[a], ads[b])
            t = sum((prod[i][i] for i in range(n)), Fraction(0))
            out[a][b] = out[b][a] = t
    return out


def _complement(g: LieAlgebra, sub: Subspace, metric=None) -> list:
    n = g.dim
    if metric is None:
        kill = killing_form(g)
        if linalg.rank(kill) == n:
            metric = [[-x for x in row] for row in kill]
    if metric is not None and sub.dim:
        # orthogonal complement: v with sub_i^T G v = 0
        rows = [linalg.matvec(linalg.transpose(metric), s) for s in sub.basis]
        comp = linalg.nullspace(rows, n)
        if linalg.rank(sub.basis + comp) == n:
            return comp
    if not sub.dim:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    return linalg.complement(sub.basis, n)


def two_plectic_check(g: LieAlgebra, beta: PFunctional, metric=None) -> bool:
    """Is dP(beta) nondegenerate on a complement m of the stabilizer?"""
    n = g.dim
    stab = stabilizer(g, beta)
    m = _complement(g, stab, metric)
    psi = dP(g, beta)
    if not m or not psi:
        return False
    vs = [KVector.from_vector(n, 1, v) for v in m]
    rows = []
    for v in vs:
        row = []
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                row.append(pair(psi, wedge(wedge(v, vs[a]), vs[b])))
        rows.append(row)
    if not rows[0]:
        return False
    return linalg.rank(rows) == len(vs)


def exact_two_forms(g: LieAlgebra) -> list:
    return [g.d(KForm.basis_element(g.dim, i)) for i in range(g.dim)]


def orthogonal_P_representative(g: LieAlgebra, metric, omega: KForm) -> KForm:
    """Component of omega orthogonal to d(g*) for the metric induced on Λ²g* by ``metric`` on g."""
    n = g.dim
    if linalg.rank(metric) != n:
        raise ValueError("degenerate metric")
    from .exterior import induced_gram

    G = induced_gram(linalg.inverse(metric), 2)
    ex = linalg.span_basis([f.to_vector() for f in exact_two_forms(g)])
    w = omega.to_vector()
    if not ex:
        return omega
    Gw = linalg.matvec(G, w)
    GE = [linalg.matvec(G, e) for e in ex]
    lhs = [[sum((ei * gej for ei, gej in zip(ex[i], GE[j])), Fraction(0)) for j in range(len(ex))] for i in range(len(ex))]
    rhs = [sum((ei * x for ei, x in zip(ex[i], Gw)), Fraction(0)) for i in range(len(ex))]
    alpha = linalg.solve(lhs, rhs)
    proj = [x - sum((alpha[j] * ex[j][t] for j in range(len(ex))), Fraction(0)) for t, x in enumerate(w)]
    return KForm.from_vector(n, 2, proj)


def multimoment_kernel(g: LieAlgebra, c: KForm, P: Subspace | None = None) -> Subspace:
    """{A in g : <c, p∧A> = 0 for all p in P}."""
    n = g.dim
    P = P or lie_kernel(g)
    ps = P.kvectors(n)
    if not ps:
        return Subspace.span("g", n, [[Fraction(int(i == j)) for i in range(n)] for j in range(n)])
    rows = [[pair(c, wedge(p, KVector.basis_element(n, a))) for a in range(n)] for p in ps]
    return Subspace.span("g", n, linalg.nullspace(rows, n))


def symmetry_contraction_differential(g: LieAlgebra, c: KForm, p: KVector) -> KForm:
    """d(p⌟c) at the identity, with p made of the symmetry fields of left translation.

    Left translations preserve the left-invariant form c; their fundamental
    vector fields are right-invariant.  Differentiating along left-invariant
    A, B gives

        d(p⌟c)(A, B) = -c(A·p, B) + c(B·p, A) - c(p, [A, B]),

    where A·p is the adjoint action on Λ²g.  Since Ad preserves P, vanishing
    at the identity for every p in P is vanishing everywhere.
    """
    n = g.dim
    unit = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    moved = [contract(ad_on_bivector(g, a, p), c) for a in unit]
    base = g.d(contract(p, c))
    out = {}
    for a in range(n):
        for b in range(a + 1, n):
            v = base.terms.get((a, b), 0) - moved[a].terms.get((b,), 0) + moved[b].terms.get((a,), 0)
            if v:
                out[(a, b)] = v
    return KForm(n, 2, out)


def closed_contraction_check(g: LieAlgebra, c: KForm, p: KVector, P: Subspace | None = None) -> bool:
    """d(p⌟c) = 0 for closed c and p in P (see :func:`symmetry_contraction_differential`)."""
    if g.d(c):
        raise PreconditionError("c is not closed")
    P = P or lie_kernel(g)
    if not P.contains(p):
        raise PreconditionError("p is not in the Lie kernel")
    return not symmetry_contraction_differential(g, c, p).terms


def kernel_dimension_identity(g: LieAlgebra) -> bool:
    from .liealg import derived_algebra

    n = g.dim
    return lie_kernel(g).dim + len(derived_algebra(g)) == n * (n - 1) // 2


__all__ = [
    "PFunctional", "PreconditionError", "Subspace", "closed_contraction_check", "dP",
    "exact_two_forms", "killing_form", "lie_kernel", "multimoment_kernel",
    "orthogonal_P_representative", "restrict_to_P", "stabilizer", "symmetry_contraction_differential",
    "two_plectic_check",
]
