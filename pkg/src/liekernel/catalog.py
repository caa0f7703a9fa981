"""Compact Lie algebras with matrix oracles, the hyperHermitian structure on
su(3), and the nearly Kähler orbit data.

Every algebra built from matrices is checked against hardcoded differentials
transcribed from the printed formulas, so the two independent sources guard
each other.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import linalg
from .exterior import KForm, KVector, covector, pair, pullback, w, wedge
from .liealg import LieAlgebra
from .notation import algebra_from_json
from .scalars import QuadScalar

S3 = QuadScalar.sqrt(3)
I_ = QuadScalar(0, 1, -1)


class CatalogError(ValueError):
    pass


# --- 3x3 / 4x4 complex matrices over Q(i) -------------------------------------------

def _cz(x) -> QuadScalar:
    return x if isinstance(x, QuadScalar) else QuadScalar(x, 0, -1)


def elementary(n: int, p: int, q: int, c=1) -> list:
    """c * E_pq (1-based) as an n x n matrix over Q(i)."""
    m = [[QuadScalar(0, 0, -1) for _ in range(n)] for _ in range(n)]
    m[p - 1][q - 1] = _cz(c)
    return m


def madd(*ms) -> list:
    n = len(ms[0])
    return [[sum((m[i][j] for m in ms), QuadScalar(0, 0, -1)) for j in range(n)] for i in range(n)]


def mscale(c, m) -> list:
    c = _cz(c)
    return [[c * x for x in row] for row in m]


def commutator(x, y) -> list:
    xy = linalg.matmul(x, y)
    yx = linalg.matmul(y, x)
    return [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(xy, yx)]


def _realify(m) -> list:
    out = []
    for row in m:
        for z in row:
            z = _cz(z)
            out.extend([z.a, z.b])
    return out


@dataclass
class MatrixRep:
    names: tuple
    matrices: list

    def coordinates(self, m) -> list:
        basis = [_realify(x) for x in self.matrices]
        coords = linalg.coordinates(basis, _realify(m))
        if coords is None:
            raise CatalogError("commutator leaves the span of the basis")
        return coords

    def algebra(self) -> LieAlgebra:
        n = len(self.matrices)
        diff = [dict() for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                br = self.coordinates(commutator(self.matrices[i], self.matrices[j]))
                for k, c in enumerate(br):
                    if c:
                        # de^k(e_i, e_j) = -e^k([e_i, e_j])
                        diff[k][(i, j)] = -c
        return LieAlgebra(n, diff, names=self.names)

    def trace_form(self) -> list:
        """(X, Y) -> -Re trace(XY)."""
        n = len(self.matrices)
        out = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                prod = linalg.matmul(self.matrices[i], self.matrices[j])
                t = sum((prod[k][k] for k in range(len(prod))), QuadScalar(0, 0, -1))
                out[i][j] = -t.a
        return out


# --- transcribed forms ------------------------------------------------------------------

def form(g: LieAlgebra, terms, extra=None) -> KForm:
    """Build a form from [(coefficient, "x y z"), ...] with names resolved to dual basis
    elements of ``g`` or to the 1-forms in ``extra``."""
    index = {name: i for i, name in enumerate(g.names)}
    extra = extra or {}
    out = None
    for c, mono in terms:
        factors = []
        for name in mono.split():
            if name in extra:
                factors.append(extra[name])
            else:
                factors.append(KForm.basis_element(g.dim, index[name]))
        t = w(*factors) * c
        out = t if out is None else out + t
    return out if out is not None else KForm.zero(g.dim, 2)


def form_diff(expected: KForm, got: KForm, names) -> dict:
    """Term-level difference between a printed and a computed form."""
    def label(t):
        return "".join(names[i] for i in t)

    missing, extra, wrong = {}, {}, {}
    keys = set(expected.terms) | set(got.terms)
    for t in sorted(keys):
        e = expected.terms.get(t)
        c = got.terms.get(t)
        if e is None:
            extra[label(t)] = str(c)
        elif c is None:
            missing[label(t)] = str(e)
        elif e != c:
            wrong[label(t)] = {"printed": str(e), "computed": str(c)}
    return {"missing": missing, "unexpected": extra, "different": wrong}


def rename_form(phi: KForm, names) -> str:
    if not phi.terms:
        return "0"
    parts = []
    for t, c in sorted(phi.terms.items()):
        parts.append(f"{c}*{''.join(names[i] for i in t)}")
    return " + ".join(parts)


# --- su(3) --------------------------------------------------------------------------------

SU3_NAMES = ("a1", "a2", "b12", "b13", "b23", "c12", "c13", "c23")


def su3_matrices() -> MatrixRep:
    E = lambda p, q, c=1: elementary(3, p, q, c)  # noqa: E731
    mats = [
        madd(E(1, 1, I_), E(2, 2, -I_)),
        madd(E(2, 2, I_), E(3, 3, -I_)),
    ]
    bs, cs = [], []
    for p, q in ((1, 2), (1, 3), (2, 3)):
        bs.append(madd(E(p, q), E(q, p, -1)))
        cs.append(madd(E(p, q, I_), E(q, p, I_)))
    return MatrixRep(SU3_NAMES, mats + bs + cs)


SU3_PRINTED = {
    "a1": [(-2, "b12 c12"), (-2, "b13 c13")],
    "a2": [(-2, "b13 c13"), (-2, "b23 c23")],
    "b12": [(2, "a1 c12"), (-1, "a2 c12"), (1, "b13 b23"), (1, "c13 c23")],
    "b13": [(1, "a1 c13"), (1, "a2 c13"), (-1, "b12 b23"), (1, "c12 c23")],
    "b23": [(-1, "a1 c23"), (2, "a2 c23"), (1, "b12 b13"), (1, "c12 c13")],
    "c12": [(-2, "a1 b12"), (1, "a2 b12"), (-1, "b13 c23"), (-1, "b23 c13")],
    "c13": [(-1, "a1 b13"), (-1, "a2 b13"), (-1, "b12 c23"), (1, "b23 c12")],
    "c23": [(1, "a1 b23"), (-2, "a2 b23"), (1, "b12 c13"), (1, "b13 c12")],
}


def _printed_algebra(names, printed) -> LieAlgebra:
    n = len(names)
    shell = LieAlgebra(n, [{}] * n, names=names, check=False)
    diff = [form(shell, printed[name]) if name in printed else KForm.zero(n, 2) for name in names]
    return LieAlgebra(n, diff, names=names, check=False)


def su3_printed() -> LieAlgebra:
    return _printed_algebra(SU3_NAMES, SU3_PRINTED)


def compare_differentials(computed: LieAlgebra, printed, only=None) -> dict:
    """{name: diff} for each printed differential that disagrees with the computed one."""
    out = {}
    for k, name in enumerate(computed.names):
        if name not in printed or (only is not None and name not in only):
            continue
        expected = form(computed, printed[name])
        if expected != computed.diff[k]:
            out[name] = form_diff(expected, computed.diff[k], computed.names)
    return out


def build_su3(strict: bool = True):
    rep = su3_matrices()
    g = rep.algebra()
    bad = compare_differentials(g, SU3_PRINTED)
    if bad and strict:
        raise CatalogError(f"su(3) differentials disagree with the matrix oracle: {bad}")
    return g, rep


# --- sp(2) -----------------------------------------------------------------------------

SP2_NAMES = ("a1", "a2", "q", "r", "b11", "b12", "b22", "c11", "c12", "c22")


def sp2_matrices() -> MatrixRep:
    E = lambda p, q, c=1: elementary(4, p, q, c)  # noqa: E731
    a1 = madd(E(1, 1, I_), E(3, 3, -I_))
    a2 = madd(E(2, 2, I_), E(4, 4, -I_))
    q = madd(E(1, 2), E(2, 1, -1), E(3, 4), E(4, 3, -1))
    r = madd(E(1, 2, I_), E(2, 1, I_), E(3, 4, -I_), E(4, 3, -I_))
    bs, cs = [], []
    for k, l in ((1, 1), (1, 2), (2, 2)):
        bs.append(madd(E(k, 2 + l), E(l, 2 + k), E(2 + k, l, -1), E(2 + l, k, -1)))
        cs.append(madd(E(k, 2 + l, I_), E(l, 2 + k, I_), E(2 + k, l, I_), E(2 + l, k, I_)))
    return MatrixRep(SP2_NAMES, [a1, a2, q, r] + bs + cs)


SP2_PRINTED = {
    "a1": [(-8, "b11 c11"), (-2, "b12 c12"), (-2, "q r")],
    "b11": [(2, "a1 c11"), (1, "b12 q"), (-1, "c12 r")],
    "b12": [(1, "a1 c12"), (1, "a2 c12"), (-2, "b11 q"), (2, "b22 q"), (-2, "c11 r"), (-2, "c22 r")],
    "c12": [(-1, "a1 b12"), (-1, "a2 b12"), (2, "b11 r"), (2, "b22 r"), (-2, "c11 q"), (2, "c22 q")],
    "q": [(1, "a1 r"), (-1, "a2 r"), (2, "b11 b12"), (-2, "b22 b12"), (2, "c11 c12"), (-2, "c22 c12")],
    "r": [(-1, "a1 q"), (1, "a2 q"), (2, "c11 b12"), (2, "c22 b12"), (-2, "b11 c12"), (-2, "b22 c12")],
}


def build_sp2(strict: bool = True):
    rep = sp2_matrices()
    g = rep.algebra()
    bad = compare_differentials(g, SP2_PRINTED)
    if bad and strict:
        raise CatalogError(f"sp(2) differentials disagree with the matrix oracle: {bad}")
    return g, rep


# --- su(2) + su(2) ------------------------------------------------------------------------

SU2SU2_NAMES = ("e1", "e2", "e3", "f1", "f2", "f3")


def build_su2su2() -> LieAlgebra:
    diff = []
    for offset in (0, 3):
        for i in range(3):
            a, b = offset + (i + 1) % 3, offset + (i + 2) % 3
            # de_i = e_{i+1} ∧ e_{i+2}
            diff.append({(a, b): 1} if a < b else {(b, a): -1})
    return LieAlgebra(6, diff, names=SU2SU2_NAMES)


# --- g2 ------------------------------------------------------------------------------------

G2_NAMES = ("a1", "a2", "b1", "b2", "b3", "b4", "b5", "b6", "c1", "c2", "c3", "c4", "c5", "c6")

G2_PRINTED = {
    "b1": [(2, "a1 c1"), (-1, "a2 c1"), (1, "b3 b2"), (1, "c3 c2"), (2, "b4 b3"), (2, "c4 c3"), (1, "b4 b5"), (1, "c4 c5")],
    "c1": [(-2, "a1 b1"), (1, "a2 b1"), (1, "c3 b2"), (1, "c2 b3"), (2, "c4 b3"), (2, "c3 b4"), (1, "b4 c5"), (1, "b5 c4")],
    "b3": [(-1, "a1 c3"), (1, "a2 c3"), (1, "b2 b1"), (1, "c1 c2"), (2, "b1 b4"), (2, "c1 c4"), (1, "b4 b6"), (1, "c4 c6")],
    "c3": [(1, "a1 b3"), (-1, "a2 b3"), (1, "c2 b1"), (1, "b2 c1"), (1, "b4 c6"), (2, "b1 c4"), (2, "b4 c1"), (1, "b4 c6"), (1, "b6 c4")],
    "b4": [(1, "a1 c4"), (2, "b3 b1"), (2, "c1 c3"), (1, "b5 b1"), (1, "c5 c1"), (1, "c6 c3"), (1, "b6 b3")],
    "c4": [(1, "b4 a1"), (2, "b1 c3"), (2, "b3 c1"), (1, "c5 b1"), (1, "c1 b5"), (1, "c6 b3"), (1, "c3 b6")],
}

G2_ENV = "LIEKERNEL_G2_DATA"


def g2_data_path(path=None):
    if path:
        return Path(path)
    env = os.environ.get(G2_ENV)
    if env:
        return Path(env)
    ref = resources.files("liekernel") / "data" / "g2.json"
    return Path(str(ref))


def load_g2(path=None) -> LieAlgebra | None:
    """The 14-dimensional g2 from its data file, or None if the file is absent."""
    p = g2_data_path(path)
    if not p.exists():
        return None
    doc = json.loads(p.read_text())
    g = algebra_from_json(doc)
    if g.dim != 14:
        raise CatalogError(f"g2 data has dimension {g.dim}")
    return g


def g2_differential_diffs(g: LieAlgebra) -> dict:
    return compare_differentials(g, G2_PRINTED)


# --- hyperHermitian structure on su(3) -------------------------------------------------------

@dataclass
class HKTData:
    algebra: LieAlgebra
    metric: list
    I: list
    J: list
    K: list
    omega: dict
    domega: dict = field(default_factory=dict)
    sign: int = 1
    c: KForm | None = None
    extra: dict = field(default_factory=dict)


def _q(x) -> QuadScalar:
    return x if isinstance(x, QuadScalar) else QuadScalar(x, 0, 3)


def _cols_to_matrix(cols) -> list:
    return linalg.transpose([[_q(x) for x in c] for c in cols])


def su3_metric_printed(g: LieAlgebra) -> list:
    """2a1^2 - a1a2 + 2(a2^2 + b12^2 + ...) with a1a2 = a1⊗a2 + a2⊗a1."""
    n = g.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    m[0][0] = Fraction(2)
    m[0][1] = m[1][0] = Fraction(-1)
    for i in range(1, n):
        m[i][i] = Fraction(2)
    return m


QUATERNION = {
    # left multiplication x*q for x in {i, j, k}, q in {1, i, j, k}: (sign, result)
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def su3_V() -> list:
    return [S3 / 3, 2 * S3 / 3] + [_q(0)] * 6


def build_hkt(sign: int | None = None) -> HKTData:
    """The hypercomplex structure on su(3) together with its metric and Kähler forms."""
    g, rep = build_su3()
    n = g.dim
    e = lambda i: [_q(int(t == i)) for t in range(n)]  # noqa: E731
    idx = {name: i for i, name in enumerate(g.names)}
    V = su3_V()
    quat = {"1": V, "i": e(idx["a1"]), "j": e(idx["b12"]), "k": e(idx["c12"])}
    H = [e(idx[x]) for x in ("b13", "c13", "b23", "c23")]
    # basis adapted to R + su(2) + H
    adapted = [quat["1"], quat["i"], quat["j"], quat["k"]] + H
    P = linalg.transpose(adapted)
    Pinv = linalg.inverse(P)
    structures = {}
    for x, gen in (("i", "a1"), ("j", "b12"), ("k", "c12")):
        cols = []
        for q in ("1", "i", "j", "k"):
            s, res = QUATERNION[(x, q)]
            cols.append([s * t for t in quat[res]])
        ad = [[_q(v) for v in row] for row in g.ad_matrix(e(idx[gen]))]
        for h in H:
            cols.append(linalg.matvec(ad, h))
        # cols are images of the adapted basis; convert to the standard basis
        M = linalg.transpose(cols)
        structures[x] = linalg.matmul(M, Pinv)
    metric = rep.trace_form()
    I, J, K = structures["i"], structures["j"], structures["k"]
    omegas = {name: kahler_form(metric, M) for name, M in (("I", I), ("J", J), ("K", K))}
    data = HKTData(g, metric, I, J, K, omegas)
    data.domega = {name: g.d(om) for name, om in omegas.items()}
    data.sign = resolve_sign(data) if sign is None else sign
    data.c = -act_on_3form(I, data.domega["I"], data.sign)
    return data


def kahler_form(metric, M) -> KForm:
    """omega(X, Y) = 1/2 g(MX, Y)."""
    n = len(metric)
    terms = {}
    gq = [[_q(x) for x in row] for row in metric]
    for i in range(n):
        for j in range(i + 1, n):
            mx = [M[t][i] for t in range(n)]
            v = sum((mx[a] * gq[a][j] for a in range(n)), _q(0)) / 2
            if v:
                terms[(i, j)] = v
    return KForm(n, 2, terms)


def act_on_3form(f, phi: KForm, sign: int = 1) -> KForm:
    """(f phi)(X, Y, Z) = sign * phi(fX, fY, fZ)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out = pullback(f, phi)
    return out if sign == 1 else -out


def resolve_sign(data: HKTData) -> int:
    """The sign convention under which I dω_I equals the printed common value."""
    printed = printed_forms(data.algebra)["IdomegaI"]
    for s in (1, -1):
        if act_on_3form(data.I, data.domega["I"], s) == printed:
            return s
    return 1


def primed_covectors(g: LieAlgebra) -> dict:
    n = g.dim
    a1, a2 = KForm.basis_element(n, 0), KForm.basis_element(n, 1)
    return {"a1p": a1 - a2 * Fraction(1, 2), "a2p": a2 * (S3 / 2)}


def printed_forms(g: LieAlgebra) -> dict:
    extra = primed_covectors(g)
    h = Fraction(1, 2)
    return {
        "omegaI": form(g, [(-1, "a1p a2p"), (1, "b12 c12"), (1, "b13 c13"), (-1, "b23 c23")], extra),
        "omegaJ": form(g, [(1, "a2p b12"), (-1, "a1p c12"), (-1, "b13 b23"), (-1, "c13 c23")], extra),
        "omegaK": form(g, [(1, "a2p c12"), (1, "a1p b12"), (1, "b13 c23"), (1, "b23 c13")], extra),
        "domegaI": form(g, [
            (-S3, "a1p b13 c13"), (-S3, "a1p b23 c23"),
            (2, "a2p b12 c12"), (1, "a2p b13 c13"), (-1, "a2p b23 c23"),
            (-1, "b12 b13 c23"), (-1, "b12 b23 c13"), (-1, "b13 b23 c12"), (-1, "c12 c13 c23"),
        ], extra),
        "domegaJ": form(g, [
            (2, "a1p a2p c12"), (1, "a1p b13 c23"), (1, "a1p b23 c13"),
            (-1, "a2p b13 b23"), (-1, "a2p c13 c23"),
            (-S3, "b12 b13 c13"), (-S3, "b12 b23 c23"), (1, "b13 c12 c13"), (-1, "b23 c12 c23"),
        ], extra),
        "domegaK": form(g, [
            (-2, "a1p a2p b12"), (1, "a1p b13 b23"), (1, "a1p b23 c13"),
            (1, "a2p b13 c23"), (1, "a2p b23 c13"),
            (S3, "b13 c12 c13"), (S3, "b23 c12 c23"), (1, "b12 b13 c13"), (-1, "b12 b23 c23"),
        ], extra),
        # as above with a1'b23c13 replaced by a1'c13c23
        "domegaK_corrected": form(g, [
            (-2, "a1p a2p b12"), (1, "a1p b13 b23"), (1, "a1p c13 c23"),
            (1, "a2p b13 c23"), (1, "a2p b23 c13"),
            (S3, "b13 c12 c13"), (S3, "b23 c12 c23"), (1, "b12 b13 c13"), (-1, "b12 b23 c23"),
        ], extra),
        "IdomegaI": form(g, [
            (2, "a1 b12 c12"), (1, "a1 b13 c13"), (-1, "a1 b23 c23"),
            (-1, "a2 b12 c12"), (1, "a2 b13 c13"), (2, "a2 b23 c23"),
            (-1, "b23 c12 c13"), (-1, "b13 c12 c23"), (-1, "b12 c13 c23"), (-1, "b12 b13 b23"),
        ], extra),
        "nuI": form(g, [(-S3 * h, "a1 a2"), (-1, "b12 c12"), (-1, "b23 c23"), (1, "b13 c13")], extra),
        "nuJ": form(g, [
            (S3, "a1 b12"), (S3, "a2 b12"), (-S3 * h, "b23 c13"), (-S3 * h, "b13 c23"),
            (Fraction(4, 14), "a1 c12"), (Fraction(-2, 14), "a2 c12"),
            (Fraction(-5, 14), "b13 b23"), (Fraction(-5, 14), "c13 c23"),
        ], extra),
        "nuK": form(g, [
            (S3 * Fraction(3, 14), "a1 c12"), (S3 * Fraction(2, 14), "a2 c12"),
            (S3 * Fraction(-2, 14), "b13 b23"), (S3 * Fraction(-2, 14), "c13 c23"),
            (-8, "a1 b12"), (-5, "a2 b12"), (Fraction(11, 2), "b13 c23"), (Fraction(11, 2), "b23 c13"),
        ], extra),
        "omegaI_su3_part": form(g, [(2, "b12 c12"), (2, "b13 c13")], extra),
    }


# --- nearly Kähler orbits -----------------------------------------------------------------------

@dataclass
class NKOrbitSpec:
    name: str
    algebra: LieAlgebra | None
    beta: KForm | None
    expected_dPbeta: KForm | None
    expected_stab_dim: int
    J_partial: list
    metric: list | None = None
    anchor: str = ""


def _vec(g: LieAlgebra, coeffs: dict) -> KVector:
    idx = {name: i for i, name in enumerate(g.names)}
    return KVector(g.dim, 1, {(idx[k],): v for k, v in coeffs.items()})


def nk_specs(g2_path=None) -> list:
    su3, rep3 = build_su3()
    sp2, rep2 = build_sp2()
    s22 = build_su2su2()
    g2 = load_g2(g2_path)
    specs = [
        NKOrbitSpec(
            "su3", su3,
            form(su3, [(1, "b12 c12"), (1, "c13 b13"), (1, "b23 c23")]),
            form(su3, [(3, "b12 b13 c23"), (3, "b12 b23 c13"), (3, "c12 b13 b23"), (3, "c12 c13 c23")]),
            2,
            [(_vec(su3, {"b12": 1}), _vec(su3, {"c12": 1})),
             (_vec(su3, {"c13": 1}), _vec(su3, {"b13": 1})),
             (_vec(su3, {"b23": 1}), _vec(su3, {"c23": 1}))],
            rep3.trace_form(), "nK.su3",
        ),
        NKOrbitSpec(
            "sp2", sp2,
            form(sp2, [(1, "a1 b11"), (1, "b12 r"), (1, "c12 q")]),
            form(sp2, [(-3, "a1 b12 q"), (3, "a1 c12 r"), (-6, "b11 b12 c12"), (-6, "b11 q r")]),
            4,
            [(_vec(sp2, {"a1": 1}), _vec(sp2, {"b11": Fraction(1, 2)})),
             (_vec(sp2, {"b12": 1}), _vec(sp2, {"r": 1})),
             (_vec(sp2, {"c12": 1}), _vec(sp2, {"q": 1}))],
            rep2.trace_form(), "nK.sp2",
        ),
        NKOrbitSpec(
            "su2su2", s22,
            form(s22, [(1, "e1 f1"), (1, "e2 f2"), (1, "e3 f3")]),
            form(s22, [(1, "e1 e2 f3"), (1, "e2 e3 f1"), (1, "e3 e1 f2"),
                       (-1, "e1 f2 f3"), (-1, "e2 f3 f1"), (-1, "e3 f1 f2")]),
            0,
            [(_vec(s22, {f"e{i}": 1}), _vec(s22, {f"e{i}": S3 / 3, f"f{i}": 2 * S3 / 3})) for i in (1, 2, 3)],
            None, "nK.su2su2",
        ),
    ]
    if g2 is not None:
        specs.append(NKOrbitSpec(
            "g2", g2,
            form(g2, [(1, "b1 c1"), (1, "b3 c3"), (1, "c4 b4")]),
            form(g2, [(6, "b1 b3 c4"), (-6, "b1 c3 b4"), (-6, "c1 b3 b4"), (-6, "c1 c3 c4")]),
            8,
            [(_vec(g2, {"b1": 1}), _vec(g2, {"c1": 1})),
             (_vec(g2, {"b3": 1}), _vec(g2, {"c3": 1})),
             (_vec(g2, {"c4": 1}), _vec(g2, {"b4": 1}))],
            None, "nK.g2",
        ))
    else:
        specs.append(NKOrbitSpec("g2", None, None, None, 8, [], None, "nK.g2"))
    return specs


def sigma_values(spec: NKOrbitSpec) -> list:
    """beta(X, JX) for the printed pairs X -> JX."""
    return [pair(spec.beta, wedge(x, jx)) for x, jx in spec.J_partial]


__all__ = [
    "HKTData", "MatrixRep", "NKOrbitSpec", "act_on_3form", "build_hkt", "build_sp2",
    "build_su2su2", "build_su3", "covector", "form", "load_g2", "nk_specs", "printed_forms",
]
