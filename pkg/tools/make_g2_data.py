"""Generate src/liekernel/data/g2.json.

g2 is built inside gl(7) from its 7-dimensional representation.  The weights
of the standard basis vectors v1..v7 are

    2a+b, a+b, a, 0, -a, -a-b, -2a-b      (a short simple root, b long)

so H1, H2 (the coroots of a, b) are diagonal.  X1, X2 raise weights by a, b;
X3..X6 are the iterated brackets [X1,X2], [X1,X3], [X1,X4], [X2,X5] for the
roots a+b, 2a+b, 3a+b, 3a+2b.  Each Ya is the adjoint of Xa for the inner
product diag(1,1,1,2,1,1,1), which makes

    A_k = i H_k,   B_a = X_a - Y_a,   C_a = i (X_a + Y_a)

a basis of the compact real form.  The signs of the simple root vectors are
chosen so that X1, X2, Y1, Y2 generate a 14-dimensional algebra, and each root
vector is then rescaled by a rational factor fitted to the six printed
differentials db1, dc1, db3, dc3, db4, dc4.  Everything else is computed.

Run from the repository root:  python3 tools/make_g2_data.py
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path

from liekernel import linalg
from liekernel.catalog import (
    G2_NAMES, G2_PRINTED, MatrixRep, commutator, compare_differentials, form,
)
from liekernel.exterior import KForm
from liekernel.notation import to_json
from liekernel.scalars import QuadScalar

OUT = Path(__file__).resolve().parents[1] / "src" / "liekernel" / "data" / "g2.json"
NORM = [1, 1, 1, 2, 1, 1, 1]
H1 = [1, -1, 2, 0, -2, 1, -1]
H2 = [0, 1, -1, 0, 1, -1, 0]


def zero():
    return [[Fraction(0)] * 7 for _ in range(7)]


def entries(pairs):
    m = zero()
    for (r, c), v in pairs.items():
        m[r - 1][c - 1] = Fraction(v)
    return m


def adjoint(m):
    return [[Fraction(NORM[j], NORM[i]) * m[j][i] for j in range(7)] for i in range(7)]


def diag(d):
    m = zero()
    for i, x in enumerate(d):
        m[i][i] = Fraction(x)
    return m


def generated_dimension(gens) -> int:
    basis = linalg.span_basis([sum(g, []) for g in gens])
    mats = [[row[7 * i:7 * i + 7] for i in range(7)] for row in basis]
    grew = True
    while grew:
        grew = False
        for a, b in itertools.combinations(list(mats), 2):
            c = sum(commutator(a, b), [])
            if not linalg.in_span(basis, c):
                basis = linalg.span_basis(basis + [c])
                mats.append([c[7 * i:7 * i + 7] for i in range(7)])
                grew = True
    return len(basis)


def simple_root_vectors():
    for s in itertools.product((1, -1), repeat=6):
        x1 = entries({(6, 7): s[0], (4, 5): s[1], (3, 4): 2 * s[2], (1, 2): s[3]})
        x2 = entries({(5, 6): s[4], (2, 3): s[5]})
        y1, y2 = adjoint(x1), adjoint(x2)
        if commutator(x1, y1) != diag(H1) or commutator(x2, y2) != diag(H2):
            continue
        if generated_dimension([x1, x2, y1, y2]) == 14:
            yield s, x1, x2


def compact_rep(xs, scales) -> MatrixRep:
    i_ = QuadScalar(0, 1, -1)
    q = lambda m, c: [[QuadScalar(0, 0, -1) + c * v for v in row] for row in m]  # noqa: E731
    mats = [q(diag(H1), i_), q(diag(H2), i_)]
    xs = [[[s * v for v in row] for row in x] for x, s in zip(xs, scales)]
    ys = [adjoint(x) for x in xs]
    bs = [q([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(x, y)], 1) for x, y in zip(xs, ys)]
    cs = [q([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(x, y)], i_) for x, y in zip(xs, ys)]
    return MatrixRep(G2_NAMES, mats + bs + cs)


def fit_scales(g) -> list | None:
    """Scale factors s_a with B_a, C_a -> s_a B_a, s_a C_a matching the printed terms.

    Rescaling e_i -> s_i e_i turns the coefficient c of e^i e^j in de^k into
    c s_i s_j / s_k; each printed term is one such multiplicative equation.
    """
    index = {name: i for i, name in enumerate(G2_NAMES)}
    root = lambda i: 0 if i < 2 else (i - 2) % 6 + 1  # noqa: E731  (0 for the Cartan part)
    s = {0: Fraction(1), 1: Fraction(1), 2: Fraction(1)}
    eqs = []
    for name, terms in G2_PRINTED.items():
        k = index[name]
        got = g.diff[k]
        for c, mono in terms:
            want = form(g, [(c, mono)])
            (key, wc), = want.terms.items()
            have = got.terms.get(key)
            if have is None:
                return None
            eqs.append((root(key[0]), root(key[1]), root(k), Fraction(wc) / Fraction(have)))
    for _ in range(6):
        for i, j, k, r in eqs:
            unknown = [t for t in (i, j) if t not in s] + ([k] if k not in s else [])
            if len(set(unknown)) != 1:
                continue
            u = unknown[0]
            if u == k:
                s[k] = s[i] * s[j] / r
            else:
                other = j if u == i else i
                s[u] = r * s[k] / s[other]
    if len(s) < 7:
        return None
    return [s[a] for a in range(1, 7)]


def main() -> None:
    best = None
    for signs, x1, x2 in simple_root_vectors():
        x3 = commutator(x1, x2)
        x4 = commutator(x1, x3)
        x5 = commutator(x1, x4)
        x6 = commutator(x2, x5)
        xs = [x1, x2, x3, x4, x5, x6]
        g0 = compact_rep(xs, [1] * 6).algebra()
        scales = fit_scales(g0)
        if scales is None:
            continue
        g = compact_rep(xs, scales).algebra()
        diffs = compare_differentials(g, G2_PRINTED)
        size = sum(len(v) for d in diffs.values() for v in d.values())
        if best is None or size < best[0]:
            best = (size, signs, scales, g, diffs)
    if best is None:
        raise SystemExit("no consistent normalisation found")
    size, signs, scales, g, diffs = best
    doc = to_json(g)
    doc["provenance"] = {
        "construction": "7-dimensional representation; see tools/make_g2_data.py",
        "simple_root_vector_signs": list(signs),
        "root_vector_scales": [str(x) for x in scales],
        "printed_differential_mismatches": diffs,
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {OUT}; mismatching printed terms: {size}")
    print(json.dumps(diffs, indent=1))


if __name__ == "__main__":
    main()
