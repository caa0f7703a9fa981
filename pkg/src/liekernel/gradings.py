"""Positive gradings of nilpotent algebras, the extension A + k with ad_A acting
by the weights, and generators for the infinite families of (2,3)-trivial
algebras."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import linalg
from .liealg import LieAlgebra, extend_by_derivation, is_nilpotent
from .tables import GRADED, SOLVABLE, violated_constraints


class GradingError(ValueError):
    pass


class ConstraintError(ValueError):
    """Parameters hit a printed exclusion; ``violated`` lists (label, expression)."""

    def __init__(self, violated):
        self.violated = list(violated)
        text = "; ".join(f"{label} (vanishing: {expr})" for label, expr in self.violated)
        super().__init__(f"inadmissible parameters: {text}")


@dataclass(frozen=True)
class Grading:
    weights: tuple

    def __iter__(self):
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def to_json(self) -> list:
        return list(self.weights)


# --- homogeneity equations ---------------------------------------------------------

def homogeneity_equations(k: LieAlgebra) -> list:
    """Rows r with r·w = 0 for each structure term: w_i + w_j - w_k = 0."""
    rows = []
    seen = set()
    for c, form in enumerate(k.diff):
        for (i, j) in form.terms:
            key = (i, j, c)
            if key in seen:
                continue
            seen.add(key)
            row = [Fraction(0)] * k.dim
            row[i] += 1
            row[j] += 1
            row[c] -= 1
            rows.append(row)
    return rows


def validate_grading(k: LieAlgebra, w) -> bool:
    w = list(w)
    if len(w) != k.dim:
        raise GradingError(f"expected {k.dim} weights, got {len(w)}")
    if any(x <= 0 for x in w):
        return False
    for c, form in enumerate(k.diff):
        for (i, j) in form.terms:
            if w[i] + w[j] != w[c]:
                return False
    return True


# --- Fourier-Motzkin feasibility ------------------------------------------------------

def _normalize_ineq(coeffs, rhs):
    scale = max((abs(c) for c in coeffs if c), default=None)
    if scale is None:
        return tuple(coeffs), rhs
    return tuple(c / scale for c in coeffs), rhs / scale


def fourier_motzkin_feasible(rows, rhs) -> bool:
    """Decide whether {t : rows·t >= rhs} is nonempty, exactly."""
    system = {_normalize_ineq([Fraction(c) for c in r], Fraction(b)) for r, b in zip(rows, rhs)}
    nvars = len(rows[0]) if rows else 0
    for v in range(nvars):
        pos, neg, rest = [], [], []
        for coeffs, b in system:
            if coeffs[v] > 0:
                pos.append((coeffs, b))
            elif coeffs[v] < 0:
                neg.append((coeffs, b))
            else:
                rest.append((coeffs, b))
        new = set(rest)
        for cp, bp in pos:
            for cn, bn in neg:
                # cp[v] > 0, cn[v] < 0: combine to cancel variable v
                a, b = -cn[v], cp[v]
                coeffs = [a * x + b * y for x, y in zip(cp, cn)]
                coeffs[v] = Fraction(0)
                new.add(_normalize_ineq(coeffs, a * bp + b * bn))
        system = new
    return all(b <= 0 for _, b in system)


def positive_grading_exists(k: LieAlgebra) -> bool:
    eqs = homogeneity_equations(k)
    basis = linalg.nullspace(eqs, k.dim) if eqs else [[Fraction(int(i == j)) for i in range(k.dim)] for j in range(k.dim)]
    if not basis:
        return k.dim == 0
    # w = sum_t t_j basis_j; require every coordinate >= 1
    rows = [[basis[j][i] for j in range(len(basis))] for i in range(k.dim)]
    return fourier_motzkin_feasible(rows, [1] * k.dim)


# --- minimal integer grading ----------------------------------------------------------

def _minimal_grading(k: LieAlgebra) -> list | None:
    n = k.dim
    eqs = homogeneity_equations(k)
    reduced, _ = linalg.rref(eqs) if eqs else ([], [])
    constraints = []
    for r in list(eqs) + list(reduced):
        terms = [(i, c) for i, c in enumerate(r) if c]
        if terms:
            constraints.append(terms)
    def propagate(w):
        changed = True
        while changed:
            changed = False
            for terms in constraints:
                unknown = [(i, c) for i, c in terms if w[i] is None]
                known = sum(c * w[i] for i, c in terms if w[i] is not None)
                if not unknown:
                    if known != 0:
                        return False
                elif len(unknown) == 1:
                    i, c = unknown[0]
                    v = -known / c
                    if v.denominator != 1 or v < 1:
                        return False
                    w[i] = v
                    changed = True
        return True

    def search(w, total):
        assigned = int(sum(x for x in w if x is not None))
        free = sum(1 for x in w if x is None)
        if assigned + free > total:
            return None
        if free == 0:
            return list(w) if assigned == total else None
        i = w.index(None)
        for v in range(1, total - assigned - free + 2):
            trial = list(w)
            trial[i] = Fraction(v)
            if not propagate(trial):
                continue
            found = search(trial, total)
            if found is not None:
                return found
        return None

    start = [None] * n
    if not propagate(start):
        return None
    total = n
    while True:
        found = search(start, total)
        if found is not None:
            return [int(x) for x in found]
        total += 1


def find_positive_grading(k: LieAlgebra) -> Grading | None:
    """Minimal-total positive grading, lexicographically smallest among those; None if none exists."""
    if not is_nilpotent(k):
        raise GradingError("positive gradings are only sought on nilpotent algebras")
    if k.dim == 0:
        return Grading(())
    if not positive_grading_exists(k):
        return None
    w = _minimal_grading(k)
    g = 0
    for x in w:
        g = gcd(g, x)
    return Grading(tuple(x // g for x in w))


def grading_extension(k: LieAlgebra, w, name: str = "A") -> LieAlgebra:
    """The algebra R A + k with [A, e_j] = w_j e_j."""
    w = list(w)
    if not validate_grading(k, w):
        raise GradingError(f"{w} is not a positive grading")
    n = k.dim
    D = [[Fraction(w[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return extend_by_derivation(k, D, name=name)


# --- infinite families ----------------------------------------------------------------------

FAMILY_NAMES = ("r_n", "r_nk", "r_nlk", "d_n", "f1", "f2", "f3")


def _vals(params, key, count):
    if key in params:
        v = params[key]
        vals = list(v) if isinstance(v, (list, tuple)) else [v]
    else:
        vals = [params[f"{key}{i}"] for i in range(1, count + 1) if f"{key}{i}" in params]
    if len(vals) != count:
        raise ValueError(f"expected {count} values for parameter {key!r}, got {len(vals)}")
    return [Fraction(x) for x in vals]


def _term(terms, hi, lo, c):
    """Add c * e^hi ∧ e^lo (1-based indices as written, e.g. "31")."""
    i, j = hi - 1, lo - 1
    if i > j:
        i, j, c = j, i, -c
    terms[(i, j)] = terms.get((i, j), 0) + Fraction(c)


def family_constraints(name: str, n: int, params=None) -> list:
    """Violated printed constraints as (label, detail) pairs."""
    params = params or {}
    bad = []
    if name == "r_nk":
        k = int(params["k"])
        (lam,) = _vals(params, "l", 1)
        for v, text in ((lam, "0"), (lam + 1, "-1"), (lam + 2, "-2"), (2 * lam + 1, "-1/2")):
            if v == 0:
                bad.append(("l != 0,-1,-2,-1/2", f"l = {text}"))
    elif name == "r_nlk":
        k = int(params["k"])
        lam = _vals(params, "l", k)
        checks = []
        for i in range(k):
            checks += [(f"l{i+1}", lam[i]), (f"1+l{i+1}", 1 + lam[i]), (f"l{i+1}+2*l{k}", lam[i] + 2 * lam[k - 1])]
        checks.append((f"1+2*l{k}", 1 + 2 * lam[k - 1]))
        for i, j in combinations(range(k), 2):
            checks += [(f"l{i+1}+l{j+1}", lam[i] + lam[j]), (f"1+l{i+1}+l{j+1}", 1 + lam[i] + lam[j])]
        for i, j, m in combinations(range(k), 3):
            checks.append((f"l{i+1}+l{j+1}+l{m+1}", lam[i] + lam[j] + lam[m]))
        bad += [("nonzero " + label, label) for label, v in checks if v == 0]
    elif name == "d_n":
        lam = _vals(params, "l", n - 3)
        checks = []
        for i in range(n - 3):
            checks += [(f"l{i+1}", lam[i]), (f"1+l{i+1}", 1 + lam[i])]
        l1 = lam[0]
        checks += [("l1+2", l1 + 2), ("2*l1+1", 2 * l1 + 1)]
        rest = list(range(1, n - 3))
        for i in rest:
            checks += [
                (f"l1+l{i+1}", l1 + lam[i]),
                (f"2*l1+1+l{i+1}", 2 * l1 + 1 + lam[i]),
                (f"l1+2+l{i+1}", l1 + 2 + lam[i]),
            ]
        for i, j in combinations(rest, 2):
            checks += [
                (f"l1+l{i+1}+l{j+1}", l1 + lam[i] + lam[j]),
                (f"l{i+1}+l{j+1}", lam[i] + lam[j]),
                (f"1+l{i+1}+l{j+1}", 1 + lam[i] + lam[j]),
            ]
        for i, j, m in combinations(rest, 3):
            checks.append((f"l{i+1}+l{j+1}+l{m+1}", lam[i] + lam[j] + lam[m]))
        bad += [("nonzero " + label, label) for label, v in checks if v == 0]
    return bad


def _family_diff(name: str, n: int, params) -> list:
    diff = [dict() for _ in range(n)]

    def add(k, hi, lo, c=1):
        _term(diff[k - 1], hi, lo, c)

    if name == "r_n":
        if n < 3:
            raise ValueError("r_n needs n >= 3")
        for k in range(2, n):
            add(k, k, 1)
            add(k, k + 1, 1)
        add(n, n, 1)
    elif name == "r_nk":
        k = int(params["k"])
        if not 2 < k < n:
            raise ValueError("r_{n(k-1),l} needs 2 < k < n")
        (lam,) = _vals(params, "l", 1)
        for j in range(2, k):
            add(j, j, 1)
            add(j, j + 1, 1)
        add(k, k, 1)
        for j in range(k + 1, n):
            add(j, j, 1, lam)
            add(j, j + 1, 1)
        add(n, n, 1, lam)
    elif name == "r_nlk":
        k = int(params["k"])
        if not n > k + 2 or k < 1:
            raise ValueError("r_{n,l(k)} needs n > k + 2")
        lam = _vals(params, "l", k)
        add(2, 2, 1)
        for i in range(1, k):
            add(i + 2, i + 2, 1, lam[i - 1])
        for j in range(k + 2, n):
            add(j, j, 1, lam[k - 1])
            add(j, j + 1, 1)
        add(n, n, 1, lam[k - 1])
    elif name == "d_n":
        if n < 4:
            raise ValueError("d_{n,l(n-3)} needs n >= 4")
        lam = _vals(params, "l", n - 3)
        add(2, 2, 1)
        for j in range(3, n):
            add(j, j, 1, lam[j - 3])
        add(n, n, 1, 1 + lam[0])
        add(n, 3, 2)
    elif name == "f1":
        if n < 4:
            raise ValueError("f1 needs n >= 4")
        add(2, 2, 1)
        add(3, 3, 1)
        for j in range(4, n + 1):
            add(j, j, 1, j - 2)
            add(j, j - 1, 2)
    elif name == "f2":
        if n < 5:
            raise ValueError("f2 needs n >= 5")
        add(2, 2, 1)
        add(3, 3, 1, 2)
        add(4, 4, 1, 3)
        add(4, 3, 2)
        add(5, 5, 1, 4)
        add(5, 4, 2)
        for j in range(6, n + 1):
            add(j, j, 1, j - 1)
            add(j, j - 1, 2)
            add(j, j - 2, 3)
    elif name == "f3":
        return None
    else:
        raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}")
    return diff


def f3_derived(n: int) -> LieAlgebra:
    """The nilpotent algebra (0^2,21,31,...,(n-3)1, (n-2)1 - (n-2)2 + (n-3)3 - ...) of dimension n-1."""
    if n < 5 or n % 2 == 0:
        raise ValueError("f3 needs odd n = 2k+1 >= 5")
    k = (n - 1) // 2
    m = n - 1
    diff = [dict() for _ in range(m)]
    for j in range(3, m):
        _term(diff[j - 1], j - 1, 1, 1)
    last = diff[m - 1]
    _term(last, m - 1, 1, 1)
    for j in range(2, k + 1):
        _term(last, m + 1 - j, j, (-1) ** (j + 1))
    return LieAlgebra(m, diff)


def f3_grading(n: int) -> list:
    return [1] + [j - 1 for j in range(2, n)]


def family(name: str, n: int, params=None, check_constraints: bool = True) -> LieAlgebra:
    """Member of an infinite family; params use l / l1, l2, ... and k where relevant."""
    params = dict(params or {})
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"malformed dimension {n!r}")
    if name == "f3":
        return grading_extension(f3_derived(n), f3_grading(n))
    diff = _family_diff(name, n, params)
    if check_constraints:
        bad = family_constraints(name, n, params)
        if bad:
            raise ConstraintError(bad)
    return LieAlgebra(n, diff)


# --- table lookups ------------------------------------------------------------------------

@dataclass
class TableEntryResult:
    entry: object
    algebra: LieAlgebra
    admissible: bool
    violated: list


def table_entry(table: str, entry_id: str, bindings=None) -> TableEntryResult:
    from .notation import parse

    bindings = {k: Fraction(v) for k, v in (bindings or {}).items()}
    full = entry_id if entry_id.startswith(table + ".") else f"{table}.{entry_id}"
    if table == "T1":
        entry = GRADED.get(full)
        if entry is None:
            raise KeyError(f"unknown table entry {full!r}")
        return TableEntryResult(entry, parse(entry.structure).bind({}), True, [])
    entry = SOLVABLE.get(full)
    if entry is None or entry.table != table:
        raise KeyError(f"unknown table entry {full!r}")
    algebra = parse(entry.structure).bind(bindings)
    bad = violated_constraints(entry, bindings)
    return TableEntryResult(entry, algebra, not bad, bad)


def entry_split(g: LieAlgebra):
    """(k, D) for a table algebra: k = span(e2..en), D = ad_{e1} restricted to k."""
    from .liealg import restrict_endo, subalgebra

    n = g.dim
    vecs = [[Fraction(int(i == j)) for i in range(n)] for j in range(1, n)]
    k = subalgebra(g, vecs)
    D = restrict_endo(g.ad_matrix([Fraction(1)] + [Fraction(0)] * (n - 1)), vecs)
    return k, D
