"""Catalogued low-dimensional algebras: positive gradings of small nilpotent
algebras (table T1) and the (2,3)-trivial algebras of dimensions 3, 4 (T2)
and 5 (T3), with their admissibility constraints and the determinants of the
induced action on cohomology."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import Poly

# --- table T1: nilpotent algebras of dimension <= 6 with a positive grading ------

# (structure, printed grading); "±" rows are listed once per sign.
_T1_ROWS = [
    ("(0)", "1"),
    ("(0^2)", "1^2"),
    ("(0^3)", "1^3"),
    ("(0^2,12)", "1^22"),
    ("(0^4)", "1^4"),
    ("(0^3,12)", "1^32"),
    ("(0^2,12,13)", "1^223"),
    ("(0^5)", "1^5"),
    ("(0^4,12)", "1^42"),
    ("(0^4,12+34)", "1^42"),
    ("(0^3,12,13)", "1^32^2"),
    ("(0^3,12,14)", "1^323"),
    ("(0^3,12,13+24)", "1^22^23"),
    ("(0^2,12,13,23)", "1^223^2"),
    ("(0^2,12,13,14)", "1^2234"),
    ("(0^2,12,13,14+23)", "12345"),
    ("(0^6)", "1^6"),
    ("(0^5,12)", "1^52"),
    ("(0^5,12+34)", "1^52"),
    ("(0^4,12,13)", "1^42^2"),
    ("(0^4,13+42,14+23)", "1^42^2"),
    ("(0^4,12,34)", "1^42^2"),
    ("(0^4,12,14+23)", "1^42^2"),
    ("(0^4,12,15)", "1^423"),
    ("(0^3,12,13,23)", "1^32^3"),
    ("(0^4,12,14+25)", "1^32^23"),
    ("(0^4,12,15+34)", "1^32^23"),
    ("(0^3,12,13,14)", "1^32^23"),
    ("(0^3,12,23,14+35)", "1^32^23"),
    ("(0^3,12,23,14-35)", "1^32^23"),
    ("(0^3,12,13,24)", "1^32^23"),
    ("(0^3,12,13,14+35)", "1^32^23"),
    ("(0^3,12,14,24)", "1^323^2"),
    ("(0^3,12,14,15)", "1^3234"),
    ("(0^3,12,13+14,24)", "1^22^23^2"),
    ("(0^3,12,13+42,14+23)", "1^22^23^2"),
    ("(0^3,12,13,14+23)", "1^22^23^2"),
    ("(0^3,12,14,13+42)", "1^22^23^2"),
    ("(0^3,12,14-23,15+34)", "1^22^234"),
    ("(0^2,12,13,23,14+25)", "1^223^24"),
    ("(0^2,12,13,23,14-25)", "1^223^24"),
    ("(0^2,12,13,23,14)", "1^223^24"),
    ("(0^2,12,13,14,15)", "1^22345"),
    ("(0^2,12,13,14,34+52)", "1^22345"),
    ("(0^3,12,14,15+23)", "1^23234"),
    ("(0^3,12,14,15+24)", "121345"),
    ("(0^3,12,14,15+23+24)", "123^245"),
    ("(0^2,12,13,14+23,24+15)", "123456"),
    ("(0^2,12,13,14+23,34+52)", "123457"),
    ("(0^2,12,13,14,23+15)", "134567"),
]


def parse_grading_text(text: str) -> list:
    """Expand compact grading notation: ``1^223`` -> [1, 1, 2, 3]."""
    out = []
    i = 0
    while i < len(text):
        w = int(text[i])
        i += 1
        reps = 1
        if i < len(text) and text[i] == "^":
            reps = int(text[i + 1])
            i += 2
        out.extend([w] * reps)
    return out


@dataclass(frozen=True)
class GradedEntry:
    id: str
    structure: str
    grading_text: str

    @property
    def grading(self) -> list:
        return parse_grading_text(self.grading_text)


T1 = [GradedEntry(f"T1.{n:02d}", s, g) for n, (s, g) in enumerate(_T1_ROWS, start=1)]


# --- tables T2 and T3 -----------------------------------------------------------

@dataclass(frozen=True)
class Constraint:
    """A printed admissibility condition: every expression must be nonzero.

    ``kind`` is "cohomological" when the exclusion comes from a vanishing
    determinant, and "normal-form" when it only keeps a matrix normal form
    distinct from another family."""

    label: str
    exprs: tuple
    kind: str = "cohomological"


@dataclass(frozen=True)
class SolvableEntry:
    id: str
    table: str
    label: str
    structure: str
    params: tuple = ()
    constraints: tuple = ()
    determinants: tuple | None = None   # printed (a1, a2, a3) as expression text
    unimodular: str | None = None        # expression vanishing exactly on the unimodular members
    notes: tuple = field(default=())


def _c(label: str, *exprs: str, kind: str = "cohomological") -> Constraint:
    return Constraint(label, tuple(exprs), kind)


T2 = [
    SolvableEntry("T2.r3", "T2", "r_3", "(0,21+31,31)"),
    SolvableEntry("T2.r3.lambda", "T2", "r_{3,l}", "(0,21,l.31)", ("l",),
                  (_c("l != -1,0", "l+1", "l"),)),
    SolvableEntry("T2.r3p.lambda", "T2", "r'_{3,l}", "(0,l.21+31,-21+l.31)", ("l",),
                  (_c("l != 0", "l"),)),
    SolvableEntry("T2.r4", "T2", "r_4", "(0,21+31,31+41,41)"),
    SolvableEntry("T2.r4.lambda", "T2", "r_{4,l}", "(0,21,l.31+41,l.41)", ("l",),
                  (_c("l != -1,-1/2,0", "l+1", "2*l+1", "l"),),
                  ("l^2", "2*l*(1+l)^2", "1+2*l")),
    SolvableEntry("T2.r4.lambda2", "T2", "r_{4,l(2)}", "(0,21,l1.31,l2.41)", ("l1", "l2"),
                  (_c("l_i != -1,0", "l1+1", "l1", "l2+1", "l2"),
                   _c("l1+l2 != -1,0", "l1+l2+1", "l1+l2")),
                  ("l1*l2", "(1+l1)*(1+l2)*(l1+l2)", "1+l1+l2")),
    SolvableEntry("T2.r4p.lambda2", "T2", "r'_{4,l(2)}", "(0,l1.21,l2.31+41,-31+l2.41)", ("l1", "l2"),
                  (_c("l1 != 0", "l1"), _c("l2 != -l1/2,0", "l1+2*l2", "l2")),
                  ("l1*(1+l2^2)", "2*l2*(1+(l1+l2)^2)", "l1+2*l2")),
    SolvableEntry("T2.d4.lambda", "T2", "d_{4,l}", "(0,21,l.31,(1+l).41+32)", ("l",),
                  (_c("l != -2,-1,-1/2,0", "l+2", "l+1", "2*l+1", "l"),),
                  ("l", "(2+l)*(1+2*l)", "2*(1+l)")),
    SolvableEntry("T2.d4p.lambda", "T2", "d'_{4,l}", "(0,l.21+31,-21+l.31,2l.41+32)", ("l",),
                  (_c("l != 0", "l"),),
                  ("1+l^2", "1+9*l^2", "4*l")),
    SolvableEntry("T2.h4", "T2", "h_4", "(0,21+31,31,2.41+32)"),
]

T3 = [
    SolvableEntry("T3.r5", "T3", "r_5", "(0,21+31,31+41,41+51,51)"),
    SolvableEntry("T3.r5_1.lambda", "T3", "r_{5(1),l}", "(0,21,l.31+41,l.41+51,l.51)", ("l",),
                  (_c("l != -1,-1/2,0", "l+1", "2*l+1", "l"),),
                  ("l^3", "8*l^3*(1+l)^3", "3*l*(1+2*l)^3"), "1+3*l"),
    SolvableEntry("T3.r5_2.lambda", "T3", "r_{5(2),l}", "(0,21+31,31,l.41+51,l.51)", ("l",),
                  (_c("l != -2,-1,-1/2,0", "l+2", "l+1", "2*l+1", "l"),),
                  ("l^2", "4*l*(1+l)^4", "(1+2*l)^2*(2+l)^2")),
    SolvableEntry("T3.r5.lambda2", "T3", "r_{5,l(2)}", "(0,21,l1.31,l2.41+51,l2.51)", ("l1", "l2"),
                  (_c("l_i != -1,0", "l1+1", "l1", "l2+1", "l2"),
                   _c("l1+l2 != 0,-1", "l1+l2", "l1+l2+1"),
                   _c("1+2*l2, l1+2*l2 != 0", "1+2*l2", "l1+2*l2")),
                  ("l1*l2^2", "2*l2*(1+l1)*(1+l2)^2*(l1+l2)^2", "(1+l1+l2)^2*(1+2*l2)*(l1+2*l2)"),
                  "1+l1+2*l2"),
    SolvableEntry("T3.r5.lambda3", "T3", "r_{5,l(3)}", "(0,21,l1.31,l2.41,l3.51)", ("l1", "l2", "l3"),
                  (_c("l_i != -1,0", "l1+1", "l1", "l2+1", "l2", "l3+1", "l3"),
                   _c("l1+l2+l3 != 0", "l1+l2+l3"),
                   _c("l_i+l_j != -1,0", "l1+l2+1", "l1+l2", "l1+l3+1", "l1+l3", "l2+l3+1", "l2+l3")),
                  ("l1*l2*l3", "(1+l1)*(1+l2)*(1+l3)*(l1+l2)*(l1+l3)*(l2+l3)",
                   "(l1+l2+l3)*(1+l1+l2)*(1+l1+l3)*(1+l2+l3)"),
                  "1+l1+l2+l3"),
    SolvableEntry("T3.r5p.lambda2", "T3", "r'_{5,l(2)}", "(0,l1.21+31,l1.31,l2.41+51,-41+l2.51)", ("l1", "l2"),
                  (_c("l_i, l1+2*l2 != 0", "l1", "l2", "l1+2*l2"),),
                  ("l1^2*(1+l2^2)", "4*l1*l2*(1+(l1+l2)^2)^2", "(l1+2*l2)^2*(1+(2*l1+l2)^2)"),
                  "l1+l2"),
    SolvableEntry("T3.r5p.lambda3", "T3", "r'_{5,l(3)}", "(0,l1.21,l2.31,l3.41+51,-41+l3.51)", ("l1", "l2", "l3"),
                  (_c("l_i != 0", "l1", "l2", "l3"), _c("l1 != -l2", "l1+l2"),
                   _c("l1,l2 != -2*l3", "l1+2*l3", "l2+2*l3")),
                  ("l1*l2*(1+l3^2)", "2*l3*(l1+l2)*(1+(l1+l3)^2)*(1+(l2+l3)^2)",
                   "(l1+2*l3)*(l2+2*l3)*(1+(l1+l2+l3)^2)"),
                  "l1+l2+2*l3"),
    SolvableEntry("T3.r5pp.lambda", "T3", "r''_{5,l}", "(0,l.21+31+41,-21+l.31+51,l.41+51,-41+l.51)", ("l",),
                  (_c("l != 0", "l"),),
                  ("(1+l^2)^2", "64*l^4*(1+l^2)", "(1+9*l^2)^2")),
    SolvableEntry("T3.r5pp.lambda3", "T3", "r''_{5,l(3)}", "(0,l1.21+31,-21+l1.31,l2.41+l3.51,-l3.41+l2.51)",
                  ("l1", "l2", "l3"),
                  (_c("l1 != 0", "l1"), _c("l2 != 0", "l2"), _c("l3 != 0", "l3", kind="normal-form")),
                  ("(1+l1^2)*(l2^2+l3^2)", "4*l1*l2*((l1+l2)^2+(1+l3)^2)*((l1+l2)^2+(1-l3)^2)",
                   "(l3^2+(2*l1+l2)^2)*(1+(l1+2*l2)^2)"),
                  "l1+l2"),
    SolvableEntry("T3.d5_1", "T3", "d_{5(1)}", "(0,21,21+31,31+41,2.51+32)"),
    SolvableEntry("T3.d5_2+", "T3", "d^+_{5(2)}", "(0,21,21+31,2.41,2.51+41+32)"),
    SolvableEntry("T3.d5_2-", "T3", "d^-_{5(2)}", "(0,21,21+31,2.41,2.51-41+32)"),
    SolvableEntry("T3.d5_1.lambda", "T3", "d_{5(1),l}", "(0,21,l.31,(1+l).41,(1+l).51+32+41)", ("l",),
                  (_c("l != -2,-3/2,-1,-2/3,-1/2,0", "l+2", "2*l+3", "l+1", "3*l+2", "2*l+1", "l"),),
                  ("l*(1+l)", "(2+l)^2*(1+2*l)^2", "2*(1+l)*(3+2*l)*(2+3*l)")),
    SolvableEntry("T3.d5_2.lambda", "T3", "d_{5(2),l}", "(0,21,21+31,l.41,2.51+32)", ("l",),
                  (_c("l != -3,-1,0", "l+3", "l+1", "l"),),
                  ("l", "9*(1+l)^2", "4*(3+l)^2"), "l+4"),
    SolvableEntry("T3.d5.lambda2", "T3", "d_{5,l(2)}", "(0,21,l1.31,l2.41,(1+l1).51+32)", ("l1", "l2"),
                  (_c("l1 != -2,-1/2,-1,0", "l1+2", "2*l1+1", "l1+1", "l1"),
                   _c("l2 != 0,-1", "l2", "l2+1"),
                   _c("l1+l2 != -2,0", "l1+l2+2", "l1+l2"),
                   _c("l2+2*l1 != -1", "l2+2*l1+1")),
                  ("l1*l2", "(1+l2)*(2+l1)*(l1+l2)*(1+2*l1)", "2*(1+l1)*(2+l2+l1)*(1+2*l1+l2)"),
                  "2+2*l1+l2"),
    SolvableEntry("T3.d5_3.lambda", "T3", "d_{5(3),l}", "(0,l.21,31,31+41,(1+l).51+32)", ("l",),
                  (_c("l != -3,-2,-1,-1/2,0", "l+3", "l+2", "l+1", "2*l+1", "l"),),
                  ("l", "2*(1+l)*(1+2*l)*(2+l)", "4*(1+l)^2*(3+l)"), "3+2*l"),
    SolvableEntry("T3.d5p.lambda+", "T3", "d'^+_{5,l}", "(0,l.21+31,-21+l.31,2l.41,2l.51+41+32)", ("l",),
                  (_c("l != 0", "l"),),
                  ("2*l*(1+l^2)", "(1+9*l^2)^2", "4*l*(1+25*l^2)")),
    SolvableEntry("T3.d5p.lambda-", "T3", "d'^-_{5,l}", "(0,l.21+31,-21+l.31,2l.41,2l.51-41+32)", ("l",),
                  (_c("l != 0", "l"),),
                  ("2*l*(1+l^2)", "(1+9*l^2)^2", "4*l*(1+25*l^2)")),
    # The printed structure omits the "+32" term of the last entry; the
    # nilradical must be (0^3,21) for the printed determinants to hold.
    SolvableEntry("T3.d5p.lambda2", "T3", "d'_{5,l(2)}", "(0,l1.21+31,-21+l1.31,l2.41,2l1.51+32)", ("l1", "l2"),
                  (_c("l1,l2 != 0", "l1", "l2"),),
                  ("l2*(1+l1^2)", "(1+9*l1^2)*(1+(l1+l2)^2)", "4*l1*(1+(3*l1+l2)^2)"),
                  "4*l1+l2",
                  notes=("printed: (0,l1.21+31,-21+l1.31,l2.41,2l1.51)",)),
    SolvableEntry("T3.p5", "T3", "p_5", "(0,21,21+31,2.41+32,3.51+42)"),
    SolvableEntry("T3.p5.lambda", "T3", "p_{5,l}", "(0,21,l.31,(1+l).41+32,(2+l).51+42)", ("l",),
                  (_c("l != -3,-2,-1,-1/2,0", "l+3", "l+2", "l+1", "2*l+1", "l"),),
                  ("l", "(1+2*l)*(3+l)", "6*(1+l)*(2+l)"), "4+3*l"),
]

PRINTED_D5P_LAMBDA2 = "(0,l1.21+31,-21+l1.31,l2.41,2l1.51)"

SOLVABLE = {e.id: e for e in T2 + T3}
GRADED = {e.id: e for e in T1}


def get_entry(entry_id: str):
    if entry_id in SOLVABLE:
        return SOLVABLE[entry_id]
    if entry_id in GRADED:
        return GRADED[entry_id]
    raise KeyError(f"unknown table entry {entry_id!r}")


# --- constraint evaluation and sampling -----------------------------------------------

def _poly(text: str) -> Poly:
    from .notation import parse_coeff
    return parse_coeff(text).to_poly()


def violated_constraints(entry: SolvableEntry, bindings, kinds=None) -> list:
    """Labels of the constraints that fail at ``bindings``, with the vanishing expression."""
    bad = []
    for c in entry.constraints:
        if kinds is not None and c.kind not in kinds:
            continue
        for e in c.exprs:
            if _poly(e).evaluate(bindings) == 0:
                bad.append((c.label, e))
    return bad


def admissible(entry: SolvableEntry, bindings) -> bool:
    return not violated_constraints(entry, bindings)


DEFAULT_SEED = 20100601
MAX_HEIGHT = 40


def random_rational(rng: random.Random, num: int = 12, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def _height_ok(x: Fraction) -> bool:
    return abs(x.numerator) <= MAX_HEIGHT and x.denominator <= MAX_HEIGHT


def sample_params(entry: SolvableEntry, count: int, seed: int = DEFAULT_SEED) -> list:
    """``count`` admissible parameter bindings drawn from a seeded generator."""
    rng = random.Random(f"{seed}:{entry.id}")
    out = []
    if not entry.params:
        return [{} for _ in range(count)]
    while len(out) < count:
        b = {p: random_rational(rng) for p in entry.params}
        if all(_height_ok(v) for v in b.values()) and admissible(entry, b):
            out.append(b)
    return out


def _solve_linear(poly: Poly, target: str, others: dict) -> Fraction | None:
    """Solve ``poly = 0`` for the variable ``target`` (poly linear in it)."""
    a = Fraction(0)
    b = Fraction(0)
    for mono, c in poly.terms:
        powers = dict(mono)
        e = powers.pop(target, 0)
        v = c
        for name, k in powers.items():
            v *= others[name] ** k
        if e == 0:
            b += v
        elif e == 1:
            a += v
        else:
            return None
    if a == 0:
        return None
    return -b / a


def sample_on_hypersurface(entry: SolvableEntry, expr: str, count: int, seed: int = DEFAULT_SEED,
                           avoid_others: bool = True) -> list:
    """Bindings with ``expr = 0`` (a linear condition) that keep every other printed
    expression nonzero when ``avoid_others`` is set."""
    poly = _poly(expr)
    names = sorted(poly.params())
    target = names[-1]
    rng = random.Random(f"{seed}:{entry.id}:{expr}")
    out = []
    for _ in range(2000):
        if len(out) == count:
            break
        b = {p: random_rational(rng) for p in entry.params if p != target}
        v = _solve_linear(poly, target, b)
        if v is None:
            break
        b[target] = v
        if avoid_others:
            others = [e for c in entry.constraints for e in c.exprs if _poly(e) != poly]
            if any(_poly(e).evaluate(b) == 0 for e in others):
                continue
        out.append(b)
    return out
