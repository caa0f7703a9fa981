"""Parser/printer for structure-constant tuples such as ``(0^2,12,13,14+23,24+15)``.

Grammar (whitespace ignored)::

    algebra = "(" entry {"," entry} ")"
    entry   = "0" ["^" nat] | sum
    sum     = ["-"] term {("+"|"-") term}
    term    = [coeff "."] pair
    pair    = digit digit | "[" nat "," nat "]"
    coeff   = cmul | "(" cadd ")"
    cadd    = cmul {("+"|"-") cmul}
    cmul    = catom {["*"] catom}
    catom   = (["-"] nat ["/" nat] | ident | "(" cadd ")") ["^" nat]

A pair ``ij`` denotes e^i ∧ e^j in the written order.  Juxtaposition such as
``2l.41`` multiplies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import jsonschema

from .liealg import LieAlgebra
from .scalars import CoeffExpr, Mul, Neg, Num, Param, Poly, eval_coeff, scalar_from_json, scalar_to_json


class NotationError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.pos = pos
        self.text = text
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}")


class SchemaError(ValueError):
    def __init__(self, message: str, pointer: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


@dataclass
class ParamAlgebra:
    """Structure constants with symbolic coefficients; indices are 0-based."""

    dim: int
    entries: list  # per k: list of (i, j, CoeffExpr) in written order
    names: tuple | None = None
    source: str | None = field(default=None, compare=False)

    @property
    def params(self) -> list:
        out = set()
        for entry in self.entries:
            for _, _, c in entry:
                out |= c.params()
        return sorted(out)

    def normalized(self) -> list:
        """Per entry: {(hi, lo): Poly} with the sign absorbed (de^k = sum p * e^hi ∧ e^lo)."""
        out = []
        for entry in self.entries:
            terms: dict = {}
            for i, j, c in entry:
                p = c.to_poly()
                if i < j:
                    i, j, p = j, i, -p
                terms[(i, j)] = terms.get((i, j), Poly.const(0)) + p
            out.append({k: v for k, v in terms.items() if v.terms})
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.normalized() == other.normalized()

    def bind(self, bindings=None, check: bool = True) -> LieAlgebra:
        bindings = bindings or {}
        diff = []
        for entry in self.entries:
            terms: dict = {}
            for i, j, c in entry:
                v = eval_coeff(c, bindings)
                terms[(i, j)] = terms.get((i, j), 0) + v
            diff.append(terms)
        return LieAlgebra(self.dim, diff, names=self.names, check=check)

    def __str__(self) -> str:
        return print_algebra(self)


# --- parsing -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.s = "".join(text.split())
        self.pos = 0
        # map compact positions back to the raw text
        self._raw = [i for i, ch in enumerate(text) if not ch.isspace()]

    def error(self, msg: str):
        raw = self._raw[self.pos] if self.pos < len(self._raw) else len(self.text)
        raise NotationError(msg, self.text, raw)

    def peek(self, k: int = 0) -> str:
        p = self.pos + k
        return self.s[p] if p < len(self.s) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}, found {self.peek() or 'end of input'!r}")
        self.pos += 1

    def nat(self) -> str:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a number")
        return self.s[start:self.pos]

    def ident(self) -> str:
        start = self.pos
        while self.peek().isalnum() or self.peek() == "_":
            self.pos += 1
        return self.s[start:self.pos]

    # algebra
    def algebra(self):
        self.expect("(")
        entries = [self.entry()]
        while self.peek() == ",":
            self.pos += 1
            entries.append(self.entry())
        if self.peek() != ")":
            self.error("unbalanced parentheses or unexpected character")
        self.pos += 1
        if self.pos != len(self.s):
            self.error("trailing characters")
        out = []
        for e in entries:
            if isinstance(e, int):
                out.extend([] for _ in range(e))
            else:
                out.append(e)
        return out

    def entry(self):
        if self.peek() == "0" and self.peek(1) in ("^", ",", ")"):
            self.pos += 1
            if self.peek() == "^":
                self.pos += 1
                k = int(self.nat())
                if k < 1:
                    self.error("zero exponent")
                return k
            return 1
        return self.sum()

    def sum(self):
        terms = []
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        terms.append(self.term(sign))
        while self.peek() in ("+", "-"):
            sign = 1 if self.peek() == "+" else -1
            self.pos += 1
            terms.append(self.term(sign))
        return terms

    def term(self, sign: int):
        coeff = None
        start = self.pos
        if self.peek() == "[":
            i, j = self.pair()
        elif self.peek().isdigit():
            digits = self.nat()
            if self.peek() in (".", "/", "*") or self.peek().isalpha():
                self.pos = start
                coeff = self.coeff()
                self.expect(".")
                i, j = self.pair()
            else:
                if len(digits) != 2:
                    self.pos = start
                    self.error(f"ambiguous index token {digits!r}; use [i,j] for indices above 9")
                i, j = int(digits[0]), int(digits[1])
        elif self.peek().isalpha() or self.peek() == "(":
            coeff = self.coeff()
            self.expect(".")
            i, j = self.pair()
        else:
            self.error(f"unexpected {self.peek() or 'end of input'!r}")
        if i == 0 or j == 0:
            self.error("indices start at 1")
        c = coeff if coeff is not None else Num(Fraction(1))
        if sign < 0:
            c = Neg(c)
        return (i - 1, j - 1, c)

    def pair(self):
        if self.peek() == "[":
            self.pos += 1
            i = int(self.nat())
            self.expect(",")
            j = int(self.nat())
            self.expect("]")
            return i, j
        if self.peek().isdigit() and self.peek(1).isdigit():
            i, j = int(self.peek()), int(self.peek(1))
            self.pos += 2
            if self.peek().isdigit():
                self.error("ambiguous index token; use [i,j] for indices above 9")
            return i, j
        self.error("expected an index pair")

    def coeff(self) -> CoeffExpr:
        if self.peek() == "(":
            self.pos += 1
            e = self.cadd()
            self.expect(")")
            # allow (..)*x or (..)x before the dot
            while self.peek() == "*" or self.peek().isalpha() or self.peek() == "(":
                if self.peek() == "*":
                    self.pos += 1
                e = Mul(e, self.catom())
            return e
        return self.cmul()

    def cadd(self) -> CoeffExpr:
        e = self.cmul()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            r = self.cmul()
            e = e + r if op == "+" else e - r
        return e

    def cmul(self) -> CoeffExpr:
        e = self.catom()
        while True:
            if self.peek() == "*":
                self.pos += 1
                e = Mul(e, self.catom())
            elif self.peek().isalpha() or self.peek() == "(":
                e = Mul(e, self.catom())
            else:
                return e

    def catom(self) -> CoeffExpr:
        e = self._catom()
        if self.peek() == "^":
            self.pos += 1
            k = int(self.nat())
            if k < 1:
                self.error("exponent must be positive")
            base = e
            for _ in range(k - 1):
                e = Mul(e, base)
        return e

    def _catom(self) -> CoeffExpr:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return Neg(self.catom())
        if ch == "(":
            self.pos += 1
            e = self.cadd()
            self.expect(")")
            return e
        if ch.isdigit():
            num = int(self.nat())
            if self.peek() == "/" and self.peek(1).isdigit():
                self.pos += 1
                den = int(self.nat())
                if den == 0:
                    self.error("zero denominator")
                return Num(Fraction(num, den))
            return Num(Fraction(num))
        if ch.isalpha():
            return Param(self.ident())
        self.error(f"malformed coefficient near {ch or 'end of input'!r}")


def parse(text: str, names=None) -> ParamAlgebra:
    """Parse structure-constant notation into a :class:`ParamAlgebra`."""
    p = _Parser(text)
    entries = p.algebra()
    dim = len(entries)
    for k, entry in enumerate(entries):
        for i, j, _ in entry:
            for idx in (i, j):
                if idx >= dim:
                    raise NotationError(f"index {idx + 1} in a {dim}-dimensional algebra (entry {k + 1})", text)
            if i == j:
                raise NotationError(f"repeated index in pair {i + 1}{i + 1} (entry {k + 1})", text)
    return ParamAlgebra(dim, entries, names=tuple(names) if names else None, source=text)


def parse_coeff(text: str) -> CoeffExpr:
    p = _Parser(text)
    e = p.cadd()
    if p.pos != len(p.s):
        p.error("trailing characters in coefficient")
    return e


def parse_algebra(text: str, bindings=None, check: bool = True) -> LieAlgebra:
    return parse(text).bind(bindings or {}, check=check)


# --- printing ------------------------------------------------------------------

def _pair_text(i: int, j: int, dim: int) -> str:
    if dim > 9:
        return f"[{i + 1},{j + 1}]"
    return f"{i + 1}{j + 1}"


def _format_entry(terms: dict, dim: int) -> str:
    if not terms:
        return "0"
    out = ""
    for (i, j) in sorted(terms, key=lambda t: (t[1], t[0])):
        p = terms[(i, j)]
        pair = _pair_text(i, j, dim)
        if p.is_constant():
            c = p.constant()
            sign = "-" if c < 0 else "+"
            body = pair if abs(c) == 1 else f"{abs(c)}.{pair}"
        elif len(p.terms) == 1:
            c = p.terms[0][1]
            sign = "-" if c < 0 else "+"
            body = f"{-p if c < 0 else p}.{pair}"
        else:
            sign = "+"
            body = f"({p}).{pair}"
        if not out:
            out = body if sign == "+" else "-" + body
        else:
            out += sign + body
    return out


def _join_entries(parts: list) -> str:
    out = []
    i = 0
    while i < len(parts):
        if parts[i] == "0":
            j = i
            while j < len(parts) and parts[j] == "0":
                j += 1
            run = j - i
            out.append("0" if run == 1 else f"0^{run}")
            i = j
        else:
            out.append(parts[i])
            i += 1
    return "(" + ",".join(out) + ")"


def print_algebra(a: ParamAlgebra) -> str:
    return _join_entries([_format_entry(t, a.dim) for t in a.normalized()])


def format_algebra(g: LieAlgebra) -> str:
    """Canonical notation for a bound Lie algebra (rational coefficients)."""
    parts = []
    for form in g.diff:
        terms = {}
        for (i, j), c in form.terms.items():
            # stored on (i<j); write as e^j ∧ e^i
            terms[(j, i)] = Poly.const(-Fraction(c) if not hasattr(c, "d") else -c.a)
        parts.append(_format_entry(terms, g.dim))
    return _join_entries(parts)


def to_param(g: LieAlgebra) -> ParamAlgebra:
    entries = []
    for form in g.diff:
        entries.append([(i, j, Num(Fraction(c))) for (i, j), c in sorted(form.terms.items())])
    return ParamAlgebra(g.dim, entries, names=g.names)


# --- JSON ----------------------------------------------------------------------

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["dim", "diff"],
    "properties": {
        "dim": {"type": "integer", "minimum": 0},
        "field": {"type": "object"},
        "params": {"type": "array", "items": {"type": "string"}},
        "basis_names": {"type": "array", "items": {"type": "string"}},
        "diff": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["i", "j", "coeff"],
                    "properties": {
                        "i": {"type": "integer", "minimum": 1},
                        "j": {"type": "integer", "minimum": 1},
                        "coeff": {"type": ["string", "integer", "object"]},
                    },
                },
            },
        },
    },
}


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


def to_json(a) -> dict:
    """JSON document for a ParamAlgebra (coefficients as expression strings) or LieAlgebra."""
    if isinstance(a, LieAlgebra):
        diff = [
            [{"i": i + 1, "j": j + 1, "coeff": scalar_to_json(c)} for (i, j), c in sorted(f.terms.items())]
            for f in a.diff
        ]
        return {"dim": a.dim, "field": dict(a.field), "basis_names": list(a.names), "diff": diff}
    diff = [[{"i": i + 1, "j": j + 1, "coeff": str(c)} for i, j, c in entry] for entry in a.entries]
    doc = {"dim": a.dim, "field": {"kind": "Q"}, "params": a.params, "diff": diff}
    if a.names:
        doc["basis_names"] = list(a.names)
    return doc


def from_json(doc) -> ParamAlgebra:
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        jsonschema.validate(doc, ALGEBRA_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(exc.message, _pointer(exc.absolute_path)) from None
    dim = doc["dim"]
    if len(doc["diff"]) != dim:
        raise SchemaError(f"diff has {len(doc['diff'])} entries but dim is {dim}", "/diff")
    names = doc.get("basis_names")
    if names is not None and len(names) != dim:
        raise SchemaError("basis_names length differs from dim", "/basis_names")
    entries = []
    for k, entry in enumerate(doc["diff"]):
        row = []
        for t, term in enumerate(entry):
            for key in ("i", "j"):
                if term[key] > dim:
                    raise SchemaError(f"index {term[key]} exceeds dim {dim}", f"/diff/{k}/{t}/{key}")
            c = term["coeff"]
            if isinstance(c, dict):
                val = scalar_from_json(c)
                expr = Num(val) if not getattr(val, "b", 0) else None
                if expr is None:
                    raise SchemaError("irrational structure constants are not supported", f"/diff/{k}/{t}/coeff")
                if hasattr(val, "a"):
                    expr = Num(val.a)
            else:
                try:
                    expr = parse_coeff(str(c))
                except NotationError as exc:
                    raise SchemaError(str(exc), f"/diff/{k}/{t}/coeff") from None
            row.append((term["i"] - 1, term["j"] - 1, expr))
        entries.append(row)
    return ParamAlgebra(dim, entries, names=tuple(names) if names else None)


def algebra_from_json(doc, bindings=None, check: bool = True) -> LieAlgebra:
    if isinstance(doc, str):
        doc = json.loads(doc)
    pa = from_json(doc)
    g = pa.bind(bindings or {}, check=check)
    if "field" in doc:
        g.field = dict(doc["field"])
    return g
