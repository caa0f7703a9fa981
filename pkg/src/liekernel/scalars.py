"""Exact scalars: rationals, elements of Q(sqrt d), and symbolic coefficients.

Rationals are plain :class:`fractions.Fraction` values.  ``QuadScalar``
models ``a + b*sqrt(d)`` for a fixed square-free non-square integer ``d``
and interoperates with ints and Fractions (which embed with ``b = 0``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction, "QuadScalar"]


class FieldMismatchError(ValueError):
    """Raised when two quadratic scalars over different fields are combined."""


class UnboundParameterError(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unbound parameter {self.name!r}"


def _squarefree_nonsquare(d: int) -> bool:
    if d in (0, 1):
        return False
    m = abs(d)
    k = 2
    while k * k <= m:
        if m % (k * k) == 0:
            return False
        k += 1
    return True


class QuadScalar:
    """An element ``a + b*sqrt(d)`` of the quadratic field Q(sqrt d)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 3):
        if not _squarefree_nonsquare(d):
            raise ValueError(f"d={d} must be a square-free non-square integer")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    @classmethod
    def sqrt(cls, d: int) -> QuadScalar:
        return cls(0, 1, d)

    def _coerce(self, other) -> QuadScalar | None:
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                raise FieldMismatchError(f"Q(sqrt {self.d}) vs Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(
            self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d
        )

    __rmul__ = __mul__

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(d) (d > 0)."""
        if self.d < 0:
            raise ValueError("sign is only defined for real quadratic fields")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa * sb >= 0:
            return sa or sb
        return sa if self.a * self.a > self.d * self.b * self.b else sb

    def conjugate(self) -> QuadScalar:
        return QuadScalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadScalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QuadScalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadScalar(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadScalar):
            if self.d != other.d:
                return not self and not other
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self) -> str:
        return f"QuadScalar({self.a}, {self.b}, d={self.d})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        if self.a == 0:
            return f"{self.b}*{root}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*{root}"


def field_ops(x: QuadScalar, y: QuadScalar, op: str) -> QuadScalar:
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two field elements."""
    if not isinstance(x, QuadScalar):
        raise TypeError("x must be a QuadScalar")
    fns = {
        "add": lambda: x + y,
        "sub": lambda: x - y,
        "mul": lambda: x * y,
        "div": lambda: x / y,
    }
    if op not in fns:
        raise ValueError(f"unknown op {op!r}")
    if isinstance(y, QuadScalar) and y.d != x.d:
        raise FieldMismatchError(f"Q(sqrt {x.d}) vs Q(sqrt {y.d})")
    return fns[op]()


def is_zero(x) -> bool:
    return not x


def to_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (or pass through ints/Fractions)."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


def scalar_to_json(x):
    if isinstance(x, QuadScalar):
        if x.b == 0:
            return str(x.a)
        return {"a": str(x.a), "b": str(x.b), "d": x.d}
    return str(Fraction(x))


def scalar_from_json(doc):
    if isinstance(doc, dict):
        return QuadScalar(to_rational(doc["a"]), to_rational(doc["b"]), int(doc["d"]))
    return to_rational(doc)


def lcm_denominator(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out


# --- symbolic coefficients -------------------------------------------------

Monomial = tuple  # sorted tuple of (name, exponent)


@dataclass(frozen=True)
class Poly:
    """A polynomial with rational coefficients in named parameters."""

    terms: tuple  # sorted tuple of (Monomial, Fraction), nonzero coefficients

    @classmethod
    def from_dict(cls, d: Mapping) -> Poly:
        return cls(tuple(sorted((m, Fraction(c)) for m, c in d.items() if c != 0)))

    @classmethod
    def const(cls, c) -> Poly:
        return cls.from_dict({(): Fraction(c)})

    @classmethod
    def var(cls, name: str) -> Poly:
        return cls.from_dict({((name, 1),): Fraction(1)})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: Poly) -> Poly:
        out = self.as_dict()
        for m, c in other.terms:
            out[m] = out.get(m, 0) + c
        return Poly.from_dict(out)

    def __neg__(self) -> Poly:
        return Poly(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        out: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                exps = dict(m1)
                for name, e in m2:
                    exps[name] = exps.get(name, 0) + e
                m = tuple(sorted(exps.items()))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly.from_dict(out)

    def is_constant(self) -> bool:
        return all(m == () for m, _ in self.terms)

    def constant(self) -> Fraction:
        return self.as_dict().get((), Fraction(0))

    def params(self) -> set:
        return {name for m, _ in self.terms for name, _ in m}

    def evaluate(self, bindings: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms:
            v = c
            for name, e in m:
                if name not in bindings:
                    raise UnboundParameterError(name)
                v *= Fraction(bindings[name]) ** e
            total += v
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            mono = "*".join(name if e == 1 else f"{name}^{e}" for name, e in m)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += sign + body
        return text


class CoeffExpr:
    """Expression tree over rationals and named parameters."""

    def evaluate(self, bindings: Mapping[str, Fraction] | None = None) -> Fraction:
        raise NotImplementedError

    def params(self) -> set:
        raise NotImplementedError

    def to_poly(self) -> Poly:
        raise NotImplementedError

    def __add__(self, other):
        return Add(self, _expr(other))

    def __radd__(self, other):
        return Add(_expr(other), self)

    def __sub__(self, other):
        return Sub(self, _expr(other))

    def __rsub__(self, other):
        return Sub(_expr(other), self)

    def __mul__(self, other):
        return Mul(self, _expr(other))

    def __rmul__(self, other):
        return Mul(_expr(other), self)

    def __neg__(self):
        return Neg(self)


def _expr(x) -> CoeffExpr:
    if isinstance(x, CoeffExpr):
        return x
    return Num(Fraction(x))


@dataclass(frozen=True, eq=False)
class Num(CoeffExpr):
    value: Fraction

    def evaluate(self, bindings=None):
        return Fraction(self.value)

    def params(self):
        return set()

    def to_poly(self):
        return Poly.const(self.value)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, eq=False)
class Param(CoeffExpr):
    name: str

    def evaluate(self, bindings=None):
        bindings = bindings or {}
        if self.name not in bindings:
            raise UnboundParameterError(self.name)
        return Fraction(bindings[self.name])

    def params(self):
        return {self.name}

    def to_poly(self):
        return Poly.var(self.name)

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=False)
class _Binary(CoeffExpr):
    left: CoeffExpr
    right: CoeffExpr

    def params(self):
        return self.left.params() | self.right.params()


class Add(_Binary):
    def evaluate(self, bindings=None):
        return self.left.evaluate(bindings) + self.right.evaluate(bindings)

    def to_poly(self):
        return self.left.to_poly() + self.right.to_poly()

    def __str__(self):
        return f"({self.left}+{self.right})"


class Sub(_Binary):
    def evaluate(self, bindings=None):
        return self.left.evaluate(bindings) - self.right.evaluate(bindings)

    def to_poly(self):
        return self.left.to_poly() - self.right.to_poly()

    def __str__(self):
        return f"({self.left}-{self.right})"


class Mul(_Binary):
    def evaluate(self, bindings=None):
        return self.left.evaluate(bindings) * self.right.evaluate(bindings)

    def to_poly(self):
        return self.left.to_poly() * self.right.to_poly()

    def __str__(self):
        return f"{self.left}*{self.right}"


@dataclass(frozen=True, eq=False)
class Neg(CoeffExpr):
    inner: CoeffExpr

    def evaluate(self, bindings=None):
        return -self.inner.evaluate(bindings)

    def params(self):
        return self.inner.params()

    def to_poly(self):
        return -self.inner.to_poly()

    def __str__(self):
        return f"-{self.inner}"


def eval_coeff(e: CoeffExpr, bindings: Mapping[str, Fraction] | None = None) -> Fraction:
    """Evaluate ``e`` exactly; raises :class:`UnboundParameterError` naming a free parameter."""
    return e.evaluate(bindings or {})
