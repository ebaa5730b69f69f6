"""Exact univariate rational arithmetic.

Dense polynomials over Q (UniPoly) and reduced fractions of two such
polynomials (RatFunc).  Every value is immutable and kept in a canonical
form, so equality of fields is equality of functions:

  * UniPoly stores coefficients low-to-high with no trailing zeros;
  * RatFunc has gcd(num, den) = 1 and a monic denominator.

The single symbol is anonymous; a name is only supplied when rendering or
parsing text.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import (DivisionByZero, NonExactDivision, ParseError,
                     PoleAtPoint, ZeroFunction)

Scalar = Union[int, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    return Fraction(v)


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c: Scalar) -> "UniPoly":
        return UniPoly([c])

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly([0, 1])

    @staticmethod
    def monomial(c: Scalar, k: int) -> "UniPoly":
        return UniPoly([0] * k + [c])

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def scale(self, c: Scalar) -> "UniPoly":
        c = _frac(c)
        return UniPoly([a * c for a in self.coeffs])

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            top = rem[k + other.degree()]
            if top == 0:
                continue
            c = top / lead
            quo[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
        return UniPoly(quo), UniPoly(rem)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NonExactDivision("non-exact polynomial division")
        return q

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd via the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.scale(1 / a.leading())

    def __call__(self, at: Scalar) -> Fraction:
        at = _frac(at)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def root_multiplicity(self, a: Scalar) -> int:
        """Multiplicity of the root (symbol - a); 0 if not a root."""
        if self.is_zero():
            raise ZeroFunction("zero polynomial has no root multiplicity")
        m = 0
        p = self
        lin = UniPoly([-_frac(a), 1])
        while p(a) == 0:
            p = p.exact_div(lin)
            m += 1
        return m

    def __repr__(self):
        return f"UniPoly({render_unipoly(self, 'T')!r})"


ZERO = UniPoly()
ONE = UniPoly([1])


class RatFunc:
    """Reduced fraction of two UniPoly; denominator monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly = ONE, _reduced: bool = False):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = ONE
            else:
                g = num.gcd(den)
                if g.degree() > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lc = den.leading()
                if lc != 1:
                    num = num.scale(1 / lc)
                    den = den.scale(1 / lc)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c: Scalar) -> "RatFunc":
        return RatFunc(UniPoly.const(c), ONE, _reduced=True)

    @staticmethod
    def x() -> "RatFunc":
        return RatFunc(UniPoly.x(), ONE, _reduced=True)

    @staticmethod
    def from_poly(p: UniPoly) -> "RatFunc":
        return RatFunc(p, ONE, _reduced=True)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den == ONE

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(v) -> "RatFunc":
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, (int, Fraction)):
            return RatFunc.const(v)
        if isinstance(v, UniPoly):
            return RatFunc.from_poly(v)
        raise TypeError(f"cannot coerce {type(v)!r} to RatFunc")

    def __add__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    # -- analysis -----------------------------------------------------

    def multiplicity_at(self, a: Scalar) -> int:
        """Order of the linear factor (symbol - a): zeros > 0, poles < 0."""
        if self.is_zero():
            raise ZeroFunction("multiplicity of the zero function")
        return self.num.root_multiplicity(a) - self.den.root_multiplicity(a)

    def limit_at(self, a: Scalar) -> Fraction:
        """Value at `a` after cancelling removable (symbol - a) factors."""
        if self.is_zero():
            return Fraction(0)
        lin = UniPoly([-_frac(a), 1])
        num, den = self.num, self.den
        while den(a) == 0:
            if num(a) != 0:
                raise PoleAtPoint(f"pole at {a}")
            num = num.exact_div(lin)
            den = den.exact_div(lin)
        return num(a) / den(a)

    def __call__(self, a: Scalar) -> Fraction:
        d = self.den(a)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at {a}")
        return self.num(a) / d

    def __repr__(self):
        return f"RatFunc({render_ratfunc(self, 'T')!r})"


RF_ZERO = RatFunc.const(0)
RF_ONE = RatFunc.const(1)


def arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Named dispatch used by the CLI; op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------
# text serialization
# ---------------------------------------------------------------------

def _render_coeff(c: Fraction) -> str:
    return str(c)  # Fraction renders as "p/q" or "p"


def render_unipoly(p: UniPoly, symbol: str) -> str:
    """Render as e.g. "3*T^2 - 1/2*T + 5" (highest degree first)."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree(), -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _render_coeff(mag)
        else:
            var = symbol if k == 1 else f"{symbol}^{k}"
            body = var if mag == 1 else f"{_render_coeff(mag)}*{var}"
        parts.append((sign, body))
    sign0, body0 = parts[0]
    out = body0 if sign0 == "+" else f"-{body0}"
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM_RE = re.compile(
    r"^(?:(?P<coeff>\d+(?:/\d+)?)(?:\*(?P<var1>[A-Za-z_]\w*)(?:\^(?P<exp1>\d+))?)?"
    r"|(?P<var2>[A-Za-z_]\w*)(?:\^(?P<exp2>\d+))?)$"
)


def parse_unipoly(text: str, symbol: str) -> UniPoly:
    """Inverse of render_unipoly for the documented grammar."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    s = s.replace("-", "+-")
    chunks = [c.strip() for c in s.split("+")]
    coeffs: dict[int, Fraction] = {}
    for chunk in chunks:
        if not chunk:
            continue
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:].strip()
        m = _TERM_RE.match(chunk)
        if not m:
            raise ParseError(f"bad term {chunk!r}")
        if m.group("var2") is not None:
            var, exp, coeff = m.group("var2"), m.group("exp2"), Fraction(1)
        else:
            coeff = Fraction(m.group("coeff"))
            var, exp = m.group("var1"), m.group("exp1")
        if var is not None and var != symbol:
            raise ParseError(f"unexpected symbol {var!r} (want {symbol!r})")
        k = 0 if var is None else (1 if exp is None else int(exp))
        coeffs[k] = coeffs.get(k, Fraction(0)) + (-coeff if neg else coeff)
    deg = max(coeffs) if coeffs else 0
    return UniPoly([coeffs.get(k, Fraction(0)) for k in range(deg + 1)])


def render_ratfunc(f: RatFunc, symbol: str) -> str:
    if f.den == ONE:
        return render_unipoly(f.num, symbol)
    return f"({render_unipoly(f.num, symbol)}) / ({render_unipoly(f.den, symbol)})"


def parse_ratfunc(text: str, symbol: str) -> RatFunc:
    s = text.strip()
    m = re.match(r"^\((?P<num>.*)\)\s*/\s*\((?P<den>.*)\)$", s)
    if m:
        return RatFunc(parse_unipoly(m.group("num"), symbol),
                       parse_unipoly(m.group("den"), symbol))
    return RatFunc.from_poly(parse_unipoly(s, symbol))
