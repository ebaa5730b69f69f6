"""Symmetric polynomials in n variables over a pluggable coefficient field.

SymPoly is a finitely supported map from length-n partitions to
coefficients, read in the monomial-symmetric basis {m_lambda}.  MultiPoly
is the non-symmetric workspace: a map from exponent vectors to
coefficients.  Coefficients are Fraction (field "none") or RatFunc in a
single named symbol ("theta", "q", ...).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .errors import BadPattern, NotSymmetric
from .patterns import IdealSpec
from .ratfunc import RatFunc, UniPoly, parse_unipoly, render_unipoly

# ---------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------


class CoeffField:
    symbol: Optional[str] = None

    def coerce(self, v):
        raise NotImplementedError

    def is_zero(self, c) -> bool:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, CoeffField) and self.symbol == other.symbol

    def __hash__(self):
        return hash(self.symbol)

    def __repr__(self):
        return f"CoeffField({self.symbol!r})"


class RationalField(CoeffField):
    symbol = None
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, RatFunc) and v.is_constant():
            return v.as_fraction()
        raise TypeError(f"cannot coerce {v!r} into Q")

    def is_zero(self, c) -> bool:
        return c == 0


class FunctionField(CoeffField):
    def __init__(self, symbol: str):
        self.symbol = symbol
        self.zero = RatFunc.const(0)
        self.one = RatFunc.const(1)

    def coerce(self, v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, UniPoly):
            return RatFunc.from_poly(v)
        if isinstance(v, (int, Fraction)):
            return RatFunc.const(v)
        raise TypeError(f"cannot coerce {v!r} into Q({self.symbol})")

    def is_zero(self, c) -> bool:
        return c.is_zero()


QQ = RationalField()
QTHETA = FunctionField("theta")
QQ_Q = FunctionField("q")


# ---------------------------------------------------------------------
# multiset permutations
# ---------------------------------------------------------------------

def distinct_permutations(seq: tuple) -> Iterator[tuple]:
    """All distinct permutations of a multiset, without repetition."""
    items = sorted(seq, reverse=True)
    n = len(items)
    out = []

    def rec(remaining: list, prefix: list):
        if not remaining:
            out.append(tuple(prefix))
            return
        seen = set()
        for idx, v in enumerate(remaining):
            if v in seen:
                continue
            seen.add(v)
            rec(remaining[:idx] + remaining[idx + 1:], prefix + [v])

    rec(items, [])
    return iter(out)


# ---------------------------------------------------------------------
# MultiPoly
# ---------------------------------------------------------------------

class MultiPoly:
    """Sparse polynomial in `nvars` variables; terms: exponent tuple -> coeff."""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars: int, field: CoeffField, terms: Optional[dict] = None):
        self.nvars = nvars
        self.field = field
        self.terms = {} if terms is None else terms

    @staticmethod
    def zero(nvars: int, field: CoeffField) -> "MultiPoly":
        return MultiPoly(nvars, field)

    @staticmethod
    def constant(nvars: int, field: CoeffField, c) -> "MultiPoly":
        c = field.coerce(c)
        t = {} if field.is_zero(c) else {(0,) * nvars: c}
        return MultiPoly(nvars, field, t)

    def copy(self) -> "MultiPoly":
        return MultiPoly(self.nvars, self.field, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, exp: tuple, c):
        cur = self.terms.get(exp)
        new = c if cur is None else cur + c
        if self.field.is_zero(new):
            self.terms.pop(exp, None)
        else:
            self.terms[exp] = new

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = self.copy()
        for exp, c in other.terms.items():
            out.add_term(exp, c)
        return out

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        out = self.copy()
        for exp, c in other.terms.items():
            out.add_term(exp, -c)
        return out

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out = MultiPoly(self.nvars, self.field)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out.add_term(exp, c1 * c2)
        return out

    def scale(self, c) -> "MultiPoly":
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return MultiPoly(self.nvars, self.field)
        return MultiPoly(self.nvars, self.field,
                         {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def evaluate(self, point: list):
        """Exact evaluation; point entries live in the coefficient field."""
        field = self.field
        point = [field.coerce(p) for p in point]
        powers: dict[tuple, object] = {}

        def pw(i, k):
            if k == 0:
                return field.one
            key = (i, k)
            if key not in powers:
                powers[key] = pw(i, k - 1) * point[i]
            return powers[key]

        acc = field.zero
        for exp, c in self.terms.items():
            term = c
            for i, k in enumerate(exp):
                if k:
                    term = term * pw(i, k)
            acc = acc + term
        return acc

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __repr__(self):
        return f"MultiPoly(nvars={self.nvars}, terms={len(self.terms)})"


def derivative(mp: MultiPoly, i: int) -> MultiPoly:
    out = MultiPoly(mp.nvars, mp.field)
    for exp, c in mp.terms.items():
        k = exp[i]
        if k == 0:
            continue
        e = list(exp)
        e[i] = k - 1
        out.add_term(tuple(e), c * k)
    return out


def shift_variable(mp: MultiPoly, i: int, delta) -> MultiPoly:
    """Substitute x_i -> x_i + delta (binomial expansion)."""
    field = mp.field
    delta = field.coerce(delta)
    out = MultiPoly(mp.nvars, field)
    from math import comb
    for exp, c in mp.terms.items():
        k = exp[i]
        if k == 0:
            out.add_term(exp, c)
            continue
        dpow = field.one
        for r in range(0, k + 1):
            # term x_i^(k-r) * C(k,r) * delta^r
            e = list(exp)
            e[i] = k - r
            out.add_term(tuple(e), c * (comb(k, r) * dpow))
            dpow = dpow * delta
    return out


def divide_linear(mp: MultiPoly, i: int, j: int, c=1) -> MultiPoly:
    """Exact division by (x_i - c*x_j); raises NotSymmetric-free AssertionError
    replaced by BadPattern when the division is not exact."""
    field = mp.field
    c = field.coerce(c)
    groups: dict[tuple, dict[int, object]] = {}
    for exp, v in mp.terms.items():
        rest = tuple(e for k, e in enumerate(exp) if k not in (i, j))
        key = (rest, exp[i] + exp[j])
        groups.setdefault(key, {})[exp[i]] = v
    out = MultiPoly(mp.nvars, field)
    for (rest, total), poly in groups.items():
        # divide sum_k p_k u^k v^(total-k) by (u - c v), u = x_i, v = x_j
        q_prev = field.zero  # q_k for the degree above
        for k in range(total, 0, -1):
            p_k = poly.get(k, field.zero)
            q = p_k + c * q_prev
            if not field.is_zero(q):
                exp = list(rest)
                exp.insert(min(i, j), 0)
                exp.insert(max(i, j), 0)
                exp[i] = k - 1
                exp[j] = total - k
                out.add_term(tuple(exp), q)
            q_prev = q
        rem = poly.get(0, field.zero) + c * q_prev
        if not field.is_zero(rem):
            raise BadPattern(f"division by (x_{i} - {c}*x_{j}) not exact")
    return out


# ---------------------------------------------------------------------
# SymPoly
# ---------------------------------------------------------------------

class SymPoly:
    """Symmetric polynomial in the monomial basis: partition -> coefficient."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: CoeffField, terms: Optional[dict] = None):
        self.n = n
        self.field = field
        self.terms = {} if terms is None else terms

    @staticmethod
    def zero(n: int, field: CoeffField) -> "SymPoly":
        return SymPoly(n, field)

    @staticmethod
    def monomial(lam, n: int, field: CoeffField, c=1) -> "SymPoly":
        lam = tuple(lam)
        if len(lam) != n:
            raise ValueError(f"partition {lam} has length != {n}")
        c = field.coerce(c)
        return SymPoly(n, field, {} if field.is_zero(c) else {lam: c})

    @staticmethod
    def one(n: int, field: CoeffField) -> "SymPoly":
        return SymPoly.monomial((0,) * n, n, field)

    def copy(self) -> "SymPoly":
        return SymPoly(self.n, self.field, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam):
        return self.terms.get(tuple(lam), self.field.zero)

    def add_term(self, lam: tuple, c):
        cur = self.terms.get(lam)
        new = c if cur is None else cur + c
        if self.field.is_zero(new):
            self.terms.pop(lam, None)
        else:
            self.terms[lam] = new

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check_compat(other)
        out = self.copy()
        for lam, c in other.terms.items():
            out.add_term(lam, c)
        return out

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        self._check_compat(other)
        out = self.copy()
        for lam, c in other.terms.items():
            out.add_term(lam, -c)
        return out

    def scale(self, c) -> "SymPoly":
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return SymPoly(self.n, self.field)
        return SymPoly(self.n, self.field,
                       {lam: v * c for lam, v in self.terms.items()})

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        self._check_compat(other)
        prod = expand(self) * expand(other)
        return collect(prod, check=False)

    def __eq__(self, other):
        return (isinstance(other, SymPoly) and self.n == other.n
                and self.terms == other.terms)

    def _check_compat(self, other: "SymPoly"):
        if self.n != other.n or self.field != other.field:
            raise ValueError("incompatible symmetric polynomials")

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(lam) for lam in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(lam) for lam in self.terms}) <= 1

    def map_coefficients(self, fn, field: Optional[CoeffField] = None) -> "SymPoly":
        field = field or self.field
        out = SymPoly(self.n, field)
        for lam, c in self.terms.items():
            out.add_term(lam, field.coerce(fn(c)))
        return out

    def __repr__(self):
        return f"SymPoly(n={self.n}, terms={len(self.terms)})"


# ---------------------------------------------------------------------
# expand / collect / symmetrize
# ---------------------------------------------------------------------

def expand(f: SymPoly) -> MultiPoly:
    """Write f out monomial by monomial (each m_lambda as the sum over the
    distinct permutations of lambda)."""
    out = MultiPoly(f.n, f.field)
    for lam, c in f.terms.items():
        for exp in distinct_permutations(lam):
            out.add_term(exp, c)
    return out


def collect(mp: MultiPoly, check: bool = True) -> SymPoly:
    """Inverse of expand; raises NotSymmetric when mp is not invariant
    under variable swaps (only when check=True)."""
    field = mp.field
    out = SymPoly(mp.nvars, field)
    seen = set()
    for exp, c in mp.terms.items():
        lam = tuple(sorted(exp, reverse=True))
        if lam in seen:
            continue
        seen.add(lam)
        if check:
            for perm in distinct_permutations(lam):
                if mp.terms.get(perm) != c:
                    raise NotSymmetric(f"coefficient mismatch on orbit of {lam}")
        out.add_term(lam, c)
    return out


def symmetrize(mp: MultiPoly) -> SymPoly:
    """Sum of mp over all n! variable permutations, in the m-basis
    (no 1/n! normalization)."""
    from itertools import permutations
    n = mp.nvars
    acc = MultiPoly(n, mp.field)
    for sigma in permutations(range(n)):
        for exp, c in mp.terms.items():
            out_exp = tuple(exp[sigma[k]] for k in range(n))
            acc.add_term(out_exp, c)
    return collect(acc, check=True)


# ---------------------------------------------------------------------
# elementary symmetric polynomials and the e-basis
# ---------------------------------------------------------------------

def elementary(k: int, n: int, field: CoeffField = QQ) -> SymPoly:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    lam = (1,) * k + (0,) * (n - k)
    return SymPoly.monomial(lam, n, field)


_E_PRODUCT_CACHE: dict[tuple, dict] = {}


def _e_product_expansion(eparts: tuple, n: int) -> dict:
    """m-basis expansion (integer coefficients) of prod_j e_{eparts[j]}."""
    key = (n, eparts)
    if key not in _E_PRODUCT_CACHE:
        f = SymPoly.one(n, QQ)
        for k in eparts:
            f = f * elementary(k, n, QQ)
        _E_PRODUCT_CACHE[key] = dict(f.terms)
    return _E_PRODUCT_CACHE[key]


def e_monomial(eparts, n: int, field: CoeffField = QQ) -> SymPoly:
    """The product e_{k1} e_{k2} ... for eparts = (k1, k2, ...)."""
    eparts = tuple(sorted((k for k in eparts if k > 0), reverse=True))
    exp = _e_product_expansion(eparts, n)
    out = SymPoly(n, field)
    for lam, c in exp.items():
        out.add_term(lam, field.coerce(c))
    return out


def to_elementary_basis(f: SymPoly) -> dict:
    """Expansion of f as a combination of products of elementary symmetric
    polynomials; keys are tuples of e-indices sorted descending."""
    from .partitions import conjugate
    out: dict[tuple, object] = {}
    rest = f.copy()
    guard = 0
    while not rest.is_zero():
        guard += 1
        if guard > 100000:
            raise RuntimeError("e-basis conversion did not terminate")
        # lex-max partition of maximal weight is dominance-maximal there
        wmax = rest.degree()
        lam = max(k for k in rest.terms if sum(k) == wmax)
        c = rest.terms[lam]
        key = conjugate(lam)
        out[key] = out.get(key, f.field.zero) + c
        rest = rest - e_monomial(key, f.n, f.field).scale(c)
    return {k: v for k, v in out.items() if not f.field.is_zero(v)}


def from_elementary_basis(expansion: dict, n: int, field: CoeffField) -> SymPoly:
    out = SymPoly(n, field)
    for eparts, c in expansion.items():
        out = out + e_monomial(eparts, n, field).scale(c)
    return out


_EK_M_CACHE: dict[tuple, dict] = {}


def _ek_times_m(k: int, lam: tuple, n: int) -> dict:
    """m-basis expansion (integer coefficients) of e_k * m_lambda."""
    key = (n, k, lam)
    if key not in _EK_M_CACHE:
        prod = expand(SymPoly.monomial(lam, n, QQ)) * expand(elementary(k, n, QQ))
        _EK_M_CACHE[key] = dict(collect(prod, check=False).terms)
    return _EK_M_CACHE[key]


def multiply_by_elementary(f: SymPoly, k: int) -> SymPoly:
    """e_k * f, using cached e_k * m_lambda expansions."""
    out = SymPoly(f.n, f.field)
    for lam, c in f.terms.items():
        for mu, m in _ek_times_m(k, lam, f.n).items():
            out.add_term(mu, c * m)
    return out


# ---------------------------------------------------------------------
# evaluation and pattern substitution
# ---------------------------------------------------------------------

def evaluate(f: SymPoly, point: list):
    """Exact evaluation of f at a point with entries in the coefficient
    field."""
    if len(point) != f.n:
        raise ValueError("point length mismatch")
    return expand(f).evaluate(point)


def substitute_pattern(f: SymPoly, spec: IdealSpec) -> MultiPoly:
    """Apply the coincidence substitution of `spec` to f; the result lives
    in the surviving free variables.  f is in the corresponding ideal iff
    the result is identically zero."""
    n = f.n
    if spec.n != n:
        raise BadPattern(f"pattern n={spec.n} != polynomial n={n}")
    field = f.field
    mp = expand(f)
    if spec.kind in ("double", "double_t"):
        # x1,x2 -> u (x2 picking up t0), x3,x4 -> v; out vars (u, v, x5..xn)
        t0 = field.one if spec.kind == "double" else field.coerce(spec.t0)
        out = MultiPoly(n - 2, field)
        for exp, c in mp.terms.items():
            mult = c
            for e in (exp[1], exp[3]):
                for _ in range(e):
                    mult = mult * t0
            oe = (exp[0] + exp[1], exp[2] + exp[3]) + exp[4:]
            out.add_term(oe, mult)
        return out
    if spec.kind == "double_shift":
        # x2 -> x1 + shift, x4 -> x3 + shift; then merge pairs
        shifted = shift_variable(mp, 1, spec.shift)
        shifted = shift_variable(shifted, 3, spec.shift)
        # now substitute x2 -> x1, x4 -> x3 (the shift already applied to
        # the pair partner via renaming below)
        out = MultiPoly(n - 2, field)
        for exp, c in shifted.terms.items():
            oe = (exp[0] + exp[1], exp[2] + exp[3]) + exp[4:]
            out.add_term(oe, c)
        return out
    if spec.kind == "pfold":
        p = spec.p
        out = MultiPoly(n - p + 1, field)
        for exp, c in mp.terms.items():
            oe = (sum(exp[:p]),) + exp[p:]
            out.add_term(oe, c)
        return out
    raise BadPattern(f"unknown pattern kind {spec.kind!r}")


# ---------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------

def _coeff_to_json(c, symbol: Optional[str]) -> tuple[str, str]:
    if symbol is None:
        fr = Fraction(c)
        return str(fr.numerator), str(fr.denominator)
    return (render_unipoly(c.num, symbol), render_unipoly(c.den, symbol))


def _coeff_from_json(num: str, den: str, symbol: Optional[str]):
    if symbol is None:
        return Fraction(int(num), int(den))
    return RatFunc(parse_unipoly(num, symbol), parse_unipoly(den, symbol))


def to_json_dict(f: SymPoly, extra: Optional[dict] = None) -> dict:
    symbol = f.field.symbol
    doc = {
        "schema": 1,
        "n": f.n,
        "symbol": symbol if symbol is not None else "none",
        "inhomogeneous": not f.is_homogeneous(),
        "terms": [
            {
                "partition": list(lam),
                "num": _coeff_to_json(c, symbol)[0],
                "den": _coeff_to_json(c, symbol)[1],
            }
            for lam, c in sorted(f.terms.items(), reverse=True)
        ],
    }
    if extra:
        doc.update(extra)
    return doc


def from_json_dict(doc: dict) -> SymPoly:
    symbol = doc["symbol"]
    if symbol == "none":
        field: CoeffField = QQ
        sym = None
    else:
        field = FunctionField(symbol)
        sym = symbol
    f = SymPoly(doc["n"], field)
    for t in doc["terms"]:
        f.add_term(tuple(t["partition"]), _coeff_from_json(t["num"], t["den"], sym))
    return f
