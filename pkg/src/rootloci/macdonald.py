"""Macdonald polynomials with generic rational t0 and symbolic q.

Two-parameter (q,t) arithmetic is avoided: t is pinned to a generic
rational t0 and q stays symbolic, so all coefficients live in Q(q).
Genericity is certified per solve (no eigenvalue collisions among
dominance-comparable partitions) and, in the test suite, by re-running
boolean checks at several independent t0.

The polynomial is the monic triangular eigenvector of the first
Macdonald difference operator

    D f = sum_i [ prod_{j != i} (t x_i - x_j)/(x_i - x_j) ] (f with x_i -> q x_i)

with eigenvalue sum_i t^{n-i} q^{lam_i}.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

from . import partitions as pt
from .errors import GenericityFailure, NeitherStructure, NonExactDivision, PoleAtPoint
from .linalg import solve_exact
from .patterns import double_t_diagonal
from .ratfunc import RatFunc, UniPoly
from .sympoly import (QQ, QQ_Q, CoeffField, MultiPoly, SymPoly, collect,
                      divide_linear, expand, substitute_pattern)

Q_SYM = RatFunc.x()


def _q_monomial(k: int) -> RatFunc:
    return RatFunc.from_poly(UniPoly.monomial(1, k))


# ---------------------------------------------------------------------
# the difference operator
# ---------------------------------------------------------------------

def _linear_factor(nvars: int, field: CoeffField, ci, i: int, cj, j: int) -> MultiPoly:
    """ci*x_i + cj*x_j as a MultiPoly."""
    out = MultiPoly(nvars, field)
    ei = [0] * nvars
    ei[i] = 1
    out.add_term(tuple(ei), field.coerce(ci))
    ej = [0] * nvars
    ej[j] = 1
    out.add_term(tuple(ej), field.coerce(cj))
    return out


def apply_macdonald_operator(f: SymPoly, t0: Fraction,
                             qmul: Optional[Callable] = None) -> SymPoly:
    """Apply the first Macdonald operator to f exactly.

    `qmul(coeff, k)` implements multiplication by q^k on coefficients; by
    default q is the symbol of f's field (which must then be a function
    field).  Passing qmul with rational coefficients evaluates the
    operator at a numeric q.
    """
    n = f.n
    field = f.field
    t0 = Fraction(t0)
    if qmul is None:
        sym_q = _q_monomial
        qmul = lambda c, k: c * sym_q(k)
    mp = expand(f)
    acc = MultiPoly(n, field)
    for i in range(n):
        # f with x_i -> q x_i
        shifted = MultiPoly(n, field)
        for exp, c in mp.terms.items():
            shifted.add_term(exp, qmul(c, exp[i]))
        # prod_{j != i} (t0 x_i - x_j)
        num = MultiPoly.constant(n, field, 1)
        for j in range(n):
            if j != i:
                num = num * _linear_factor(n, field, t0, i, -1, j)
        # Vandermonde on the variables other than i
        vi = MultiPoly.constant(n, field, 1)
        for k in range(n):
            for l in range(k + 1, n):
                if k != i and l != i:
                    vi = vi * _linear_factor(n, field, 1, k, -1, l)
        sign = 1 if i % 2 == 0 else -1
        acc = acc + (num * shifted * vi).scale(sign)
    # divide by the full Vandermonde
    try:
        for k in range(n):
            for l in range(k + 1, n):
                acc = divide_linear(acc, k, l, 1)
    except Exception as exc:
        raise NonExactDivision("Vandermonde division failed") from exc
    return collect(acc, check=False)


_MAC_ACTION_CACHE: dict[tuple, dict] = {}


def _mac_action(mu: tuple, n: int, t0: Fraction) -> dict:
    """m-basis expansion of D m_mu over Q(q)."""
    key = (n, t0, mu)
    if key not in _MAC_ACTION_CACHE:
        res = apply_macdonald_operator(SymPoly.monomial(mu, n, QQ_Q), t0)
        _MAC_ACTION_CACHE[key] = dict(res.terms)
    return _MAC_ACTION_CACHE[key]


def mac_eigenvalue(mu: tuple, n: int, t0: Fraction) -> RatFunc:
    """sum_i t0^{n-i} q^{mu_i} as a polynomial in q."""
    coeffs: dict[int, Fraction] = {}
    for i, m in enumerate(mu, start=1):
        coeffs[m] = coeffs.get(m, Fraction(0)) + Fraction(t0) ** (n - i)
    deg = max(coeffs)
    return RatFunc.from_poly(
        UniPoly([coeffs.get(k, Fraction(0)) for k in range(deg + 1)]))


_MAC_CACHE: dict[tuple, SymPoly] = {}


def macdonald(lam, n: int, t0) -> SymPoly:
    """Monic Macdonald polynomial P_lambda(x; q, t0) in the m-basis."""
    lam = pt.check_partition(tuple(lam))
    t0 = Fraction(t0)
    key = (n, t0, lam)
    if key in _MAC_CACHE:
        return _MAC_CACHE[key]
    d = sum(lam)
    elam = mac_eigenvalue(lam, n, t0)
    order = [mu for mu in pt.enumerate_partitions(n, d) if pt.dominated_by(mu, lam)]
    # genericity: distinct eigenvalue polynomials on every comparable pair
    for mu in order:
        if mu != lam and mac_eigenvalue(mu, n, t0) == elam:
            raise GenericityFailure(
                f"eigenvalue collision {lam} vs {mu} at t0={t0}")
    coeffs: dict[tuple, RatFunc] = {lam: RatFunc.const(1)}
    for mu in order:
        if mu == lam:
            continue
        acc = RatFunc.const(0)
        for nu, c in list(coeffs.items()):
            entry = _mac_action(nu, n, t0).get(mu)
            if entry is not None and nu != mu:
                acc = acc + c * entry
        denom = elam - mac_eigenvalue(mu, n, t0)
        c = acc / denom
        if not c.is_zero():
            coeffs[mu] = c
    out = SymPoly(n, QQ_Q, coeffs)
    _MAC_CACHE[key] = out
    return out


# ---------------------------------------------------------------------
# principal specialization and the zero/pole count
# ---------------------------------------------------------------------

def u0_formal_factors(lam, n: int) -> tuple[int, list, list]:
    """Formal (t,q)-exponent data of the principal specialization:
    (n(lam), numerator (K,A) pairs for 1 - t^K q^A, denominator pairs)."""
    lam = tuple(lam)
    conj = pt.conjugate(lam)
    num, den = [], []
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            num.append((n - (i - 1), j - 1))
            den.append((conj[j - 1] - i + 1, p - j))
    return pt.n_stat(lam), num, den


def principal_specialization(lam, n: int, t0) -> RatFunc:
    """u0(P_lambda) with t = t0 substituted, as a rational function of q."""
    t0 = Fraction(t0)
    nstat, num_pairs, den_pairs = u0_formal_factors(lam, n)
    num = RatFunc.const(t0 ** nstat)
    for K, A in num_pairs:
        num = num * (RatFunc.const(1) - RatFunc.const(t0 ** K) * _q_monomial(A))
    den = RatFunc.const(1)
    for K, A in den_pairs:
        den = den * (RatFunc.const(1) - RatFunc.const(t0 ** K) * _q_monomial(A))
    return num / den


def zeta_u0(lam, n: int) -> int:
    """Multiplicity of the factor 1 - t^2 q in u0(P_lambda), read off the
    formal product: factors 1 - t^K q^A with K = 2A, A >= 1."""
    _, num_pairs, den_pairs = u0_formal_factors(lam, n)
    plus = sum(1 for K, A in num_pairs if A >= 1 and K == 2 * A)
    minus = sum(1 for K, A in den_pairs if A >= 1 and K == 2 * A)
    return plus - minus


# ---------------------------------------------------------------------
# modified polynomials and specialization at q = t0^{-2}
# ---------------------------------------------------------------------

def modified_macdonald(lam, n: int, t0) -> SymPoly:
    lam = tuple(lam)
    t0 = Fraction(t0)
    tag = pt.classify(lam)  # raises NotAdmissible
    if tag.case is pt.Case.C:
        return macdonald(lam, n, t0)
    nu = tag.companion
    ratio = principal_specialization(lam, n, t0) / principal_specialization(nu, n, t0)
    return macdonald(lam, n, t0) - macdonald(nu, n, t0).scale(ratio)


def specialize_q(f: SymPoly, q0) -> SymPoly:
    """Coefficient-wise limit at q = q0; refuses poles."""
    q0 = Fraction(q0)
    out = SymPoly(f.n, QQ)
    for mu, c in f.terms.items():
        try:
            v = c.limit_at(q0)
        except PoleAtPoint as exc:
            raise PoleAtPoint(
                f"coefficient of m_{mu} has a pole at q={q0}") from exc
        out.add_term(mu, v)
    return out


def coefficient_pole_orders(f: SymPoly, q0) -> dict:
    """Multiplicity of (q - q0) in each coefficient (negative = pole)."""
    q0 = Fraction(q0)
    return {mu: c.multiplicity_at(q0) for mu, c in f.terms.items()}


def vanishes_on_t_diagonals(f: SymPoly, t0) -> bool:
    """Exact check of the double t-diagonal zero condition for a
    rational-coefficient polynomial."""
    return substitute_pattern(f, double_t_diagonal(f.n, t0)).is_zero()


# ---------------------------------------------------------------------
# evaluation homomorphisms and the symmetry relation
# ---------------------------------------------------------------------

def eval_point(mu, n: int, t0) -> list[RatFunc]:
    """The point (t0^{n-1} q^{mu_1}, ..., q^{mu_n})."""
    t0 = Fraction(t0)
    return [RatFunc.const(t0 ** (n - i)) * _q_monomial(m)
            for i, m in enumerate(mu, start=1)]


def u_eval(f: SymPoly, mu, t0) -> RatFunc:
    from .sympoly import evaluate
    return evaluate(f, eval_point(mu, f.n, t0))


def symmetry_check(lam, mu, n: int, t0) -> bool:
    """u_mu(P_lam)/u_0(P_lam) == u_lam(P_mu)/u_0(P_mu) in Q(q)."""
    zero = (0,) * n
    plam = macdonald(lam, n, t0)
    pmu = macdonald(mu, n, t0)
    lhs = u_eval(plam, mu, t0) / u_eval(plam, zero, t0)
    rhs = u_eval(pmu, lam, t0) / u_eval(pmu, zero, t0)
    return lhs == rhs


# ---------------------------------------------------------------------
# divisibility and operator structure at the special point
# ---------------------------------------------------------------------

def divisible_by_double_product(f: SymPoly, t0) -> bool:
    """Is f (rational coefficients) divisible by
    prod_{i<j} (x_i - t0 x_j)(t0 x_i - x_j)?"""
    t0 = Fraction(t0)
    mp = expand(f)
    try:
        for i in range(f.n):
            for j in range(i + 1, f.n):
                mp = divide_linear(mp, i, j, t0)
                mp = divide_linear(mp, j, i, t0)
    except Exception:
        return False
    return True


def operator_structure(lam, n: int, t0) -> tuple[str, Optional[tuple]]:
    """Eigen / Jordan-block structure of the modified polynomial under the
    Macdonald operator at q = t0^{-2}.

    Returns ("Eigen", None) or ("JordanBlock", nu)."""
    t0 = Fraction(t0)
    q0 = 1 / t0 ** 2
    tag = pt.classify(lam)
    pbar = specialize_q(modified_macdonald(lam, n, t0), q0)
    image = apply_macdonald_operator(pbar, t0, qmul=lambda c, k: c * q0 ** k)
    support = sorted(set(pbar.terms) | set(image.terms), reverse=True)
    vec = lambda g: [g.terms.get(m, Fraction(0)) for m in support]
    sol = solve_exact([vec(pbar)], vec(image), QQ)
    if sol is not None:
        return ("Eigen", None)
    if tag.case is pt.Case.B:
        nubar = specialize_q(modified_macdonald(tag.companion, n, t0), q0)
        support = sorted(set(support) | set(nubar.terms), reverse=True)
        vec = lambda g: [g.terms.get(m, Fraction(0)) for m in support]
        sol = solve_exact([vec(pbar), vec(nubar)], vec(image), QQ)
        if sol is not None and not QQ.is_zero(sol[1]):
            return ("JordanBlock", tag.companion)
    raise NeitherStructure(f"operator image of {lam} not in expected span")
