"""Interpolation Jack polynomials, Knop-Sahi operators, dehomogeneization.

P*_lambda is the unique symmetric polynomial of degree <= |lambda| that
vanishes at every shifted lattice point mu + rho(theta) with
|mu| <= |lambda|, mu != lambda, and takes the hook-type product value
prod_s (l(s) theta + a(s) + 1) at lambda + rho(theta).  It is found by
solving that square linear system by exact elimination over Q(theta),
and the defining conditions are re-verified identically afterwards.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import comb

from . import partitions as pt
from .errors import NoRepresentation, SingularSystem
from .jack import jack_u0, specialize_theta
from .linalg import solve_exact
from .ratfunc import RatFunc, UniPoly
from .sympoly import (QQ, QTHETA, MultiPoly, SymPoly, collect, divide_linear,
                      evaluate, multiply_by_elementary, shift_variable,
                      to_elementary_basis)


def rho_symbolic(n: int) -> list[RatFunc]:
    """((n-1) theta, (n-2) theta, ..., theta, 0)."""
    return [RatFunc.from_poly(UniPoly([0, n - i])) for i in range(1, n + 1)]


def rho_at(n: int, theta0) -> list[Fraction]:
    theta0 = Fraction(theta0)
    return [(n - i) * theta0 for i in range(1, n + 1)]


def shifted_point_symbolic(mu, n: int) -> list[RatFunc]:
    return [RatFunc.const(m) + r for m, r in zip(mu, rho_symbolic(n))]


def normalization_value(lam) -> RatFunc:
    """prod over boxes of (l(s) theta + a(s) + 1), as a polynomial in theta."""
    lam = tuple(lam)
    conj = pt.conjugate(lam)
    acc = RatFunc.const(1)
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            l = conj[j - 1] - i
            a = p - j
            acc = acc * RatFunc.from_poly(UniPoly([a + 1, l]))
    return acc


def _support(n: int, d: int) -> list[tuple]:
    """All partitions of weight <= d with at most n parts, padded; the
    unknown support of an interpolation polynomial of degree d."""
    out = []
    for w in range(d + 1):
        out.extend(pt.enumerate_partitions(n, w))
    return out


def _condition_rows_symbolic(lam, n: int, support: list[tuple],
                             points: list[tuple]):
    """Rows of the defining system over Q(theta): one row per lattice
    point mu (|mu| <= |lam|), entries m_kappa(mu + rho)."""
    rows = []
    rhs = []
    for mu in points:
        point = shifted_point_symbolic(mu, n)
        row = [evaluate(SymPoly.monomial(kappa, n, QTHETA), point)
               for kappa in support]
        rows.append(row)
        rhs.append(normalization_value(lam) if mu == lam else RatFunc.const(0))
    return rows, rhs


def _solve_symbolic(lam, n: int, support: list[tuple],
                    condition_order=None) -> dict:
    points = (list(support) if condition_order is None
              else [support[i] for i in condition_order])
    rows, rhs = _condition_rows_symbolic(lam, n, support, points)
    k = len(support)
    cols = [[rows[i][j] for i in range(k)] for j in range(k)]
    sol = solve_exact(cols, rhs, QTHETA)
    if sol is None:
        raise SingularSystem(f"interpolation system inconsistent for {lam}")
    return {kappa: c for kappa, c in zip(support, sol)}


_INTERP_CACHE: dict[tuple, SymPoly] = {}


def interp_jack(lam, n: int, condition_order=None) -> SymPoly:
    """The interpolation polynomial for lam over Q(theta); the defining
    conditions are re-verified identically in theta after the solve.
    condition_order optionally permutes the order in which the vanishing
    conditions are fed to the elimination (the result must not depend
    on it)."""
    lam = pt.check_partition(tuple(lam))
    key = (n, lam)
    if key in _INTERP_CACHE and condition_order is None:
        return _INTERP_CACHE[key]
    d = sum(lam)
    support = _support(n, d)
    coeffs = _solve_symbolic(lam, n, support, condition_order)
    out = SymPoly(n, QTHETA)
    for kappa, c in coeffs.items():
        out.add_term(kappa, c)
    _verify(lam, n, out, support)
    if condition_order is None:
        _INTERP_CACHE[key] = out
    return out


def _verify(lam, n: int, f: SymPoly, support: list[tuple]):
    for mu in support:
        point = shifted_point_symbolic(mu, n)
        v = evaluate(f, point)
        want = normalization_value(lam) if mu == lam else RatFunc.const(0)
        if v != want:
            raise SingularSystem(
                f"interpolation conditions fail for {lam} at {mu}")


# ---------------------------------------------------------------------
# Knop-Sahi difference operators and dehomogeneization
# ---------------------------------------------------------------------

def _det_factor(n: int, S: frozenset) -> MultiPoly:
    """det of the matrix with rows i: (x_i + theta)^(n-1-c) for i not in S,
    x_i^(n-c) for i in S (0-based column c), over Q(theta)."""
    out = MultiPoly(n, QTHETA)

    def row_entry(i: int, c: int) -> MultiPoly:
        mp = MultiPoly(n, QTHETA)
        if i in S:
            e = [0] * n
            e[i] = n - c
            mp.add_term(tuple(e), QTHETA.one)
            return mp
        # (x_i + theta)^(n-1-c) by binomial expansion
        k = n - 1 - c
        for r in range(k + 1):
            e = [0] * n
            e[i] = k - r
            coeff = RatFunc.from_poly(UniPoly.monomial(comb(k, r), r))
            mp.add_term(tuple(e), coeff)
        return mp

    entries = [[row_entry(i, c) for c in range(n)] for i in range(n)]
    for sigma in permutations(range(n)):
        sign = _perm_sign(sigma)
        term = MultiPoly.constant(n, QTHETA, sign)
        for i in range(n):
            term = term * entries[i][sigma[i]]
        out = out + term
    return out


def _perm_sign(sigma) -> int:
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


_DET_CACHE: dict[tuple, MultiPoly] = {}


def knop_sahi_apply(k: int, mp: MultiPoly) -> MultiPoly:
    """Apply the k-th difference operator (coefficient of t^k in the
    determinant generating expression) to mp over Q(theta)."""
    n = mp.nvars
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    acc = MultiPoly(n, QTHETA)
    for subset in combinations(range(n), k):
        S = frozenset(subset)
        ck = (n, S)
        if ck not in _DET_CACHE:
            _DET_CACHE[ck] = _det_factor(n, S)
        shifted = mp
        for i in subset:
            shifted = shift_variable(shifted, i, -1)
        acc = acc + _DET_CACHE[ck] * shifted
    for a in range(n):
        for b in range(a + 1, n):
            acc = divide_linear(acc, a, b, 1)
    return acc


def dehomogenize(f: SymPoly) -> SymPoly:
    """The Knop-Sahi isomorphism: expand f in elementary products, send
    each e_k to the k-th difference operator, apply the product to 1."""
    n = f.n
    ebasis = to_elementary_basis(f)
    acc = SymPoly(n, QTHETA)
    for eparts, c in ebasis.items():
        mp = MultiPoly.constant(n, QTHETA, 1)
        for k in eparts:
            mp = knop_sahi_apply(k, mp)
        acc = acc + collect(mp, check=True).scale(c)
    return acc


# ---------------------------------------------------------------------
# modified interpolation polynomials and the shifted vanishing checks
# ---------------------------------------------------------------------

def modified_interp_jack(lam, n: int) -> SymPoly:
    """Companion combination with the convention that the principal value
    of P* is that of the homogeneous P."""
    lam = tuple(lam)
    tag = pt.classify(lam)  # raises NotAdmissible
    if tag.case is pt.Case.C:
        return interp_jack(lam, n)
    nu = tag.companion
    ratio = jack_u0(lam, n) / jack_u0(nu, n)
    return interp_jack(lam, n) - interp_jack(nu, n).scale(ratio)


def vanishes_shifted(f: SymPoly, mu) -> bool:
    """f (rational coefficients) vanishes at mu + rho(-1/2)."""
    n = f.n
    point = [Fraction(m) + r for m, r in zip(mu, rho_at(n, Fraction(-1, 2)))]
    return QQ.is_zero(evaluate(f, point))


def shifted_vanishing_sweep(f: SymPoly, max_weight: int) -> list[tuple]:
    """Non-admissible mu with |mu| <= max_weight at which f fails to
    vanish (empty list = all pass)."""
    n = f.n
    bad = []
    for w in range(max_weight + 1):
        for mu in pt.enumerate_partitions(n, w):
            if not pt.is_admissible(mu) and not vanishes_shifted(f, mu):
                bad.append(mu)
    return bad


def zeta_half(f: RatFunc) -> int:
    """Multiplicity of the factor (theta + 1/2) in f (poles negative)."""
    return f.multiplicity_at(Fraction(-1, 2))


def normalization_zeta(lam) -> int:
    """Order of vanishing at theta = -1/2 of the normalization value
    P*_lam(lam + rho); positive iff some box has (l, a) = (2a+2, a)."""
    return zeta_half(normalization_value(lam))


def modified_interp_at_half(lam, n: int) -> SymPoly:
    return specialize_theta(modified_interp_jack(lam, n), Fraction(-1, 2))


def pieri_check(lam, n: int) -> dict:
    """Expand (sum (x_i - rho_i(-1/2)) - |lam|) P-bar*_lam over the modified
    interpolation polynomials of weight |lam|+1; the exact residual must
    vanish.  The shifted first factor is forced by the dehomogeneization
    relation Psi((sum x_i) f) = (sum x_i - n(n-1)/2 theta - deg f) Psi(f),
    whose theta-linear correction is sum_i rho_i."""
    lam = tuple(lam)
    d = sum(lam)
    f = modified_interp_at_half(lam, n)
    shift = Fraction(d) + sum(rho_at(n, Fraction(-1, 2)))
    lhs = multiply_by_elementary(f, 1) - f.scale(shift)
    taus = pt.admissible_partitions(n, d + 1)
    cols_polys = [modified_interp_at_half(tau, n) for tau in taus]
    keys = sorted(set(lhs.terms) | {m for g in cols_polys for m in g.terms},
                  reverse=True)
    vec = lambda g: [g.terms.get(m, Fraction(0)) for m in keys]
    sol = solve_exact([vec(g) for g in cols_polys], vec(lhs), QQ)
    if sol is None:
        raise NoRepresentation(f"no exact Pieri expansion for {lam}")
    return {tau: c for tau, c in zip(taus, sol)}
