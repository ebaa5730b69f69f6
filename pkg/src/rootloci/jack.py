"""Jack polynomials over Q(theta) and their pole-cancelling modifications.

P_lambda is computed as the unique monic triangular eigenvector of the
(theta-rescaled) Laplace-Beltrami operator

    L = 1/2 sum_i x_i^2 d_i^2  +  theta sum_{i<j} (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j)

whose action on the monomial basis is upper triangular in dominance with
eigenvalue  d_mu = sum_i [ mu_i(mu_i-1)/2 + theta (n-i) mu_i ].  The
eigenvalue difference d_lam - d_mu is a nonzero polynomial in theta for
every dominance-comparable pair, so the triangular recurrence never
divides by zero; this is asserted at runtime.
"""

from __future__ import annotations

from fractions import Fraction

from . import partitions as pt
from .errors import NotAdmissible, PoleAtPoint
from .patterns import double_diagonal
from .ratfunc import RatFunc, UniPoly
from .sympoly import (QQ, QTHETA, MultiPoly, SymPoly, collect, divide_linear,
                      derivative, expand, substitute_pattern)

_THETA = RatFunc.x()


def _x2d2(mp: MultiPoly, i: int) -> MultiPoly:
    """x_i^2 * d^2/dx_i^2 applied termwise."""
    out = MultiPoly(mp.nvars, mp.field)
    for exp, c in mp.terms.items():
        k = exp[i]
        if k >= 2:
            out.add_term(exp, c * (k * (k - 1)))
    return out


def _x2d(mp: MultiPoly, i: int) -> MultiPoly:
    """x_i^2 * d/dx_i applied termwise (degree-raising by one in x_i)."""
    out = MultiPoly(mp.nvars, mp.field)
    for exp, c in mp.terms.items():
        k = exp[i]
        if k == 0:
            continue
        e = list(exp)
        e[i] = k + 1
        out.add_term(tuple(e), c * k)
    return out


_LB_CACHE: dict[tuple, dict] = {}


def _lb_action(mu: tuple, n: int) -> tuple[dict, dict]:
    """Action of L on m_mu, split into the theta-free and theta-linear
    parts; both returned as m-basis dicts with Fraction coefficients."""
    key = (n, mu)
    if key not in _LB_CACHE:
        mp = expand(SymPoly.monomial(mu, n, QQ))
        part0 = MultiPoly(n, QQ)
        for i in range(n):
            part0 = part0 + _x2d2(mp, i).scale(Fraction(1, 2))
        part1 = MultiPoly(n, QQ)
        for i in range(n):
            for j in range(i + 1, n):
                num = _x2d(mp, i) - _x2d(mp, j)
                part1 = part1 + divide_linear(num, i, j, 1)
        _LB_CACHE[key] = (dict(collect(part0, check=False).terms),
                          dict(collect(part1, check=False).terms))
    return _LB_CACHE[key]


def lb_eigenvalue(mu: tuple, n: int) -> RatFunc:
    """d_mu(theta) = sum_i [ mu_i(mu_i-1)/2 + theta (n-i) mu_i ]."""
    c0 = Fraction(sum(m * (m - 1) for m in mu), 2)
    c1 = Fraction(sum((n - i) * m for i, m in enumerate(mu, start=1)))
    return RatFunc.from_poly(UniPoly([c0, c1]))


_JACK_CACHE: dict[tuple, SymPoly] = {}


def jack(lam, n: int) -> SymPoly:
    """Monic Jack polynomial P_lambda in the m-basis over Q(theta)."""
    lam = pt.check_partition(tuple(lam))
    if len(lam) != n:
        raise ValueError("partition length must equal n")
    key = (n, lam)
    if key in _JACK_CACHE:
        return _JACK_CACHE[key]
    d = sum(lam)
    dlam = lb_eigenvalue(lam, n)
    # lex-descending order is a linear extension of dominance
    order = [mu for mu in pt.enumerate_partitions(n, d)
             if pt.dominated_by(mu, lam)]
    coeffs: dict[tuple, RatFunc] = {lam: RatFunc.const(1)}
    for mu in order:
        if mu == lam:
            continue
        acc = RatFunc.const(0)
        for nu, c in coeffs.items():
            if nu == mu:
                continue
            part0, part1 = _lb_action(nu, n)
            entry0 = part0.get(mu)
            entry1 = part1.get(mu)
            if entry0 is None and entry1 is None:
                continue
            entry = RatFunc.from_poly(UniPoly([entry0 or 0, entry1 or 0]))
            acc = acc + c * entry
        denom = dlam - lb_eigenvalue(mu, n)
        assert not denom.is_zero(), \
            f"eigenvalue collision on comparable pair {lam} vs {mu}"
        c = acc / denom
        if not c.is_zero():
            coeffs[mu] = c
    out = SymPoly(n, QTHETA, coeffs)
    _JACK_CACHE[key] = out
    return out


def jack_u0(lam, n: int) -> RatFunc:
    """Principal value P_lambda(1,...,1) as the closed hook-type product
    prod_s ((n - coleg) theta + coarm) / ((leg + 1) theta + arm)."""
    lam = tuple(lam)
    num = RatFunc.const(1)
    den = RatFunc.const(1)
    conj = pt.conjugate(lam)
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            ap, lp = j - 1, i - 1
            a = p - j
            l = conj[j - 1] - i
            num = num * RatFunc.from_poly(UniPoly([ap, n - lp]))
            den = den * RatFunc.from_poly(UniPoly([a, l + 1]))
    return num / den


def modified_jack(lam, n: int) -> SymPoly:
    """Pole-cancelling combination: P_lam - (u0(P_lam)/u0(P_nu)) P_nu for
    companion cases, P_lam itself otherwise."""
    lam = tuple(lam)
    tag = pt.classify(lam)  # raises NotAdmissible
    if tag.case is pt.Case.C:
        return jack(lam, n)
    nu = tag.companion
    ratio = jack_u0(lam, n) / jack_u0(nu, n)
    return jack(lam, n) - jack(nu, n).scale(ratio)


def specialize_theta(f: SymPoly, theta0) -> SymPoly:
    """Coefficient-wise limit at theta = theta0 (poles are errors)."""
    theta0 = Fraction(theta0)
    out = SymPoly(f.n, QQ)
    for mu, c in f.terms.items():
        try:
            v = c.limit_at(theta0)
        except PoleAtPoint as exc:
            raise PoleAtPoint(
                f"coefficient of m_{mu} has a pole at theta={theta0}") from exc
        out.add_term(mu, v)
    return out


def vanishes_on_double_diagonal(f: SymPoly) -> bool:
    return substitute_pattern(f, double_diagonal(f.n)).is_zero()
