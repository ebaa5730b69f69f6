"""Checks the eigenoperator construction against an independent
Gram-Schmidt oracle built from the power-sum inner product
<p_lam, p_mu> = delta z_lam alpha^len(lam), alpha = 1/theta."""

from collections import Counter
from fractions import Fraction

import pytest

from rootloci import partitions as pt
from rootloci.errors import NotAdmissible
from rootloci.jack import (jack, jack_u0, modified_jack, specialize_theta,
                           vanishes_on_double_diagonal)
from rootloci.linalg import solve_exact
from rootloci.ratfunc import RatFunc
from rootloci.sympoly import QQ, MultiPoly, SymPoly, collect

F = Fraction


def _power_sum(k, n):
    mp = MultiPoly(n, QQ)
    for i in range(n):
        e = [0] * n
        e[i] = k
        mp.add_term(tuple(e), F(1))
    return mp


def _p_product(mu, n):
    acc = MultiPoly.constant(n, QQ, 1)
    for k in mu:
        if k:
            acc = acc * _power_sum(k, n)
    return collect(acc)


def _z(mu):
    counts = Counter(k for k in mu if k)
    z = 1
    for k, m in counts.items():
        fact = 1
        for i in range(2, m + 1):
            fact *= i
        z *= k ** m * fact
    return z


def _gram_schmidt_oracle(d, n, alpha):
    """All Jack polynomials of weight d in n variables at parameter
    alpha = 1/theta, via Gram-Schmidt over the monomial basis."""
    parts = pt.enumerate_partitions(n, d)       # descending lex
    order = list(reversed(parts))               # ascending lex
    # transition: columns are p_mu in the m-basis
    p_in_m = {mu: _p_product(mu, n) for mu in order}
    cols = [[p_in_m[mu].coefficient(lam) for lam in parts] for mu in order]
    # m_lam in the p-basis
    m_in_p = {}
    for lam in parts:
        target = [F(1) if kap == lam else F(0) for kap in parts]
        m_in_p[lam] = solve_exact(cols, target, QQ)
    weights = [F(_z(mu)) * F(alpha) ** sum(1 for k in mu if k)
               for mu in order]

    def dot(u, v):
        return sum(w * a * b for w, a, b in zip(weights, u, v))

    done = []  # (lam, vector in p-basis)
    out = {}
    for lam in order:
        vec = list(m_in_p[lam])
        combo = {lam: F(1)}
        for mu, jvec, jcombo in done:
            c = dot(vec, jvec) / dot(jvec, jvec)
            vec = [a - c * b for a, b in zip(vec, jvec)]
            for kap, ck in jcombo.items():
                combo[kap] = combo.get(kap, F(0)) - c * ck
        done.append((lam, vec, dict(combo)))
        f = SymPoly(n, QQ)
        for kap, c in combo.items():
            if c:
                f.add_term(kap, c)
        out[lam] = f
    return out


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_jack_matches_gram_schmidt_oracle(d):
    n = 4
    theta0 = F(2, 5)
    oracle = _gram_schmidt_oracle(d, n, 1 / theta0)
    for lam in pt.enumerate_partitions(n, d):
        got = specialize_theta(jack(lam, n), theta0)
        assert got == oracle[lam], lam


def test_jack_at_theta_one_is_schur():
    # theta = 1: the (2,1,0) polynomial is m21 + 2 m111
    f = specialize_theta(jack((2, 1, 0), 3), F(1))
    assert f.coefficient((2, 1, 0)) == 1
    assert f.coefficient((1, 1, 1)) == 2


def test_jack_triangular_leading_one():
    for lam in pt.enumerate_partitions(4, 4):
        f = jack(lam, 4)
        assert f.coefficient(lam) == RatFunc.const(1)
        for mu in f.terms:
            if mu != lam:
                assert pt.dominance(lam, mu) is pt.Dominance.Greater


def test_jack_u0_principal_value():
    # closed product matches direct evaluation at (1,1,1,1)
    from rootloci.sympoly import evaluate
    for lam in pt.enumerate_partitions(4, 3):
        closed = jack_u0(lam, 4)
        direct = evaluate(jack(lam, 4), [RatFunc.const(1)] * 4)
        assert closed == direct, lam


def test_modified_jack_vanishes_on_double_diagonal():
    for d in range(4, 8):
        for lam in pt.admissible_partitions(4, d):
            g = specialize_theta(modified_jack(lam, 4), F(-1, 2))
            assert vanishes_on_double_diagonal(g), lam


def test_modified_jack_rejects_non_admissible():
    with pytest.raises(NotAdmissible):
        modified_jack((2, 2, 0, 0), 4)
