from fractions import Fraction

import pytest

from rootloci import partitions as pt
from rootloci.interp import (dehomogenize, interp_jack, knop_sahi_apply,
                             modified_interp_at_half, modified_interp_jack,
                             normalization_value, pieri_check, rho_at,
                             rho_symbolic, shifted_vanishing_sweep,
                             vanishes_shifted, zeta_half)
from rootloci.jack import jack, specialize_theta
from rootloci.ratfunc import RatFunc, UniPoly
from rootloci.sympoly import QTHETA, MultiPoly, SymPoly, collect

F = Fraction
theta = RatFunc.x()


def test_rho():
    assert rho_at(4, F(-1, 2)) == [F(-3, 2), F(-1), F(-1, 2), F(0)]
    assert rho_symbolic(3) == [theta * 2, theta, RatFunc.const(0)]


def test_interp_weight_one():
    # the inhomogeneous polynomial for (1,0,0,0) is m_1 - 6 theta
    f = interp_jack((1, 0, 0, 0), 4)
    assert f.coefficient((1, 0, 0, 0)) == RatFunc.const(1)
    assert f.coefficient((0, 0, 0, 0)) == -(theta * 6)


def test_normalization_value_column():
    # (1,1,0,0): single nontrivial box contributes theta + 1
    assert normalization_value((1, 1)) == theta + RatFunc.const(1)
    assert normalization_value((1,)) == RatFunc.const(1)


def test_top_degree_is_homogeneous_limit():
    # the top-weight part equals the homogeneous eigenpolynomial
    for lam in pt.enumerate_partitions(4, 3):
        f = interp_jack(lam, 4)
        hom = jack(lam, 4)
        for mu, c in hom.terms.items():
            assert f.coefficient(mu) == c, (lam, mu)


def test_uniqueness_under_condition_reordering():
    lam = (2, 0)
    base = interp_jack(lam, 2)
    support_size = len([m for w in range(3)
                        for m in pt.enumerate_partitions(2, w)])
    reordered = interp_jack(lam, 2,
                            condition_order=list(reversed(range(support_size))))
    assert reordered == base


def test_knop_sahi_basic_identity():
    # n = 2: the first operator applied to 1 gives e_1 - theta
    one = MultiPoly.constant(2, QTHETA, 1)
    img = collect(knop_sahi_apply(1, one))
    assert img.coefficient((1, 0)) == RatFunc.const(1)
    assert img.coefficient((0, 0)) == -theta


def test_operators_commute():
    from rootloci.sympoly import expand
    f = SymPoly(3, QTHETA)
    f.add_term((1, 0, 0), RatFunc.const(2))
    f.add_term((1, 1, 0), RatFunc.const(-1))
    f.add_term((2, 1, 0), RatFunc.const(1))
    mp = expand(f)
    a = knop_sahi_apply(1, knop_sahi_apply(2, mp))
    b = knop_sahi_apply(2, knop_sahi_apply(1, mp))
    assert a == b


@pytest.mark.parametrize("lam", [(1, 0, 0), (2, 0, 0), (1, 1, 0), (2, 1, 0)])
def test_dehomogenize_gives_interpolation_polynomial(lam):
    assert dehomogenize(jack(lam, 3)) == interp_jack(lam, 3)


def test_modified_vanishing_sweep():
    lam = (2, 2, 2, 0)
    f = modified_interp_at_half(lam, 4)
    assert shifted_vanishing_sweep(f, sum(lam) + 2) == []
    # the unmodified polynomial does not pass the sweep
    g = specialize_theta(interp_jack(lam, 4), F(-1, 2))
    assert shifted_vanishing_sweep(g, sum(lam) + 2) != []


def test_vanishes_shifted_normalization_point():
    lam = (2, 0, 0, 0)
    f = specialize_theta(interp_jack(lam, 4), F(-1, 2))
    assert not vanishes_shifted(f, lam)
    assert vanishes_shifted(f, (1, 1, 0, 0))


def test_zeta_half():
    x = RatFunc.x()
    f = (x + F(1, 2)) * (x + F(1, 2)) / (x - 1)
    assert zeta_half(f) == 2
    assert zeta_half(RatFunc.const(1) / (x + F(1, 2))) == -1


def test_pieri_expansion_small():
    coeffs = pieri_check((2, 2, 2, 0), 4)
    support = {tau for tau, c in coeffs.items() if c}
    assert support <= set(pt.admissible_partitions(4, 7))
    assert support  # non-trivial expansion


def test_modified_case_c_is_plain():
    lam = (4, 0, 0, 0)
    assert modified_interp_jack(lam, 4) == interp_jack(lam, 4)
