from fractions import Fraction

import pytest

from rootloci.linalg import (BadPrime, in_span, kernel_basis, rank, rank_mod,
                             solve_exact)
from rootloci.ratfunc import RatFunc, UniPoly
from rootloci.sympoly import QQ, QTHETA

F = Fraction


def test_rank_small():
    m = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    assert rank(m) == 2
    assert rank([[F(0)] * 3]) == 0


def test_kernel_basis():
    m = [[F(1), F(1), F(0)], [F(0), F(1), F(1)]]
    ker = kernel_basis(m)
    assert len(ker) == 1
    v = ker[0]
    for row in m:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve_exact_and_in_span():
    cols = [[F(1), F(0), F(1)], [F(0), F(1), F(1)]]
    target = [F(3), F(4), F(7)]
    sol = solve_exact(cols, target, QQ)
    assert sol == [F(3), F(4)]
    assert in_span(cols, target)
    assert solve_exact(cols, [F(1), F(0), F(0)], QQ) is None
    assert not in_span(cols, [F(1), F(0), F(0)])


def test_solve_exact_over_function_field():
    x = RatFunc.x()
    one = RatFunc.const(1)
    cols = [[one, x], [x, one]]
    target = [one + x * x, x + x]
    sol = solve_exact(cols, target, QTHETA)
    assert sol == [one, x]


def test_rank_with_rational_pivot_chains():
    m = [[F(1, 2), F(1, 3)], [F(1, 4), F(1, 6)]]
    assert rank(m) == 1


def test_rank_mod_agrees():
    m = [[F(1, 2), F(3)], [F(5), F(7, 11)], [F(2), F(12)]]
    p = (1 << 31) - 1
    assert rank_mod(m, p) == rank(m)


def test_rank_mod_bad_prime():
    m = [[F(1, 7)]]
    with pytest.raises(BadPrime):
        rank_mod(m, 7)
