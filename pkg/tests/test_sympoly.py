import json
from fractions import Fraction
from itertools import permutations

import pytest

from rootloci import partitions as pt
from rootloci.errors import NotSymmetric
from rootloci.patterns import double_diagonal, pfold
from rootloci.ratfunc import RatFunc, UniPoly
from rootloci.sympoly import (QQ, QTHETA, MultiPoly, SymPoly, collect,
                              derivative, divide_linear, e_monomial,
                              elementary, evaluate, expand, from_json_dict,
                              multiply_by_elementary, shift_variable,
                              substitute_pattern, symmetrize,
                              to_elementary_basis, to_json_dict)


def test_expand_collect_roundtrip():
    f = SymPoly(4, QQ)
    f.add_term((3, 1, 0, 0), Fraction(2))
    f.add_term((2, 2, 0, 0), Fraction(-1, 3))
    f.add_term((1, 1, 1, 1), Fraction(5))
    assert collect(expand(f)) == f


def test_collect_rejects_nonsymmetric():
    mp = MultiPoly(3, QQ)
    mp.add_term((2, 0, 0), Fraction(1))
    with pytest.raises(NotSymmetric):
        collect(mp, check=True)


def test_symmetrize():
    mp = MultiPoly(3, QQ)
    mp.add_term((2, 1, 0), Fraction(1))
    f = symmetrize(mp)
    assert f.coefficient((2, 1, 0)) == 1
    # matches the full orbit sum
    full = MultiPoly(3, QQ)
    for sigma in set(permutations((2, 1, 0))):
        full.add_term(sigma, Fraction(1))
    assert collect(full).coefficient((2, 1, 0)) == 1


def test_elementary_basis_roundtrip():
    f = elementary(2, 4) * elementary(1, 4) + elementary(3, 4).scale(Fraction(7))
    exp = to_elementary_basis(f)
    assert exp[(2, 1)] == 1 and exp[(3,)] == 7
    back = SymPoly.zero(4, QQ)
    for eparts, c in exp.items():
        back = back + e_monomial(eparts, 4).scale(c)
    assert back == f


def test_multiply_by_elementary_against_expansion():
    f = SymPoly(3, QQ)
    f.add_term((2, 1, 0), Fraction(1))
    f.add_term((1, 1, 1), Fraction(-2))
    for k in (1, 2, 3):
        direct = multiply_by_elementary(f, k)
        via_expand = collect(expand(f) * expand(elementary(k, 3)))
        assert direct == via_expand


def test_evaluate_and_derivative():
    f = elementary(2, 3)
    assert evaluate(f, [Fraction(1), Fraction(2), Fraction(3)]) == 11
    mp = expand(f)
    d0 = derivative(mp, 0)
    assert d0.evaluate([Fraction(1), Fraction(2), Fraction(3)]) == 5


def test_shift_variable_and_divide_linear():
    # f = x0^2 - x1^2 is divisible by (x0 - x1)
    mp = MultiPoly(2, QQ)
    mp.add_term((2, 0), Fraction(1))
    mp.add_term((0, 2), Fraction(-1))
    quo = divide_linear(mp, 0, 1, 1)
    expect = MultiPoly(2, QQ)
    expect.add_term((1, 0), Fraction(1))
    expect.add_term((0, 1), Fraction(1))
    assert quo == expect
    sh = shift_variable(mp, 0, -1)  # (x0-1)^2 - x1^2
    assert sh.evaluate([Fraction(3), Fraction(2)]) == 0


def test_substitute_pattern_double_diagonal():
    # e_1 with x -> (x,x,y,y) becomes 2x + 2y
    f = elementary(1, 4)
    sub = substitute_pattern(f, double_diagonal(4))
    assert sub.evaluate([Fraction(1), Fraction(10)]) == 22
    # power sum style check for pfold
    g = elementary(1, 3)
    sub3 = substitute_pattern(g, pfold(3, 3))
    assert sub3.evaluate([Fraction(5)]) == 15


def test_vanishing_element_under_pattern():
    # e_1^2 - 4 e_2 = (x1-x2)^2 in two variables; dies on the diagonal
    n = 2
    f = elementary(1, n) * elementary(1, n) - elementary(2, n).scale(Fraction(4))
    sub = substitute_pattern(f, pfold(2, 2))
    assert sub.is_zero()


def test_json_roundtrip_rational():
    f = SymPoly(4, QQ)
    f.add_term((2, 1, 0, 0), Fraction(-3, 7))
    doc = to_json_dict(f)
    assert doc["schema"] == 1
    text = json.dumps(doc)
    assert from_json_dict(json.loads(text)) == f


def test_json_roundtrip_theta():
    f = SymPoly(2, QTHETA)
    c = RatFunc(UniPoly([1, 2]), UniPoly([-1, 0, 1]))
    f.add_term((1, 0), c)
    doc = to_json_dict(f, extra={"note": "x"})
    assert doc["note"] == "x" and doc["symbol"] == "theta"
    assert from_json_dict(json.loads(json.dumps(doc))) == f


def test_monomial_orbit_sizes():
    # m_(1,1,0) evaluated at (1,1,1) counts the 3 orbit elements
    f = SymPoly.monomial((1, 1, 0), 3, QQ)
    assert evaluate(f, [Fraction(1)] * 3) == 3
    for lam in pt.enumerate_partitions(3, 4):
        m = SymPoly.monomial(lam, 3, QQ)
        assert collect(expand(m)) == m
