from collections import Counter
from fractions import Fraction
from itertools import product

from rootloci import partitions as pt
from rootloci.ideals import (current_square_coefficients, dimension_table,
                             dual_ring_spanning, filtration_check,
                             filtration_dimensions, generator_degrees,
                             hilbert_series_cases, hilbert_series_theorem,
                             hilbert_series_theorem_terms, ideal_dimension,
                             lambda_min, lambda_min_generator,
                             min_degree_formula, q_product_generator)
from rootloci.jack import vanishes_on_double_diagonal
from rootloci.patterns import double_diagonal, pfold

F = Fraction


def test_series_matches_admissible_counts():
    for n in (4, 5):
        D = 14
        series = hilbert_series_theorem(n, D)
        for d in range(D + 1):
            assert series[d] == len(pt.admissible_partitions(n, d)), (n, d)


def test_series_terms_sum():
    for n in (4, 5, 6):
        D = 16
        total = hilbert_series_theorem(n, D)
        terms = hilbert_series_theorem_terms(n, D)
        summed = [sum(t[d] for t in terms) for d in range(D + 1)]
        assert summed == total


def test_series_case_decomposition():
    n, D = 4, 12
    cases = hilbert_series_cases(n, D)
    total = hilbert_series_theorem(n, D)
    for d in range(D + 1):
        assert sum(cases[c][d] for c in cases) == total[d]
        counted = pt.count_admissible_by_case(n, d)
        for c in cases:
            assert cases[c][d] == counted.get(c, 0), (c, d)


def test_ideal_dimension_matches_series():
    n, D = 4, 9
    series = hilbert_series_theorem(n, D)
    dims = dimension_table(double_diagonal(n), D)
    assert dims == series[:D + 1]


def test_ideal_dimension_mod_agrees():
    from rootloci.ideals import ideal_dimension_mod
    p = (1 << 31) - 1
    for d in range(3, 8):
        assert ideal_dimension_mod(double_diagonal(4), d, p) == \
            ideal_dimension(double_diagonal(4), d)


def test_ideal_basis_elements_vanish():
    _, basis = ideal_dimension(double_diagonal(4), 6, return_basis=True)
    assert len(basis) == 5
    for g in basis:
        assert vanishes_on_double_diagonal(g)


def test_generator_degrees_double_diagonal_n4():
    # the locus is a graph over the first two coordinates, so the ideal
    # is generated by the two tautological relations in degrees 3 and 4
    assert generator_degrees(double_diagonal(4), 14) == [3, 4]


def test_generator_degrees_threefold_n4():
    assert generator_degrees(pfold(4, 3), 10) == [4, 6]


def test_min_degree_formula():
    assert [min_degree_formula(n) for n in (4, 5, 6, 7)] == [3, 8, 15, 24]
    assert min_degree_formula(4, 3) == 4
    assert min_degree_formula(5, 3) == 8
    assert min_degree_formula(6, 3) == 12


def test_lambda_min_weight():
    for n in (4, 5, 6):
        lam = lambda_min(n)
        assert len(lam) == n
        assert sum(lam) == min_degree_formula(n)
        assert pt.is_admissible(lam)


def test_lambda_min_generator_n4():
    lam, g = lambda_min_generator(4)
    assert lam == lambda_min(4)
    assert g.degree() == min_degree_formula(4)
    assert vanishes_on_double_diagonal(g)


def test_q_product_generator_in_ideal():
    g = q_product_generator(4)
    assert vanishes_on_double_diagonal(g)
    assert g.degree() == min_degree_formula(4)


def _current_square_oracle(i, j):
    """Brute-force coefficient of x^i y^j in e(x)^2 e(y)^2 as a multiset
    count over the four factor indices."""
    out = Counter()
    rng = range(max(i, j) + 1)
    for a, b, c, d in product(rng, repeat=4):
        if a + b == i and c + d == j:
            out[tuple(sorted((a, b, c, d)))] += 1
    return {k: v for k, v in out.items()}


def test_current_square_coefficients_oracle():
    for i in range(5):
        for j in range(5):
            got = current_square_coefficients(i, j)
            want = _current_square_oracle(i, j)
            norm = lambda m: {tuple(sorted(k)): v for k, v in m.items()}
            assert norm(got) == norm(want), (i, j)


def test_dual_ring_spanning_small():
    for n in (4, 5):
        for d in range(9):
            quotient, admissible = dual_ring_spanning(n, d)
            assert quotient == admissible == len(pt.admissible_partitions(n, d))


def test_filtration_layers():
    n, D = 4, 10
    layers = filtration_check(n, D)
    terms = hilbert_series_theorem_terms(n, D)
    # the three quotient series match the three closed-form summands,
    # in some pairing
    got = sorted(tuple(s[:D + 1]) for s in layers)
    want = sorted(tuple(t[:D + 1]) for t in terms)
    assert got == want


def test_filtration_dimensions_monotone():
    for d in range(3, 9):
        f2, f, f1 = filtration_dimensions(4, d)
        assert f2 >= f >= f1 >= 0
