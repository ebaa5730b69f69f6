"""Vanishing ideals by direct linear algebra.

The degree-d component of each coincidence ideal is computed as the
kernel of the substitution map on the monomial-symmetric basis.  The
module also expands the closed Hilbert-Poincare series and the per-case
generating functions, extracts minimal-generator degrees, runs the
dual-ring spanning bound, and identifies the minimal-degree generator
with the symmetrized product Q(x).

All q-series are lists of integer coefficients indexed by degree,
truncated at a stated bound D (inclusive).
"""

from __future__ import annotations

from fractions import Fraction

from . import partitions as pt
from .errors import ProportionalityFailure
from .jack import modified_jack, specialize_theta
from .linalg import kernel_basis, rank, rank_mod
from .patterns import IdealSpec, double_diagonal, pfold
from .sympoly import (QQ, MultiPoly, SymPoly, collect, multiply_by_elementary,
                      substitute_pattern, symmetrize)

# ---------------------------------------------------------------------
# integer q-series helpers (truncated power series)
# ---------------------------------------------------------------------

def series_mul(a: list[int], b: list[int], D: int) -> list[int]:
    out = [0] * (D + 1)
    for i, ai in enumerate(a[:D + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[:D + 1 - i]):
            out[i + j] += ai * bj
    return out


def series_add(a: list[int], b: list[int]) -> list[int]:
    m = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(m)]


def q_power(k: int, D: int) -> list[int]:
    out = [0] * (D + 1)
    if k <= D:
        out[k] = 1
    return out


def geometric(j: int, D: int) -> list[int]:
    """1/(1-q^j) truncated at degree D."""
    out = [0] * (D + 1)
    for k in range(0, D + 1, j):
        out[k] = 1
    return out


def poch_inv(i: int, D: int) -> list[int]:
    """1/(q)_i = prod_{j=1}^{i} 1/(1-q^j)."""
    out = q_power(0, D)
    for j in range(1, i + 1):
        out = series_mul(out, geometric(j, D), D)
    return out


def one_minus_q_power(k: int, D: int) -> list[int]:
    out = q_power(0, D)
    if k <= D:
        out[k] -= 1
    return out


def hilbert_series_theorem(n: int, D: int) -> list[int]:
    """q^{(n-1)(n-3)}/((q)_1 (q)_{n-3}) + q^{(n-2)(n-1)}/((q)_1 (q)_{n-2})
    + q^{n(n-1)}/(q)_n, expanded to degree D."""
    t1 = series_mul(q_power((n - 1) * (n - 3), D),
                    series_mul(poch_inv(1, D), poch_inv(n - 3, D), D), D)
    t2 = series_mul(q_power((n - 2) * (n - 1), D),
                    series_mul(poch_inv(1, D), poch_inv(n - 2, D), D), D)
    t3 = series_mul(q_power(n * (n - 1), D), poch_inv(n, D), D)
    return series_add(series_add(t1, t2), t3)


def hilbert_series_theorem_terms(n: int, D: int) -> list[list[int]]:
    """The three summands of the theorem series, separately."""
    return [
        series_mul(q_power((n - 1) * (n - 3), D),
                   series_mul(poch_inv(1, D), poch_inv(n - 3, D), D), D),
        series_mul(q_power((n - 2) * (n - 1), D),
                   series_mul(poch_inv(1, D), poch_inv(n - 2, D), D), D),
        series_mul(q_power(n * (n - 1), D), poch_inv(n, D), D),
    ]


def hilbert_series_cases(n: int, D: int) -> dict[int, list[int]]:
    """The four per-case generating functions for admissible partitions
    with n parts; values keyed 1..4, summing to the theorem series."""
    pn = poch_inv(n, D)
    case1 = series_mul(q_power(n * (n - 1), D), pn, D)

    acc = [0] * (D + 1)
    for i in range(n - 2):
        term = series_mul(q_power(3 * i, D),
                          series_mul(one_minus_q_power(n - 2 - i, D),
                                     one_minus_q_power(n - 1 - i, D), D), D)
        acc = series_add(acc, term)
    case2 = series_mul(q_power((n - 1) * (n - 3), D),
                       series_mul(pn, acc, D), D)

    acc = [0] * (D + 1)
    for i in range(n - 1):
        acc = series_add(acc, series_mul(q_power(3 * i, D),
                                         one_minus_q_power(n - 1 - i, D), D))
    case3 = series_mul(q_power((n - 2) ** 2, D), series_mul(pn, acc, D), D)
    case4 = series_mul(q_power((n - 2) ** 2 + 1, D), series_mul(pn, acc, D), D)
    return {1: case1, 2: case2, 3: case3, 4: case4}


# ---------------------------------------------------------------------
# ideal dimensions via substitution kernels
# ---------------------------------------------------------------------

def _pattern_rows(specs: list[IdealSpec], d: int):
    """Constraint rows of the stacked substitution maps on the degree-d
    m-basis; returns (partitions, rows)."""
    n = specs[0].n
    parts = pt.enumerate_partitions(n, d)
    images = []
    for lam in parts:
        f = SymPoly.monomial(lam, n, QQ)
        images.append([substitute_pattern(f, spec) for spec in specs])
    rows = []
    for si in range(len(specs)):
        keys = sorted({e for img in images for e in img[si].terms})
        for key in keys:
            rows.append([img[si].terms.get(key, Fraction(0))
                         for img in images])
    return parts, rows


def _kernel_of_patterns(specs: list[IdealSpec], d: int):
    """Kernel basis (in the m-basis of degree d) of the stacked
    substitution maps; returns (partitions, kernel vectors)."""
    parts, rows = _pattern_rows(specs, d)
    return parts, kernel_basis(rows, QQ) if rows else []


def ideal_dimension_mod(spec: IdealSpec, d: int, prime: int) -> int:
    """Modular cross-check of ideal_dimension: kernel dimension computed
    from the rank mod `prime` (can only overcount if the prime is
    unlucky; raises BadPrime on denominator collisions)."""
    parts, rows = _pattern_rows([spec], d)
    if not rows:
        return len(parts)
    return len(parts) - rank_mod(rows, prime)


def ideal_dimension(spec: IdealSpec, d: int, return_basis: bool = False):
    """Dimension of the degree-d component of the coincidence ideal;
    with return_basis, also the exact kernel basis as SymPoly values."""
    parts, ker = _kernel_of_patterns([spec], d)
    if not return_basis:
        return len(ker)
    basis = []
    for vec in ker:
        g = SymPoly(spec.n, QQ)
        for lam, c in zip(parts, vec):
            g.add_term(lam, c)
        basis.append(g)
    return len(ker), basis


def dimension_table(spec: IdealSpec, D: int) -> list[int]:
    return [ideal_dimension(spec, d) for d in range(D + 1)]


# ---------------------------------------------------------------------
# minimal generator degrees
# ---------------------------------------------------------------------

def _to_vector(g: SymPoly, parts: list[tuple]) -> list[Fraction]:
    return [g.terms.get(lam, Fraction(0)) for lam in parts]


def generator_degrees(spec: IdealSpec, D: int) -> list[int]:
    """Sorted degree multiset of minimal generators up to degree D:
    at each degree, dim I_d minus the rank of { e_k g : g in I_{d-k} }."""
    n = spec.n
    bases: dict[int, list[SymPoly]] = {}
    out = []
    for d in range(D + 1):
        _, basis = ideal_dimension(spec, d, return_basis=True)
        bases[d] = basis
        if not basis:
            continue
        parts = pt.enumerate_partitions(n, d)
        products = []
        for k in range(1, min(n, d) + 1):
            for g in bases.get(d - k, ()):
                products.append(_to_vector(multiply_by_elementary(g, k),
                                           parts))
        covered = rank(products, QQ) if products else 0
        out.extend([d] * (len(basis) - covered))
    return sorted(out)


def min_degree_formula(n: int, p: int | None = None) -> int:
    """Closed forms for the minimal generator degree: M(n) = (n-1)(n-3)
    for the two-double-roots ideal, M(n,p) = s(s-1)(p-1) + 2sr with
    n = s(p-1) + r for the p-fold-root ideal."""
    if p is None:
        return (n - 1) * (n - 3)
    s, r = divmod(n, p - 1)
    return s * (s - 1) * (p - 1) + 2 * s * r


def lambda_min(n: int) -> tuple:
    """((2n-5), (2n-7), ..., 5, 3, 0, 0, 0): the minimal-weight admissible
    partition with n parts."""
    return tuple(range(2 * n - 5, 1, -2)) + (0, 0, 0)


def q_product_generator(n: int) -> SymPoly:
    """Q(x) = Symm prod_{j=4}^n (x1-xj)(x2-xj)(x3-xj)
    prod_{4<=k<l<=n} (xk-xl)^2."""
    mp = MultiPoly.constant(n, QQ, 1)

    def linear(i, j):
        out = MultiPoly(n, QQ)
        e = [0] * n
        e[i] = 1
        out.add_term(tuple(e), Fraction(1))
        e = [0] * n
        e[j] = 1
        out.add_term(tuple(e), Fraction(-1))
        return out

    for j in range(3, n):
        for i in range(3):
            mp = mp * linear(i, j)
    for k in range(3, n):
        for l in range(k + 1, n):
            d = linear(k, l)
            mp = mp * d * d
    return symmetrize(mp)


def lambda_min_generator(n: int) -> tuple[tuple, SymPoly]:
    """Return (lambda_min, Q) after asserting that Q is a nonzero ideal
    element of degree M(n) exactly proportional to the specialized
    modified polynomial of lambda_min."""
    lam = lambda_min(n)
    if sum(lam) != min_degree_formula(n):
        raise ProportionalityFailure("lambda_min weight differs from M(n)")
    Q = q_product_generator(n)
    if Q.is_zero() or Q.degree() != min_degree_formula(n):
        raise ProportionalityFailure("Q(x) degenerate")
    if not substitute_pattern(Q, double_diagonal(n)).is_zero():
        raise ProportionalityFailure("Q(x) not in the ideal")
    P = specialize_theta(modified_jack(lam, n), Fraction(-1, 2))
    ratio = None
    for mu in set(Q.terms) | set(P.terms):
        qc = Q.terms.get(mu, Fraction(0))
        pc = P.terms.get(mu, Fraction(0))
        if pc == 0:
            if qc != 0:
                raise ProportionalityFailure(f"support mismatch at {mu}")
            continue
        r = qc / pc
        if ratio is None:
            ratio = r
        elif r != ratio:
            raise ProportionalityFailure(
                f"coefficient ratio varies: {ratio} vs {r} at {mu}")
    if ratio is None or ratio == 0:
        raise ProportionalityFailure("zero proportionality ratio")
    return lam, Q


# ---------------------------------------------------------------------
# dual-ring spanning bound
# ---------------------------------------------------------------------

def current_square_coefficients(i: int, j: int) -> dict[tuple, int]:
    """Coefficient of x^i y^j in e(x)^2 e(y)^2 as a multiset of four
    subscripts -> integer multiplicity."""
    out: dict[tuple, int] = {}
    for i1 in range(i + 1):
        for j1 in range(j + 1):
            key = tuple(sorted((i1, i - i1, j1, j - j1), reverse=True))
            out[key] = out.get(key, 0) + 1
    return out


def dual_ring_spanning(n: int, d: int) -> tuple[int, int]:
    """(quotient dimension of R_{n,d} by the quartic-current relations,
    number of admissible partitions in pi_{n,d})."""
    parts = pt.enumerate_partitions(n, d)
    index = {lam: c for c, lam in enumerate(parts)}
    rows = []
    for i in range(d + 1):
        for j in range(d - i + 1):
            rel = current_square_coefficients(i, j)
            if n == 4:
                rests = [()] if i + j == d else []
            else:
                rests = pt.enumerate_partitions(n - 4, d - i - j)
            for rest in rests:
                row = [Fraction(0)] * len(parts)
                for quad, mult in rel.items():
                    merged = tuple(sorted(quad + rest, reverse=True))
                    row[index[merged]] += mult
                rows.append(row)
    quotient = len(parts) - (rank(rows, QQ) if rows else 0)
    admissible = sum(1 for lam in parts if pt.is_admissible(lam))
    return quotient, admissible


# ---------------------------------------------------------------------
# the F2 > F > F1 filtration
# ---------------------------------------------------------------------

def filtration_dimensions(n: int, d: int) -> tuple[int, int, int]:
    """(dim F2_d, dim F_d, dim F1_d): vanishing on (x,x,y,y), on both
    (x,x,y,y) and (x,x,x), and on (x,x) respectively."""
    dim_f2 = ideal_dimension(double_diagonal(n), d)
    _, ker = _kernel_of_patterns([double_diagonal(n), pfold(n, 3)], d)
    dim_f = len(ker)
    dim_f1 = ideal_dimension(pfold(n, 2), d)
    return dim_f2, dim_f, dim_f1


def filtration_check(n: int, D: int) -> tuple[list[int], list[int], list[int]]:
    """Quotient series (ch F2/F, ch F/F1, ch F1) up to degree D."""
    s21, s10, s1 = [], [], []
    for d in range(D + 1):
        f2, f, f1 = filtration_dimensions(n, d)
        s21.append(f2 - f)
        s10.append(f - f1)
        s1.append(f1)
    return s21, s10, s1
