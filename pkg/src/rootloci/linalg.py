"""Exact linear algebra over Q or a univariate function field.

Matrices are lists of rows; entries support +, -, *, / and are tested
for zero through the field object.  Everything is plain Gaussian
elimination with division; an optional single-prime modular rank is
provided as a fast screen for rational matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .sympoly import QQ, CoeffField


def _rref(matrix: list[list], field: CoeffField) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if not field.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: list[list], field: CoeffField = QQ) -> int:
    _, pivots = _rref(matrix, field)
    return len(pivots)


def kernel_basis(matrix: list[list], field: CoeffField = QQ) -> list[list]:
    """Basis of {x : M x = 0} for M given as rows of length ncols."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = _rref(matrix, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def solve_exact(columns: list[list], target: list,
                field: CoeffField = QQ) -> Optional[list]:
    """Solve sum_j c_j columns[j] = target exactly; None if inconsistent.
    When the solution is not unique, free coefficients are set to zero."""
    m = len(target)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    rows, pivots = _rref(aug, field)
    if k in pivots:
        return None
    sol = [field.zero] * k
    for r, pc in enumerate(pivots):
        sol[pc] = rows[r][k]
    return sol


def in_span(columns: list[list], target: list, field: CoeffField = QQ) -> bool:
    return solve_exact(columns, target, field) is not None


# ---------------------------------------------------------------------
# modular fast path (rational matrices only)
# ---------------------------------------------------------------------

class BadPrime(Exception):
    pass


def rank_mod(matrix: list[list[Fraction]], prime: int) -> int:
    """Rank of a rational matrix reduced mod `prime`.  Can only undercount
    the rational rank; raises BadPrime if a denominator vanishes mod p."""
    rows = []
    for row in matrix:
        out = []
        for v in row:
            fr = Fraction(v)
            if fr.denominator % prime == 0:
                raise BadPrime(f"denominator divisible by {prime}")
            out.append(fr.numerator * pow(fr.denominator, -1, prime) % prime)
        rows.append(out)
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] % prime), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, prime)
        rows[r] = [v * inv % prime for v in rows[r]]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(a - f * b) % prime for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
