"""End-to-end verification harness.

Sixteen numbered checks covering the whole library: Hilbert series
against kernel dimensions and admissible counts, the per-case
generating functions, the two basis theorems, zeta bookkeeping, pole
and operator structure, the companion search, symmetry, divisibility,
generator degrees, the minimal generator identification, the
interpolation theorem, dehomogeneization, the dual-ring bound and the
filtration.  Every check is an exact rational identity; each returns
(ok, detail) and the runner reports one line per criterion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import partitions as pt
from .errors import PoleAtPoint
from .ideals import (dual_ring_spanning, filtration_check, generator_degrees,
                     hilbert_series_cases, hilbert_series_theorem,
                     hilbert_series_theorem_terms, ideal_dimension,
                     lambda_min_generator, min_degree_formula, series_add)
from .interp import (dehomogenize, interp_jack, knop_sahi_apply,
                     modified_interp_at_half, normalization_zeta, pieri_check,
                     shifted_vanishing_sweep, zeta_half)
from .jack import (jack, jack_u0, modified_jack, specialize_theta,
                   vanishes_on_double_diagonal)
from .linalg import rank
from .macdonald import (coefficient_pole_orders, divisible_by_double_product,
                        macdonald, modified_macdonald, operator_structure,
                        specialize_q, symmetry_check, vanishes_on_t_diagonals,
                        zeta_u0)
from .patterns import double_diagonal, pfold
from .sympoly import QQ, QTHETA, MultiPoly, SymPoly, expand


@dataclass
class VerifyConfig:
    t0_list: list = field(default_factory=lambda: [Fraction(2),
                                                   Fraction(3, 2),
                                                   Fraction(5, 3)])
    seed: int = 0


def _gap2_partitions(n: int, dmax: int) -> list[tuple]:
    out = []
    for d in range(dmax + 1):
        for lam in pt.enumerate_partitions(n, d):
            if all(lam[i] - lam[i + 1] >= 2 for i in range(n - 1)):
                out.append(lam)
    return out


def criterion_1(cfg: VerifyConfig):
    """Kernel dimension = series coefficient = admissible count."""
    for n, dmax in ((4, 14), (5, 16)):
        series = hilbert_series_theorem(n, dmax)
        for d in range(dmax + 1):
            dim = ideal_dimension(double_diagonal(n), d)
            cnt = len(pt.admissible_partitions(n, d))
            if not dim == series[d] == cnt:
                return False, f"n={n} d={d}: dim={dim} series={series[d]} count={cnt}"
    return True, "n=4 d<=14 and n=5 d<=16 triple equality"


def criterion_2(cfg: VerifyConfig):
    """Per-case generating functions sum to the closed series."""
    for n in (4, 5, 6):
        cases = hilbert_series_cases(n, 20)
        total = [0] * 21
        for s in cases.values():
            total = series_add(total, s)
        if total[:21] != hilbert_series_theorem(n, 20)[:21]:
            return False, f"case sum != theorem series for n={n}"
    cases = hilbert_series_cases(4, 12)
    for d in range(13):
        counts = pt.count_admissible_by_case(4, d)
        for c in (1, 2, 3, 4):
            if counts.get(c, 0) != cases[c][d]:
                return False, f"n=4 d={d} case {c}: {counts.get(c, 0)} != {cases[c][d]}"
    return True, "sum identity to degree 20 (n=4,5,6); per-case counts n=4 d<=12"


def criterion_3(cfg: VerifyConfig):
    """Specialized modified polynomials are a basis of each degree
    component of the double-diagonal ideal."""
    n = 4
    for d in range(9):
        family = []
        for lam in pt.admissible_partitions(n, d):
            f = specialize_theta(modified_jack(lam, n), Fraction(-1, 2))
            if not vanishes_on_double_diagonal(f):
                return False, f"{lam} does not vanish on (x,x,y,y)"
            family.append(f)
        parts = pt.enumerate_partitions(n, d)
        vecs = [[g.terms.get(mu, Fraction(0)) for mu in parts] for g in family]
        if rank(vecs, QQ) != len(family):
            return False, f"family dependent at degree {d}"
        if len(family) != ideal_dimension(double_diagonal(n), d):
            return False, f"cardinality != dim at degree {d}"
    return True, "n=4, |lam|<=8: finite, vanishing, independent, full count"


def criterion_4(cfg: VerifyConfig):
    """Same basis statement for the t-deformed ideal at q = t0^-2,
    plus failure of the unmodified polynomials in Cases A and B."""
    n = 4
    for t0 in cfg.t0_list:
        q0 = 1 / (Fraction(t0) ** 2)
        for d in range(9):
            family = []
            for lam in pt.admissible_partitions(n, d):
                g = specialize_q(modified_macdonald(lam, n, t0), q0)
                if not vanishes_on_t_diagonals(g, t0):
                    return False, f"t0={t0} {lam}: modified fails vanishing"
                family.append(g)
            parts = pt.enumerate_partitions(n, d)
            vecs = [[g.terms.get(mu, Fraction(0)) for mu in parts]
                    for g in family]
            if rank(vecs, QQ) != len(family):
                return False, f"t0={t0} d={d}: family dependent"
            if len(family) != ideal_dimension(double_diagonal(n), d):
                return False, f"t0={t0} d={d}: cardinality != dim"
        for d in range(9):
            for lam in pt.admissible_partitions(n, d):
                tag = pt.classify(lam)
                if tag.case is pt.Case.C:
                    continue
                try:
                    g = specialize_q(macdonald(lam, n, t0), q0)
                except PoleAtPoint:
                    continue  # a pole certainly fails the vanishing check
                if vanishes_on_t_diagonals(g, t0):
                    return False, f"t0={t0} {lam}: unmodified should fail"
    return True, "t0 in {2, 3/2, 5/3}: modified basis works, unmodified A/B fail"


def criterion_5(cfg: VerifyConfig):
    """Combinatorial box-scan zeta equals the product-formula zeta;
    well-separated and paired-diagonal families give [n/2], [n/2]-2."""
    for n in (4, 5):
        for d in range(9):
            for lam in pt.enumerate_partitions(n, d):
                a = pt.zeta_u0_combinatorial(lam, n)
                b = zeta_u0(lam, n)
                if a != b:
                    return False, f"n={n} {lam}: box {a} != product {b}"
    for n in (4, 5, 6):
        eta = tuple(100 * (n - i) for i in range(n))
        for shift in ((0,) * n, tuple(range(n, 0, -1))):
            mu = tuple(e + s for e, s in zip(eta, shift))
            if zeta_u0(mu, n) != n // 2:
                return False, f"well-separated {mu}: zeta != [n/2]"
        etap = tuple(100 * (n - 2 - i) for i in range(n - 2))
        for d1 in (0, 3):
            mu = ((etap[0] + d1,) * 2 + (etap[1],) * 2
                  + tuple(etap[i] for i in range(2, n - 2)))
            if zeta_u0(mu, n) != n // 2 - 2:
                return False, f"paired {mu}: zeta != [n/2]-2"
    return True, "box-scan == product for |lam|<=8, n=4,5; [n/2] / [n/2]-2 families"


def criterion_6(cfg: VerifyConfig):
    """Single pole of the Case B polynomial; none after modification;
    Case A pair individually pole-free."""
    n = 4
    t0 = Fraction(cfg.t0_list[0])
    q0 = 1 / t0 ** 2
    orders = coefficient_pole_orders(macdonald((4, 3, 2, 0), n, t0), q0)
    if min(orders.values()) != -1:
        return False, f"(4,3,2,0): min order {min(orders.values())} != -1"
    orders = coefficient_pole_orders(modified_macdonald((4, 3, 2, 0), n, t0),
                                     q0)
    if min(orders.values()) < 0:
        return False, "modified (4,3,2,0) still has a pole"
    for lam in ((2, 2, 2, 0), (3, 1, 1, 1)):
        orders = coefficient_pole_orders(macdonald(lam, n, t0), q0)
        if min(orders.values()) < 0:
            return False, f"{lam} has a pole"
    return True, "(4,3,2,0) pole -1, modified >= 0; (2,2,2,0)/(3,1,1,1) pole-free"


def criterion_7(cfg: VerifyConfig):
    n = 4
    t0 = Fraction(cfg.t0_list[0])
    want = {(2, 2, 2, 0): ("Eigen", None),
            (3, 0, 0, 0): ("Eigen", None),
            (4, 3, 2, 0): ("JordanBlock", (3, 3, 3, 0))}
    for lam, expect in want.items():
        got = operator_structure(lam, n, t0)
        if got != expect:
            return False, f"{lam}: {got} != {expect}"
    return True, "Eigen for (2,2,2,0),(3,0,0,0); Jordan with (3,3,3,0) for (4,3,2,0)"


def criterion_8(cfg: VerifyConfig):
    """Exhaustive search finds exactly the two predicted collision
    partners of every Case A partition."""
    for n in range(4, 7):
        for d in range(13):
            for lam in pt.enumerate_partitions(n, d):
                if not pt.is_admissible(lam):
                    continue
                tag = pt.classify(lam)
                if tag.case is not pt.Case.A:
                    continue
                i = tag.pivot - 1
                a = lam[i]
                mu1 = lam[:i] + (a + 1, a - 1, a - 1, a - 1) + lam[i + 4:]
                mu2 = lam[:i] + (a + 1, a, a - 1, a - 2) + lam[i + 4:]
                if mu1 != tag.companion:
                    return False, f"{lam}: companion formula disagrees"
                found = set(pt.companions_bruteforce(lam))
                if found != {mu1, mu2}:
                    return False, f"{lam}: found {sorted(found)}"
    return True, "every Case A lam (n<=6, |lam|<=12) has exactly the two partners"


def criterion_9(cfg: VerifyConfig):
    n = 4
    t0 = Fraction(2)
    rng = random.Random(cfg.seed)
    pool = [lam for d in range(6) for lam in pt.enumerate_partitions(n, d)]
    for _ in range(20):
        lam = pool[rng.randrange(len(pool))]
        mu = pool[rng.randrange(len(pool))]
        if not symmetry_check(lam, mu, n, t0):
            return False, f"symmetry fails for {lam}, {mu}"
    return True, "20 seeded random pairs, n=4, t0=2"


def criterion_10(cfg: VerifyConfig):
    n = 4
    t0 = Fraction(cfg.t0_list[0])
    q0 = 1 / t0 ** 2
    for lam in _gap2_partitions(n, 12):
        g = specialize_q(macdonald(lam, n, t0), q0)
        if not divisible_by_double_product(g, t0):
            return False, f"{lam} not divisible"
    return True, "all gap>=2 partitions, |lam|<=12, n=4, divisible"


def criterion_11(cfg: VerifyConfig):
    """Minimal generator degrees match the closed forms; computed
    degree multisets are stable reference values."""
    for n, want in ((4, 3), (5, 8), (6, 15)):
        if min_degree_formula(n) != want:
            return False, f"M({n}) != {want}"
    for n in (4, 5, 6):
        if min_degree_formula(n, 3) != ((n - 1) ** 2) // 2:
            return False, f"M({n},3) != floor((n-1)^2/2)"
    checks = [
        (double_diagonal(4), 14, [3, 4]),
        (pfold(4, 3), 8, [4, 6]),
        (double_diagonal(5), 18, [8, 9, 10]),
        (pfold(5, 3), 13, [8, 9, 10]),
    ]
    for spec, D, want in checks:
        got = generator_degrees(spec, D)
        if got != want:
            return False, f"{spec}: degrees {got} != {want}"
        if min(got) != min_degree_formula(spec.n,
                                          spec.p if spec.kind == "pfold"
                                          else None):
            return False, f"{spec}: minimal degree mismatch"
    return True, "minimal degrees = closed forms; multisets stable (incl. none above)"


def criterion_12(cfg: VerifyConfig):
    for n in (4, 5):
        lam, _ = lambda_min_generator(n)  # raises ProportionalityFailure
        if sum(lam) != min_degree_formula(n):
            return False, f"n={n}: |lambda_min| != M(n)"
    return True, "Q(x) proportional to the specialized polynomial, n=4,5"


def criterion_13(cfg: VerifyConfig):
    n = 4
    for d in range(7):
        for lam in pt.admissible_partitions(n, d):
            f = modified_interp_at_half(lam, n)  # PoleAtPoint = failure
            bad = shifted_vanishing_sweep(f, d + 3)
            if bad:
                return False, f"{lam}: fails at {bad[0]}"
    lam, nu = (2, 2, 2, 0), (3, 1, 1, 1)
    if not (zeta_half(jack_u0(lam, n)) == zeta_half(jack_u0(nu, n)) == n // 2 - 2):
        return False, "principal-value zeta mismatch"
    if not normalization_zeta(nu) > 0:
        return False, "companion normalization value does not vanish"
    for d in range(7):
        for lam in pt.admissible_partitions(n, d):
            pieri_check(lam, n)  # NoRepresentation = failure
    return True, "n=4 |lam|<=6: finite, shifted vanishing, zeta facts, Pieri exact"


def criterion_14(cfg: VerifyConfig):
    for n in (1, 2, 3, 4):
        for d in range(5):
            for lam in pt.enumerate_partitions(n, d):
                g = dehomogenize(jack(lam, n))
                h = interp_jack(lam, n)
                diff = g - h
                if any(not QTHETA.is_zero(c) for c in diff.terms.values()):
                    return False, f"n={n} {lam}: images differ"
    rng = random.Random(cfg.seed)
    n = 3
    f = MultiPoly(n, QTHETA)
    for lam in pt.enumerate_partitions(n, 3):
        f = f + expand(SymPoly.monomial(lam, n, QTHETA,
                                        Fraction(rng.randrange(-9, 10))))
    a = knop_sahi_apply(1, knop_sahi_apply(2, f))
    b = knop_sahi_apply(2, knop_sahi_apply(1, f))
    diff = a - b
    if any(not QTHETA.is_zero(c) for c in diff.terms.values()):
        return False, "difference operators do not commute"
    return True, "images agree for |lam|<=4, n<=4; operators commute on random cubic"


def criterion_15(cfg: VerifyConfig):
    for d in range(11):
        quotient, admissible = dual_ring_spanning(4, d)
        if quotient != admissible:
            return False, f"d={d}: {quotient} != {admissible}"
    return True, "quotient dimension = admissible count, n=4, d<=10"


def criterion_16(cfg: VerifyConfig):
    s21, s10, s1 = filtration_check(4, 14)
    t1, t2, t3 = hilbert_series_theorem_terms(4, 14)
    if (s21, s10, s1) != (t1, t2, t3):
        return False, "quotient series differ from the three closed terms"
    return True, "three filtration quotient series match, n=4, d<=14"


CRITERIA = [
    (1, "Hilbert series triple equality", criterion_1),
    (2, "per-case generating functions", criterion_2),
    (3, "modified-polynomial basis of the ideal", criterion_3),
    (4, "t-deformed basis at q = t0^-2", criterion_4),
    (5, "zeta agreement and special families", criterion_5),
    (6, "pole structure", criterion_6),
    (7, "operator structure", criterion_7),
    (8, "companion search", criterion_8),
    (9, "evaluation symmetry", criterion_9),
    (10, "double-product divisibility", criterion_10),
    (11, "generator degrees", criterion_11),
    (12, "minimal-degree generator identification", criterion_12),
    (13, "interpolation theorem", criterion_13),
    (14, "dehomogeneization", criterion_14),
    (15, "dual-ring spanning", criterion_15),
    (16, "filtration", criterion_16),
]


def run_all(cfg: VerifyConfig | None = None, report=print) -> bool:
    cfg = cfg or VerifyConfig()
    all_ok = True
    for num, name, fn in CRITERIA:
        ok, detail = fn(cfg)
        all_ok = all_ok and ok
        report(f"criterion {num:2d} ({name}): {'PASS' if ok else 'FAIL'} - {detail}")
    return all_ok
