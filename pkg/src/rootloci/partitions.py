"""Integer-partition combinatorics for the double-double root locus.

Partitions are plain tuples of nonnegative integers, weakly decreasing,
always padded to the ambient length n (trailing zeros explicit).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import NotAdmissible, WeightMismatch

Partition = tuple[int, ...]


def check_partition(lam: Partition) -> Partition:
    lam = tuple(int(p) for p in lam)
    for i in range(len(lam) - 1):
        if lam[i] < lam[i + 1]:
            raise ValueError(f"not weakly decreasing: {lam}")
    if lam and lam[-1] < 0:
        raise ValueError(f"negative part: {lam}")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    """Conjugate partition (column heights); trailing zeros dropped."""
    if not lam or lam[0] == 0:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def enumerate_partitions(n: int, d: int) -> list[Partition]:
    """All partitions of d into at most n parts, padded to length n,
    in descending lexicographic order."""
    if n < 1:
        raise ValueError("need n >= 1")
    if d < 0:
        raise ValueError("need d >= 0")
    out: list[Partition] = []

    def rec(remaining: int, maxpart: int, prefix: list[int], slots: int):
        if remaining == 0:
            out.append(tuple(prefix) + (0,) * slots)
            return
        if slots == 0:
            return
        for p in range(min(remaining, maxpart), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix, slots - 1)
            prefix.pop()

    rec(d, d, [], n)
    return out


# ---------------------------------------------------------------------
# dominance order
# ---------------------------------------------------------------------

class Dominance(enum.Enum):
    Less = "Less"
    Greater = "Greater"
    Equal = "Equal"
    Incomparable = "Incomparable"


def dominance(lam: Partition, mu: Partition) -> Dominance:
    if weight(lam) != weight(mu):
        raise WeightMismatch(f"|{lam}| != |{mu}|")
    le = ge = True
    s = t = 0
    for a, b in zip(lam, mu):
        s += a
        t += b
        if s < t:
            ge = False
        if s > t:
            le = False
    if le and ge:
        return Dominance.Equal
    if ge:
        return Dominance.Greater
    if le:
        return Dominance.Less
    return Dominance.Incomparable


def dominated_by(mu: Partition, lam: Partition) -> bool:
    """mu <= lam in dominance (same weight assumed)."""
    return dominance(lam, mu) in (Dominance.Greater, Dominance.Equal)


# ---------------------------------------------------------------------
# admissibility
# ---------------------------------------------------------------------

def exponent_counts(lam: Partition) -> Counter:
    """Multiset {value: multiplicity} of the parts of lam."""
    return Counter(lam)


def _pair_options(counts: Counter) -> list[Counter]:
    """Candidate quadratic factors: e_i^2 or e_j e_{j+1}, as demand multisets."""
    opts = []
    for v, c in counts.items():
        if c >= 2:
            opts.append(Counter({v: 2}))
        if counts.get(v + 1, 0) >= 1:
            opts.append(Counter({v: 1, v + 1: 1}))
    return opts


def is_admissible(lam: Partition) -> bool:
    """True iff the dual monomial avoids both forbidden quartic patterns:
    a product of two factors each of shape e_i^2 or e_j e_{j+1}, or the
    shape e_i^3 e_{i+2}.  Factors may share indices; letters are drawn
    with multiplicity."""
    counts = exponent_counts(lam)
    for v, c in counts.items():
        if c >= 3 and counts.get(v + 2, 0) >= 1:
            return False
    opts = _pair_options(counts)
    for i, p1 in enumerate(opts):
        for p2 in opts[i:]:
            demand = p1 + p2
            if all(counts.get(v, 0) >= m for v, m in demand.items()):
                return False
    return True


# ---------------------------------------------------------------------
# Case A / B / C classification and companions
# ---------------------------------------------------------------------

class Case(enum.Enum):
    A = "A"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class CaseTag:
    case: Case
    pivot: Optional[int] = None  # 1-based index i
    companion: Optional[Partition] = None


def _gaps_ok(lam: Partition, js: Iterator[int]) -> bool:
    n = len(lam)
    for j in js:
        if 1 <= j <= n - 1 and lam[j - 1] - lam[j] < 2:
            return False
    return True


def classify(lam: Partition) -> CaseTag:
    """Classify an admissible partition into Case A/B/C with companion."""
    if not is_admissible(lam):
        raise NotAdmissible(f"{lam} is not admissible")
    n = len(lam)
    # Case A: lam_i = lam_{i+1} = lam_{i+2} = lam_{i+3} + 2, with gap
    # conditions lam_{i-1} - lam_i > 2 (i >= 2) and gaps >= 2 outside.
    for i in range(1, n - 2):  # i+3 <= n
        a = lam[i - 1]
        if lam[i] == a and lam[i + 1] == a and lam[i + 2] == a - 2:
            if i >= 2 and lam[i - 2] - a <= 2:
                continue
            if not _gaps_ok(lam, iter(list(range(1, i - 1)) + list(range(i + 3, n)))):
                continue
            nu = list(lam)
            nu[i - 1] += 1
            nu[i] -= 1
            nu[i + 1] -= 1
            nu[i + 2] += 1
            return CaseTag(Case.A, i, check_partition(nu))
    # Case B: lam_i = lam_{i+1} + 1 = lam_{i+2} + 2, gaps >= 2 outside.
    for i in range(1, n - 1):  # i+2 <= n
        a = lam[i - 1]
        if lam[i] == a - 1 and lam[i + 1] == a - 2:
            if not _gaps_ok(lam, iter(list(range(1, i)) + list(range(i + 2, n)))):
                continue
            nu = list(lam)
            nu[i - 1] -= 1
            nu[i + 1] += 1
            return CaseTag(Case.B, i, check_partition(nu))
    return CaseTag(Case.C)


def diagonal_multiset(lam: Partition) -> Counter:
    """Multiset {j + 2*lam_j : 1 <= j <= n}; equality of these multisets
    detects eigenvalue collision at the special parameter point."""
    return Counter(j + 2 * p for j, p in enumerate(lam, start=1))


def companions_bruteforce(lam: Partition) -> list[Partition]:
    """All mu != lam of the same weight and length with the same diagonal
    multiset, by exhaustive search."""
    target = diagonal_multiset(lam)
    return [mu for mu in enumerate_partitions(len(lam), weight(lam))
            if mu != lam and diagonal_multiset(mu) == target]


# ---------------------------------------------------------------------
# box statistics and the zero/pole count of the principal specialization
# ---------------------------------------------------------------------

def boxes(lam: Partition) -> list[tuple[int, int]]:
    """Young-diagram boxes (i, j), 1-based, row i of length lam_i."""
    return [(i, j) for i, p in enumerate(lam, start=1) for j in range(1, p + 1)]


def arm(lam: Partition, box: tuple[int, int]) -> int:
    i, j = box
    return lam[i - 1] - j


def leg(lam: Partition, box: tuple[int, int]) -> int:
    i, j = box
    conj = conjugate(lam)
    return conj[j - 1] - i


def coarm(box: tuple[int, int]) -> int:
    return box[1] - 1


def coleg(box: tuple[int, int]) -> int:
    return box[0] - 1


def n_stat(lam: Partition) -> int:
    """n(lam) = sum (i-1) lam_i."""
    return sum((i - 1) * p for i, p in enumerate(lam, start=1))


def zeta_u0_combinatorial(lam: Partition, n: int) -> int:
    """Multiplicity of the special linear factor in the principal
    specialization, computed purely from box statistics: boxes with
    (coleg, coarm) = (n-2l, l) count +1, boxes with (leg, arm) = (2l-1, l)
    count -1, over all integers l >= 1."""
    conj = conjugate(lam)
    plus = minus = 0
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            lp, ap = i - 1, j - 1
            if ap >= 1 and lp == n - 2 * ap:
                plus += 1
            a = p - j
            l = conj[j - 1] - i
            if a >= 1 and l == 2 * a - 1:
                minus += 1
    return plus - minus


# ---------------------------------------------------------------------
# the four counting cases for the admissible generating function
# ---------------------------------------------------------------------

def _counting_case(lam: Partition) -> int:
    """Which of the four displayed counting patterns an admissible
    partition matches (1..4); raises if none or several."""
    n = len(lam)
    matches = set()
    if all(lam[j - 1] - lam[j] >= 2 for j in range(1, n)):
        matches.add(1)
    for i in range(1, n - 1):  # needs lam_{i+2}
        if lam[i - 1] == lam[i] == lam[i + 1]:
            if i >= 2 and lam[i - 2] - lam[i - 1] < 3:
                continue
            if all(lam[j - 1] - lam[j] >= 2
                   for j in range(1, n) if j <= i - 2 or j >= i + 2):
                matches.add(2)
    for i in range(1, n):  # needs lam_{i+1}
        if lam[i - 1] == lam[i]:
            if i >= 2 and lam[i - 2] - lam[i - 1] < 1:
                continue
            if all(lam[j - 1] - lam[j] >= 2
                   for j in range(1, n) if j <= i - 2 or j >= i + 1):
                matches.add(3)
    for i in range(1, n):
        if lam[i - 1] == lam[i] + 1:
            if all(lam[j - 1] - lam[j] >= 2
                   for j in range(1, n) if j <= i - 2 or j >= i + 1):
                matches.add(4)
    if len(matches) != 1:
        raise AssertionError(f"counting cases not disjoint/exhaustive for {lam}: {matches}")
    return matches.pop()


def count_admissible_by_case(n: int, d: int) -> dict[int, int]:
    """Counts of admissible partitions in each of the four counting cases;
    keys 1..4, values sum to the number of admissible partitions."""
    counts = {1: 0, 2: 0, 3: 0, 4: 0}
    for lam in enumerate_partitions(n, d):
        if is_admissible(lam):
            counts[_counting_case(lam)] += 1
    return counts


def admissible_partitions(n: int, d: int) -> list[Partition]:
    return [lam for lam in enumerate_partitions(n, d) if is_admissible(lam)]
