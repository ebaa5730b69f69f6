from collections import Counter

import pytest

from rootloci import partitions as pt
from rootloci.errors import NotAdmissible, WeightMismatch


def _partition_count(d):
    # independent oracle: Euler recurrence via restricted counting
    table = [[0] * (d + 1) for _ in range(d + 1)]
    for k in range(d + 1):
        table[k][0] = 1
    for k in range(1, d + 1):
        for w in range(1, d + 1):
            table[k][w] = table[k - 1][w] + (table[k][w - k] if w >= k else 0)
    return table[d][d]


def test_enumerate_partitions_counts():
    for d in range(9):
        got = pt.enumerate_partitions(d if d else 1, d)
        assert len(got) == _partition_count(d)
        for lam in got:
            assert sum(lam) == d
            assert all(a >= b for a, b in zip(lam, lam[1:]))
    # length restriction
    assert pt.enumerate_partitions(2, 4) == [(4, 0), (3, 1), (2, 2)]


def test_conjugate_involution():
    for lam in pt.enumerate_partitions(5, 7):
        stripped = tuple(p for p in lam if p)
        assert pt.conjugate(pt.conjugate(stripped)) == stripped


def test_dominance():
    D = pt.Dominance
    assert pt.dominance((4, 0, 0), (2, 2, 0)) is D.Greater
    assert pt.dominance((2, 2, 0), (4, 0, 0)) is D.Less
    assert pt.dominance((3, 1, 1), (3, 1, 1)) is D.Equal
    assert pt.dominance((3, 1, 1, 1), (2, 2, 2, 0)) is D.Incomparable
    with pytest.raises(WeightMismatch):
        pt.dominance((2, 0), (1, 0))


def _admissible_oracle(lam):
    """Direct restatement of the two forbidden dual-monomial patterns."""
    c = Counter(lam)
    # e_i^3 e_{i+2}
    for v in c:
        if c[v] >= 3 and c.get(v + 2, 0) >= 1:
            return False
    # product of two quadratic factors e_a^2 / e_a e_{a+1}
    quads = []
    for v in c:
        quads.append(Counter({v: 2}))
        quads.append(Counter({v: 1, v + 1: 1}))
    for p1 in quads:
        for p2 in quads:
            need = p1 + p2
            if all(c.get(v, 0) >= m for v, m in need.items()):
                return False
    return True


def test_is_admissible_matches_oracle():
    for n in (3, 4, 5):
        for d in range(11):
            for lam in pt.enumerate_partitions(n, d):
                assert pt.is_admissible(lam) == _admissible_oracle(lam), lam


def test_admissible_examples():
    assert pt.is_admissible((2, 2, 2, 0))
    assert not pt.is_admissible((2, 2, 0, 0))     # e_2^2 e_0^2
    assert not pt.is_admissible((1, 1, 1, 0))     # e_1^3 e_... pattern pair
    assert not pt.is_admissible((3, 2, 1, 0))     # two adjacent steps
    assert pt.is_admissible((4, 2, 0, 0))


def test_classify_cases():
    tag = pt.classify((2, 2, 2, 0))
    assert tag.case is pt.Case.A and tag.pivot == 1
    assert tag.companion == (3, 1, 1, 1)
    tag = pt.classify((4, 0, 0, 0))
    assert tag.case is pt.Case.C and tag.companion is None
    with pytest.raises(NotAdmissible):
        pt.classify((2, 2, 0, 0))


def test_case_b_companion_weight_preserved():
    for d in range(4, 10):
        for lam in pt.admissible_partitions(4, d):
            tag = pt.classify(lam)
            if tag.companion is not None:
                assert sum(tag.companion) == sum(lam)
                assert pt.diagonal_multiset(tag.companion) != Counter()


def test_companions_bruteforce_case_a():
    found = pt.companions_bruteforce((2, 2, 2, 0))
    assert (3, 1, 1, 1) in found and len(found) == 2


def test_count_by_case_consistent():
    for d in range(12):
        counts = pt.count_admissible_by_case(4, d)
        assert sum(counts.values()) == len(pt.admissible_partitions(4, d))


def test_zeta_u0_combinatorial_known():
    # floor(n/2) - 2 for the paired thick family at n = 4
    assert pt.zeta_u0_combinatorial((2, 2, 2, 0), 4) == 0
    assert pt.zeta_u0_combinatorial((3, 1, 1, 1), 4) == 0


def test_n_stat():
    assert pt.n_stat((3, 2, 1)) == 0 * 3 + 1 * 2 + 2 * 1
