import math

import numpy as np
import pytest

from qmatroids import corpus as cp
from qmatroids import qdelta as qd
from qmatroids import qmatroid as qm
from qmatroids.errors import AmbientMismatch, LengthMismatch, NotNested, PreconditionViolated, UnsupportedAmbient
from qmatroids.qg import qg_family
from qmatroids.rmcodes import (
    ExtFieldTower,
    RankMetricCode,
    code_qmatroid,
    dual_code,
    gabidulin,
    is_nested,
    nested_pair,
    oracle_rank,
    rank_support,
    represents_strongly,
    represents_weakly,
    subcode,
    subcode_dim,
)
from qmatroids.subspace import canonicalize, contains, full_space, lattice, zero_space


def brute_subcode_dim(C, J):
    """Count codewords supported in J; the count is (q^m)^dim."""
    inside = sum(1 for c in C.codewords() if contains(J, rank_support(C, c)))
    return round(math.log(inside, C.tower.top.q))


def test_tower_round_trip():
    for q, m in [(2, 1), (2, 2), (2, 4), (2, 6), (2, 12), (3, 2), (3, 4), (5, 2)]:
        tw = ExtFieldTower.of(q, m)
        if tw.top.q > 2**12:
            continue
        for x in tw.top.elements():
            assert tw.recombine(tw.expand(x)) == x
            assert len(tw.expand(x)) == m
        assert tw.frobenius(tw.basis()[-1], m) == tw.basis()[-1]
    with pytest.raises(UnsupportedAmbient):
        ExtFieldTower.of(4, 2)


def test_rank_support_examples():
    t2 = cp.tower(2)
    C = RankMetricCode.from_rows(t2, [[1, 2, 0, 0]])
    F2 = t2.base
    assert rank_support(C, (0, 0, 0, 0)) == zero_space(F2, 4)
    s = rank_support(C, (1, 1, 0, 0))
    assert s == canonicalize(F2, 4, [(1, 1, 0, 0)]) and s.dim == 1
    s = rank_support(C, (1, 2, 0, 0))
    assert s == canonicalize(F2, 4, [(1, 0, 0, 0), (0, 1, 0, 0)]) and s.dim == 2
    with pytest.raises(LengthMismatch):
        rank_support(C, (1, 2, 0))


def test_rank_weight_is_support_dim():
    C = cp.codes()["gab2"]
    tw = C.tower
    for c in list(C.codewords())[:64]:
        M = np.array([tw.expand(x) for x in c])
        # rank over F_2 of the expansion matrix, computed by elimination on bitmasks
        rows = [int("".join(map(str, col)), 2) for col in M.T]
        basis = []
        for r in rows:
            for b in basis:
                r = min(r, r ^ b)
            if r:
                basis.append(r)
        assert rank_support(C, c).dim == len(basis)


def test_subcode_dim_examples():
    t2 = cp.tower(2)
    C = RankMetricCode.from_rows(t2, [[1, 2]])
    F2 = t2.base
    assert subcode_dim(C, full_space(F2, 2)) == 1
    assert subcode_dim(C, zero_space(F2, 2)) == 0
    e1 = canonicalize(F2, 2, [(1, 0)])
    assert subcode_dim(C, e1) == 0 == brute_subcode_dim(C, e1)
    with pytest.raises(AmbientMismatch):
        subcode_dim(C, full_space(F2, 3))


@pytest.mark.parametrize("name", ["gab1", "gab2", "split2", "short1", "rep1"])
def test_subcode_dim_matches_enumeration(name):
    C = cp.codes()[name]
    lat = lattice(C.tower.q, C.n)
    for i in range(lat.size):
        assert subcode_dim(C, lat[i]) == brute_subcode_dim(C, lat[i])


def test_subcode_dim_over_gf3():
    tw = ExtFieldTower.of(3, 2)
    C = RankMetricCode.from_rows(tw, [[1, 3, 0]])
    lat = lattice(3, 3)
    for i in range(lat.size):
        assert subcode_dim(C, lat[i]) == brute_subcode_dim(C, lat[i])
    assert code_qmatroid(C).families.bases


def test_code_qmatroid_examples():
    t4 = cp.tower(4)
    full = RankMetricCode.from_rows(t4, np.eye(4, dtype=int).tolist())
    assert code_qmatroid(full) == qm.uniform(4, 4)
    for k in range(5):
        assert code_qmatroid(gabidulin(t4, k, 4)) == qm.uniform(k, 4)
    split = code_qmatroid(cp.codes()["split2"])
    assert split.full_rank == 2 and split != qm.uniform(2, 4)


@pytest.mark.parametrize("use_alt", [False, True])
def test_oracle_agrees(use_alt):
    form = cp.alt_form() if use_alt else None
    for name, C in cp.codes().items():
        M = code_qmatroid(C, form)
        lat = M.lattice
        assert all(oracle_rank(C, lat[i], form) == M.r(i) for i in range(lat.size)), name


def test_dual_code_gives_dual_qmatroid():
    for name, C in cp.codes().items():
        D = dual_code(C)
        assert D.k == C.n - C.k
        assert code_qmatroid(D) == qm.dual(code_qmatroid(C)), name


def test_nested_pairs(lat):
    c = cp.codes()
    g2, g1 = c["gab2"], c["gab1"]
    pair = nested_pair(g2, g1)
    assert pair.certificate == "strong"
    assert (pair.m_upper, pair.m_lower) == (qm.uniform(2, 4), qm.uniform(1, 4))
    want = {f for f in range(lat.size)
            if lat.dim(f) <= 2 and pair.m_upper.r(f) == lat.dim(f) and pair.m_lower.r(f) >= 1}
    fam = qg_family(pair).feasible
    assert fam == want
    assert qd.check_f1f2(lat, fam) and qd.check_f3f4(lat, fam)
    assert nested_pair(g2, g2).certificate == "strong"
    full = RankMetricCode.from_rows(g2.tower, np.eye(4, dtype=int).tolist())
    for C in (g1, g2, c["gab3"], c["split2"], c["rep1"]):
        assert nested_pair(full, C).m_upper == qm.uniform(4, 4)
    with pytest.raises(NotNested):
        nested_pair(g1, g2)
    with pytest.raises(NotNested):
        nested_pair(c["split2"], g1)
    assert is_nested(c["gab3"], g1) and not is_nested(c["split2"], c["rep1"])


def test_representability(lat):
    c = cp.codes()
    pair = nested_pair(c["gab2"], c["gab1"])
    assert represents_weakly(pair.m_upper, pair.m_lower, c["gab2"], c["gab1"])
    assert not represents_weakly(pair.m_lower, pair.m_upper, c["gab2"], c["gab1"])
    fam = qg_family(pair)
    assert represents_strongly(fam, c["gab2"], c["gab1"])
    rep = represents_strongly(fam.feasible - {min(fam.feasible)}, c["gab2"], c["gab1"])
    assert not rep


def test_construction_errors():
    t4 = cp.tower(4)
    with pytest.raises(PreconditionViolated):
        RankMetricCode.from_rows(t4, [[1, 1, 0, 0], [1, 1, 0, 0]])
    with pytest.raises(PreconditionViolated):
        gabidulin(t4, 2, 5)
    with pytest.raises(PreconditionViolated):
        gabidulin(t4, 1, 2, g=[1, 1])
    with pytest.raises(AmbientMismatch):
        nested_pair(cp.codes()["gab2"], cp.codes()["short1"])
    assert subcode(cp.codes()["gab2"], [1]).k == 1
