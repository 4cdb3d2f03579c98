import itertools

import numpy as np
import pytest

from qmatroids import corpus as cp
from qmatroids import qdelta as qd
from qmatroids import qmatroid as qm
from qmatroids.errors import (
    BasisMismatch, IncompleteTable, InvalidDimension, NotAQMatroid, PreconditionViolated,
)
from qmatroids.subspace import intersect, perp, subspace_sum


def test_uniform_examples(lat):
    U0, U2, U4 = (qm.uniform(k, 4) for k in (0, 2, 4))
    assert not U0.rank.any() and U0.families.bases == {lat.zero}
    assert U4.families.bases == {lat.top}
    assert U2.families.bases == set(lat.by_dim[2])
    assert list(U2.rank) == [min(2, d) for d in lat.dims]
    with pytest.raises(InvalidDimension):
        qm.uniform(5, 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_all_uniforms_validate(n):
    for k in range(n + 1):
        assert qm.validate(qm.uniform(k, n))


def test_validate_reports_r1(lat):
    ranks = np.array([min(2, d) for d in lat.dims])
    ranks[lat.zero] = 1
    rep = qm.validate(qm.QMatroid(lat, ranks))
    assert not rep and rep.axiom == "R1" and rep.witness["A"] == lat[lat.zero]


def test_validate_reports_r3(lat):
    # rank 1 on two points but 2 on their span and 1 on the others: violates submodularity elsewhere
    ranks = np.array([min(1, d) for d in lat.dims])
    ranks[lat.top] = 2
    rep = qm.validate(qm.QMatroid(lat, ranks))
    assert not rep and rep.axiom == "R3"


def test_incomplete_table(lat):
    with pytest.raises(IncompleteTable):
        qm.QMatroid(lat, np.zeros(10, dtype=np.int64))


def test_from_bases_rank_matches_max_intersection_oracle(lat, sandwich):
    for M in sandwich:
        bases = [lat[b] for b in M.families.bases]
        for i in range(lat.size):
            assert M.r(i) == max(intersect(lat[i], b).dim for b in bases)


def test_sandwich_pair_facts(lat, sandwich):
    M1, M2 = sandwich
    e123, e12, e34 = lat.unit_id(1, 2, 3), lat.unit_id(1, 2), lat.unit_id(3, 4)
    assert M1.r(e123) == 2 and M1.full_rank == 3
    assert M2.r(e12) == 1 and M2.r(e34) == 1 and M2.full_rank == 2
    assert len(M1.families.bases) == 14 and len(M2.families.bases) == 33
    assert e123 not in M1.families.independents


def test_from_bases_round_trip(qcorpus):
    for M in qcorpus.values():
        assert qm.from_bases(M.families.bases, M.lattice) == M


def test_from_bases_rejects_spread(lat):
    lines = [f for f in qd.spread(2).feasible if lat.dim(f) == 2]
    with pytest.raises(NotAQMatroid):
        qm.from_bases(lines, lat)


def test_from_bases_basis_mismatch(lat):
    # the downset is U(2,4), whose bases omit the extra point
    with pytest.raises(BasisMismatch):
        qm.from_bases(lat.by_dim[2] + [lat.unit_id(1)], lat)


def test_derived_families_by_definition(qcorpus):
    for M in qcorpus.values():
        lat, r = M.lattice, M.rank
        fam = qm.derived(M)
        indep = {i for i in range(lat.size) if r[i] == lat.dim(i)}
        assert fam.independents == indep
        assert fam.bases == {i for i in indep if not any(j in indep for j in lat.up(i))}
        assert fam.spanning == {i for i in range(lat.size) if r[i] == M.full_rank}
        dep = set(range(lat.size)) - indep
        assert fam.circuits == {c for c in dep if all(d in indep for d in lat.down(c))}
        flats = {a for a in range(lat.size) if all(r[lat.join(a, x)] > r[a] for x in lat.points_outside(a))}
        assert fam.flats == flats
        proper = flats - {lat.top}
        assert fam.hyperplanes == {f for f in proper if not any(lat.leq(f, g) and f != g for g in proper)}
        assert fam.loops == {z for z in lat.points if r[z] == 0}
        assert fam.coloops == qm.dual(M).families.loops


def test_derived_examples(lat, sandwich):
    U2 = qm.uniform(2, 4)
    assert U2.families.circuits == set(lat.by_dim[3])
    assert qm.uniform(0, 4).families.loops == set(lat.points)
    M1 = sandwich[0]
    assert M1.families.circuits == {lat.unit_id(1, 2, 3)}


def test_closure(qcorpus, lat):
    U2 = qm.uniform(2, 4)
    assert qm.closure(U2, lat.by_dim[3][0]) == lat[lat.top]
    for M in qcorpus.values():
        cl = [lat.id_of(qm.closure(M, i)) for i in range(lat.size)]
        for i in range(lat.size):
            assert cl[i] in M.families.flats and M.r(cl[i]) == M.r(i) and lat.leq(i, cl[i])
        for f in M.families.flats:
            assert cl[f] == f
        for i, j in itertools.product(range(lat.size), repeat=2):
            if lat.leq(i, j):
                assert lat.leq(cl[i], cl[j])


def test_dual_examples(lat):
    U2 = qm.uniform(2, 4)
    assert qm.dual(U2) == U2
    assert qm.dual(qm.uniform(0, 4)) == qm.uniform(4, 4)
    assert qm.dual(U2).r(lat.unit_id(1, 2)) == 2


@pytest.mark.parametrize("use_alt", [False, True])
def test_dual_involution_and_bases(use_alt):
    form = cp.alt_form() if use_alt else None
    for M in cp.qmatroid_corpus(form).values():
        D = qm.dual(M, form)
        assert qm.dual(D, form) == M
        assert {perp(M.lattice[b], form) for b in M.families.bases} == {D.lattice[b] for b in D.families.bases}
        # formula, evaluated with subspace operations rather than the perp table
        for i in range(M.lattice.size):
            a = M.lattice[i]
            assert D.r(i) == a.dim - M.full_rank + M.r(perp(a, form))


def test_unit_rank_increase(qcorpus):
    for M in qcorpus.values():
        lat = M.lattice
        for a in range(lat.size):
            for b in lat.up(a):
                assert M.r(a) <= M.r(b) <= M.r(a) + 1


def test_submodularity_with_subspace_ops(sandwich):
    M1 = sandwich[0]
    lat = M1.lattice
    for i, j in itertools.combinations(range(0, lat.size, 3), 2):
        a, b = lat[i], lat[j]
        assert M1.r(subspace_sum(a, b)) + M1.r(intersect(a, b)) <= M1.r(a) + M1.r(b)


def test_minors(lat):
    U2 = qm.uniform(2, 4)
    X = lat.unit_id(1, 2, 4)
    R = qm.minor(U2, X, "restrict")
    assert R.ground_dim == 3 and len(R.members) == 16
    assert all(R.rank(a) == min(2, lat.dim(a)) for a in R.members)
    C0 = qm.minor(U2, lat.zero, "contract")
    assert all(C0.rank(a) == U2.r(a) for a in range(lat.size))
    x = lat.unit_id(3)
    C = qm.minor(U2, x, "contract")
    assert C.ground_dim == 3
    assert all(C.rank(a) == min(2, lat.dim(a)) - 1 for a in C.members)
    with pytest.raises(PreconditionViolated):
        C.rank(lat.unit_id(1))


def test_minor_duality_manual_tool(lat):
    # X = <e1,e2> is not isotropic, and E/X ~ X^perp via the coordinates e3, e4
    M = cp.qmatroid_corpus()["code:split2"]
    X = lat.unit_id(1, 2)
    contr = qm.minor(qm.dual(M), X, "contract")
    restr = qm.minor(M, lat.perp_table()[X], "restrict")
    # (M*/X)* versus M|X^perp, via A -> A ^ X^perp on [X, E]
    p = lat.perp_table()
    dual_contr_rank = {a: (contr.dim(a) - contr.rank(lat.top) + contr.rank(lat.join(X, p[a]))) for a in contr.members}
    mapping = {a: lat.meet(a, p[X]) for a in contr.members}
    for a in contr.members:
        assert dual_contr_rank[a] == restr.rank(mapping[a])


def test_fundamental_circuit(lat, sandwich):
    U2 = qm.uniform(2, 4)
    A = lat.unit_id(1, 2, 3)
    assert qm.fundamental_circuit(U2, lat.unit_id(1, 2), A) == lat[A]
    M1 = sandwich[0]
    assert qm.fundamental_circuit(M1, lat.unit_id(1, 2), A) == lat[A]
    with pytest.raises(PreconditionViolated):
        qm.fundamental_circuit(U2, lat.unit_id(1), lat.unit_id(1, 2))


def test_fundamental_circuit_unique_everywhere(qcorpus):
    for M in qcorpus.values():
        lat, fam = M.lattice, M.families
        for x in fam.independents:
            for a in lat.up(x):
                if a not in fam.independents:
                    c = lat.id_of(qm.fundamental_circuit(M, x, a))
                    assert c in fam.circuits and lat.leq(c, a)


def test_no_point_in_every_basis(qcorpus):
    for M in qcorpus.values():
        if M.families.bases != {M.lattice.top}:
            assert qm.points_in_every_basis(M) == []


def test_dump_format(lat):
    text = qm.dump_ranks(qm.uniform(2, 4))
    lines = text.splitlines()
    assert lines[0] == "# qmatroid-ranks q=2 n=4"
    assert lines[1] == "0 0 0 0"
    assert lines[-1] == "66 4 2 1000 0100 0010 0001"
    assert len(lines) == 68
