"""q-matroids given by an exact rank table over the subspace lattice.

The rank function lives in a dense array indexed by lattice id. Constructors
(:func:`uniform`, :func:`from_bases`, :func:`dual`) always validate the
rank axioms before returning; the bare :class:`QMatroid` constructor does not,
so deliberately broken tables can be built and fed to :func:`validate`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping

import numpy as np

from .errors import (
    BasisMismatch,
    IncompleteTable,
    InternalInconsistency,
    InvalidDimension,
    LatticeMismatch,
    NonUnique,
    NotAQMatroid,
    PreconditionViolated,
)
from .reports import AxiomReport
from .subspace import BilinearForm, LatticeIndex, Subspace, lattice


class QMatroid:
    """A q-matroid on F_q^n: a lattice, a rank per lattice id, and a bilinear form."""

    def __init__(self, lat: LatticeIndex, rank, form: BilinearForm | None = None):
        rank = np.asarray(rank, dtype=np.int64)
        if rank.shape != (lat.size,):
            raise IncompleteTable(f"rank table has {rank.size} entries, lattice has {lat.size}")
        rank.setflags(write=False)
        self.lattice = lat
        self.rank = rank
        self.form = form if form is not None else BilinearForm.identity(lat.field, lat.n)

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def q(self) -> int:
        return self.lattice.q

    @property
    def full_rank(self) -> int:
        """r(E)."""
        return int(self.rank[self.lattice.top])

    def r(self, a) -> int:
        """Rank of a subspace given as a Subspace or a lattice id."""
        return int(self.rank[_as_id(self.lattice, a)])

    @cached_property
    def families(self) -> "DerivedFamilies":
        return _derive(self)

    def __eq__(self, other) -> bool:
        return (isinstance(other, QMatroid) and self.lattice.same_as(other.lattice)
                and np.array_equal(self.rank, other.rank))

    def __hash__(self) -> int:
        return hash((self.q, self.n, self.rank.tobytes()))

    def __repr__(self) -> str:
        return f"QMatroid(q={self.q}, n={self.n}, r(E)={self.full_rank})"


def _as_id(lat: LatticeIndex, a) -> int:
    return a if isinstance(a, (int, np.integer)) else lat.id_of(a)


def _lattice_of(family) -> LatticeIndex:
    s = next(iter(family))
    return lattice(s.q, s.n)


# -- validation -----------------------------------------------------------------

def validate(M: QMatroid) -> AxiomReport:
    """Check (R1) boundedness, (R2) monotonicity, (R3) submodularity exhaustively."""
    lat, r = M.lattice, M.rank
    if r.shape != (lat.size,):
        raise IncompleteTable("rank table does not cover the lattice")
    bad = np.flatnonzero((r < 0) | (r > lat.dims))
    if bad.size:
        return AxiomReport(False, "R1", {"A": lat[int(bad[0])]},
                           f"r(A)={int(r[bad[0]])}, dim A={lat.dim(int(bad[0]))}")
    # monotone along covers is monotone everywhere
    for a in range(lat.size):
        for b in lat.up(a):
            if r[a] > r[b]:
                return AxiomReport(False, "R2", {"A": lat[a], "B": lat[b]},
                                   f"r(A)={int(r[a])} > r(B)={int(r[b])}")
    lhs = r[lat.join_table] + r[lat.meet_table]
    rhs = r[:, None] + r[None, :]
    viol = np.argwhere(lhs > rhs)
    if viol.size:
        a, b = map(int, viol[0])
        return AxiomReport(False, "R3", {"A": lat[a], "B": lat[b]},
                           f"r(A+B)+r(A^B)={int(lhs[a, b])} > r(A)+r(B)={int(rhs[a, b])}")
    return AxiomReport.passed()


def _checked(M: QMatroid, what: str) -> QMatroid:
    rep = validate(M)
    if not rep:
        raise NotAQMatroid(f"{what} is not a q-matroid: {rep.describe()}", rep)
    return M


# -- constructors ---------------------------------------------------------------

def uniform(k: int, n: int, q: int = 2, form: BilinearForm | None = None) -> QMatroid:
    """U(k, n): r(A) = min(k, dim A)."""
    if not 0 <= k <= n:
        raise InvalidDimension(f"U({k},{n}) needs 0 <= k <= n")
    lat = lattice(q, n)
    return _checked(QMatroid(lat, np.minimum(lat.dims, k), form), f"U({k},{n})")


def rank_from_independents(lat: LatticeIndex, independent: np.ndarray) -> np.ndarray:
    """r(A) = max dim of an independent subspace of A (independents downward closed)."""
    r = np.zeros(lat.size, dtype=np.int64)
    for a in range(lat.size):  # ids are sorted by dimension
        if independent[a]:
            r[a] = lat.dims[a]
        else:
            r[a] = max((r[h] for h in lat.down(a)), default=0)
    return r


def from_bases(family: Iterable, lat: LatticeIndex | None = None,
               form: BilinearForm | None = None) -> QMatroid:
    """Build the q-matroid whose bases are ``family``, validating the result.

    Independents are taken to be all subspaces of members; the rank of A is
    the largest dimension of an independent subspace of A. Raises
    NotAQMatroid if R1-R3 fail and BasisMismatch if the bases of the result
    are not exactly ``family``.
    """
    family = list(family)
    if not family:
        raise NotAQMatroid("a basis family must be non-empty (B1)",
                           AxiomReport(False, "B1", detail="empty family"))
    if lat is None:
        lat = _lattice_of(family)
    ids = sorted({_as_id(lat, b) for b in family})
    independent = lat.leq_matrix[:, ids].any(axis=1)
    M = _checked(QMatroid(lat, rank_from_independents(lat, independent), form), "basis family")
    got = M.families.bases
    if got != frozenset(ids):
        extra = sorted(set(ids) - got)
        missing = sorted(got - set(ids))
        w = {"B": lat[extra[0]]} if extra else {"B": lat[missing[0]]}
        rep = AxiomReport(False, "bases", w,
                          f"{len(extra)} input members are not bases, {len(missing)} bases missing from input")
        raise BasisMismatch("reconstructed bases differ from the input family", rep)
    return M


def dual(M: QMatroid, form: BilinearForm | None = None) -> QMatroid:
    """r*(A) = dim A - r(E) + r(A^perp) under ``form`` (default: M.form)."""
    form = form or M.form
    lat = M.lattice
    p = np.asarray(lat.perp_table(form))
    rstar = lat.dims - M.full_rank + M.rank[p]
    out = QMatroid(lat, rstar, form)
    rep = validate(out)
    if not rep:
        raise InternalInconsistency(f"dual failed validation: {rep.describe()}", rep)
    return out


# -- derived families -------------------------------------------------------------

@dataclass(frozen=True)
class DerivedFamilies:
    independents: frozenset[int]
    bases: frozenset[int]
    spanning: frozenset[int]
    circuits: frozenset[int]
    flats: frozenset[int]
    hyperplanes: frozenset[int]
    loops: frozenset[int]
    coloops: frozenset[int]


def _derive(M: QMatroid) -> DerivedFamilies:
    lat, r = M.lattice, M.rank
    indep = r == lat.dims
    independents = frozenset(map(int, np.flatnonzero(indep)))
    bases = frozenset(a for a in independents if not any(indep[c] for c in lat.up(a)))
    spanning = frozenset(map(int, np.flatnonzero(r == M.full_rank)))
    circuits = frozenset(a for a in range(lat.size)
                         if not indep[a] and all(indep[h] for h in lat.down(a)))
    flats = frozenset(a for a in range(lat.size) if all(r[c] > r[a] for c in lat.up(a)))
    proper = [f for f in flats if f != lat.top]
    hyperplanes = frozenset(f for f in proper
                            if not any(g != f and lat.leq(f, g) for g in proper))
    loops = frozenset(z for z in lat.points if r[z] == 0)
    p = lat.perp_table(M.form)
    rstar_points = {z: lat.dim(z) - M.full_rank + int(r[p[z]]) for z in lat.points}
    coloops = frozenset(z for z, v in rstar_points.items() if v == 0)
    return DerivedFamilies(independents, bases, spanning, circuits, flats, hyperplanes, loops, coloops)


def derived(M: QMatroid) -> DerivedFamilies:
    """All eight derived families, cross-checked against their own axiom systems."""
    fam = M.families
    lat = M.lattice
    for name, rep in (("independence", check_independence_axioms(lat, fam.independents)),
                      ("basis", check_basis_axioms(lat, fam.bases)),
                      ("spanning", check_spanning_axioms(lat, fam.spanning)),
                      ("circuit", check_circuit_axioms(lat, fam.circuits))):
        if not rep:
            raise InternalInconsistency(f"derived {name} family violates its axioms: {rep.describe()}", rep)
    return fam


# -- cryptomorphic axiom systems ------------------------------------------------------

def _exchange_bound(lat: LatticeIndex, member, a: int) -> int | None:
    """Meet of every hyperplane X >= a with a+x in the family for all points x outside X.

    None when no such hyperplane exists. Some valid X avoids J iff J is not
    below the returned bound.
    """
    good = [X for X in lat.hyperplanes if lat.leq(a, X)
            and all(member[lat.join(a, x)] for x in lat.points_outside(X))]
    return lat.meet_all(good) if good else None


def _ids(lat, family) -> list[int]:
    return sorted({_as_id(lat, f) for f in family})


def _member(lat, ids) -> np.ndarray:
    m = np.zeros(lat.size, dtype=bool)
    m[list(ids)] = True
    return m


def check_basis_axioms(lat: LatticeIndex, family) -> AxiomReport:
    """(B1) non-empty, (B2) antichain, (nB3) exchange with a hyperplane."""
    ids = _ids(lat, family)
    if not ids:
        return AxiomReport(False, "B1", detail="empty family")
    member = _member(lat, ids)
    for b1 in ids:
        for b2 in ids:
            if b1 != b2 and lat.leq(b1, b2):
                return AxiomReport(False, "B2", {"B1": lat[b1], "B2": lat[b2]})
    bounds = {}
    for b1 in ids:
        for a in lat.down(b1):
            if a not in bounds:
                bounds[a] = _exchange_bound(lat, member, a)
            for b2 in ids:
                w = bounds[a]
                if w is None or lat.leq(b2, w):
                    return AxiomReport(False, "nB3", {"B1": lat[b1], "B2": lat[b2], "A": lat[a]})
    return AxiomReport.passed()


def check_independence_axioms(lat: LatticeIndex, family) -> AxiomReport:
    """(I1) non-empty, (I2) downward closed, (nI3) augmentation through a hyperplane."""
    ids = _ids(lat, family)
    if not ids:
        return AxiomReport(False, "I1", detail="empty family")
    member = _member(lat, ids)
    for j in ids:
        for h in lat.down(j):
            if not member[h]:
                return AxiomReport(False, "I2", {"J": lat[j], "I": lat[h]})
    for i in ids:
        w = None
        for j in ids:
            if lat.dim(i) < lat.dim(j):
                if w is None:
                    w = _exchange_bound(lat, member, i)
                    if w is None:
                        return AxiomReport(False, "nI3", {"I": lat[i], "J": lat[j]})
                if lat.leq(j, w):
                    return AxiomReport(False, "nI3", {"I": lat[i], "J": lat[j]})
    return AxiomReport.passed()


def _cut_bound(lat: LatticeIndex, member, s: int) -> int | None:
    """Join of every point x <= s with X^s in the family for all hyperplanes X avoiding x."""
    good = [x for x in lat.points if lat.leq(x, s)
            and all(member[lat.meet(X, s)] for X in lat.hyperplanes_avoiding(x))]
    return lat.join_all(good) if good else None


def check_spanning_axioms(lat: LatticeIndex, family) -> AxiomReport:
    """(S1) E spanning, (S2) upward closed, (nS3) reduction through a point."""
    ids = _ids(lat, family)
    member = _member(lat, ids)
    if not member[lat.top]:
        return AxiomReport(False, "S1", detail="E is not in the family")
    for j in ids:
        for c in lat.up(j):
            if not member[c]:
                return AxiomReport(False, "S2", {"J": lat[j], "I": lat[c]})
    for s1 in ids:
        v = None
        for s2 in ids:
            if lat.dim(s2) < lat.dim(s1):
                if v is None:
                    v = _cut_bound(lat, member, s1)
                    if v is None:
                        return AxiomReport(False, "nS3", {"S1": lat[s1], "S2": lat[s2]})
                if lat.leq(v, s2):
                    return AxiomReport(False, "nS3", {"S1": lat[s1], "S2": lat[s2]})
    return AxiomReport.passed()


def check_circuit_axioms(lat: LatticeIndex, family) -> AxiomReport:
    """(C1) zero is no circuit, (C2) antichain, (C3) circuit elimination in every hyperplane."""
    ids = _ids(lat, family)
    if lat.zero in ids:
        return AxiomReport(False, "C1", {"C": lat[lat.zero]})
    for c1 in ids:
        for c2 in ids:
            if c1 != c2 and lat.leq(c1, c2):
                return AxiomReport(False, "C2", {"C1": lat[c1], "C2": lat[c2]})
    if not ids:
        return AxiomReport.passed()
    has_circuit = lat.leq_matrix[ids, :].any(axis=0)
    hyp = np.asarray(lat.hyperplanes)
    arr = np.asarray(ids)
    for c1 in ids:
        others = arr[arr != c1]
        if not others.size:
            continue
        sums = lat.join_table[c1, others]
        ok = has_circuit[lat.meet_table[np.ix_(sums, hyp)]]
        if not ok.all():
            i, h = map(int, np.argwhere(~ok)[0])
            return AxiomReport(False, "C3", {"C1": lat[c1], "C2": lat[int(others[i])],
                                             "X": lat[int(hyp[h])]})
    return AxiomReport.passed()


# -- closure, minors, fundamental circuits --------------------------------------------

def closure(M: QMatroid, a) -> Subspace:
    """Smallest flat containing ``a``: adjoin every point that keeps the rank until stable."""
    lat, r = M.lattice, M.rank
    cur = _as_id(lat, a)
    changed = True
    while changed:
        changed = False
        for x in lat.points_outside(cur):
            nxt = lat.join(cur, x)
            if r[nxt] == r[cur]:
                cur = nxt
                changed = True
    return lat[cur]


@dataclass(frozen=True)
class IntervalQMatroid:
    """Restriction to [0, X] or contraction onto [X, E], kept inside the parent's lattice."""

    parent: QMatroid
    anchor: int
    kind: str  # "restrict" or "contract"

    @property
    def lattice(self) -> LatticeIndex:
        return self.parent.lattice

    @cached_property
    def members(self) -> list[int]:
        lat = self.lattice
        if self.kind == "restrict":
            return lat.interval(lat.zero, self.anchor)
        return lat.interval(self.anchor, lat.top)

    @property
    def ground_dim(self) -> int:
        d = self.lattice.dim(self.anchor)
        return d if self.kind == "restrict" else self.lattice.n - d

    def dim(self, a) -> int:
        """Dimension of ``a`` inside the minor's ground space (A, or A/X)."""
        d = self.lattice.dim(_as_id(self.lattice, a))
        return d if self.kind == "restrict" else d - self.lattice.dim(self.anchor)

    def rank(self, a) -> int:
        i = _as_id(self.lattice, a)
        if i not in set(self.members):
            raise PreconditionViolated(f"{self.lattice[i]} is outside the interval")
        if self.kind == "restrict":
            return self.parent.r(i)
        return self.parent.r(i) - self.parent.r(self.anchor)

    def validate(self) -> AxiomReport:
        lat = self.lattice
        members = self.members
        inside = set(members)
        rk = {a: self.rank(a) for a in members}
        for a in members:
            if not 0 <= rk[a] <= self.dim(a):
                return AxiomReport(False, "R1", {"A": lat[a]})
            for b in lat.up(a):
                if b in inside and rk[a] > rk[b]:
                    return AxiomReport(False, "R2", {"A": lat[a], "B": lat[b]})
        for a in members:
            for b in members:
                if rk[lat.join(a, b)] + rk[lat.meet(a, b)] > rk[a] + rk[b]:
                    return AxiomReport(False, "R3", {"A": lat[a], "B": lat[b]})
        return AxiomReport.passed()


def minor(M: QMatroid, x, kind: str) -> IntervalQMatroid:
    if kind not in ("restrict", "contract"):
        raise ValueError(f"unknown minor kind {kind!r}")
    out = IntervalQMatroid(M, _as_id(M.lattice, x), kind)
    rep = out.validate()
    if not rep:
        raise InternalInconsistency(f"{kind} minor failed validation: {rep.describe()}", rep)
    return out


def compare_interval_ranks(a: IntervalQMatroid, b: IntervalQMatroid,
                           mapping: Mapping[int, int] | Callable[[int], int]) -> AxiomReport:
    """Compare two minors under a user-supplied lattice isomorphism between their intervals.

    ``mapping`` sends lattice ids of ``a``'s interval to ids of ``b``'s interval.
    This is a manual tool; no identification of ground spaces is chosen here.
    """
    f = mapping if callable(mapping) else mapping.__getitem__
    lat = a.lattice
    for i in a.members:
        j = f(i)
        if a.rank(i) != b.rank(j) or a.dim(i) != b.dim(j):
            return AxiomReport(False, "rank", {"A": lat[i], "B": b.lattice[j]},
                               f"{a.rank(i)} != {b.rank(j)}")
    return AxiomReport.passed()


def fundamental_circuit(M: QMatroid, x, a) -> Subspace:
    """The unique circuit inside a dependent A that has an independent hyperplane X."""
    lat = M.lattice
    xi, ai = _as_id(lat, x), _as_id(lat, a)
    fam = M.families
    if xi not in fam.independents:
        raise PreconditionViolated(f"{lat[xi]} is dependent")
    if not lat.leq(xi, ai) or lat.dim(ai) != lat.dim(xi) + 1:
        raise PreconditionViolated(f"{lat[xi]} is not of codimension 1 in {lat[ai]}")
    if ai in fam.independents:
        raise PreconditionViolated(f"{lat[ai]} is independent")
    inside = [c for c in sorted(fam.circuits) if lat.leq(c, ai)]
    if len(inside) != 1:
        raise NonUnique(f"{len(inside)} circuits inside {lat[ai]}")
    return lat[inside[0]]


def points_in_every_basis(M: QMatroid) -> list[Subspace]:
    lat = M.lattice
    bases = M.families.bases
    return [lat[z] for z in lat.points if all(lat.leq(z, b) for b in bases)]


def check_same_lattice(M1: QMatroid, M2: QMatroid) -> None:
    if not M1.lattice.same_as(M2.lattice):
        raise LatticeMismatch("q-matroids live on different lattices")


def dump_ranks(M: QMatroid) -> str:
    """Rank table, one line per lattice id: ``<id> <dim> <rank> <basis>``."""
    lat = M.lattice
    lines = [f"# qmatroid-ranks q={lat.q} n={lat.n}"]
    for i, s in enumerate(lat.subspaces):
        lines.append(f"{i} {s.dim} {int(M.rank[i])} {s.render()}")
    return "\n".join(lines) + "\n"
