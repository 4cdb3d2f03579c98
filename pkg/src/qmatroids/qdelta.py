"""q-Delta-matroids: feasible families of subspaces and their exchange axioms.

The exchange checkers quantify over ordered pairs (X, Y) of feasible spaces
(X = Y included) and over every A of codimension 1 in X (F1, F3) or
containing X with codimension 1 (F2, F4). For each disjunct the part that
does not depend on Y is cached per A:

* (i)   holds for (A, Y) iff some good hyperplane Z >= A avoids Y, i.e. iff
        Y is not below the meet of all good Z;
* (iii) holds for (A, Y) iff some good point z <= A lies outside Y, i.e. iff
        the join of all good z is not below Y.

so each (X, Y, A) triple costs O(1) lattice lookups.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    EmptyFamily,
    InternalInconsistency,
    NotAQMatroid,
    NotOrthogonal,
    PreconditionViolated,
    UnsupportedAmbient,
    WrongDimensions,
)
from .gf import GF
from .qmatroid import QMatroid, from_bases
from .reports import AxiomReport
from .subspace import BilinearForm, LatticeIndex, Subspace, lattice, order_key


@dataclass(frozen=True)
class QDeltaMatroid:
    """Ground space F_q^n (via its lattice), a feasible family of lattice ids, and a form.

    The plain constructor does not check (F1)/(F2); see :func:`checked`.
    """

    lattice: LatticeIndex
    feasible: frozenset[int]
    form: BilinearForm | None = None

    def __post_init__(self):
        if not self.feasible:
            raise EmptyFamily("a q-Delta-matroid needs a non-empty feasible family")
        if self.form is None:
            object.__setattr__(self, "form", BilinearForm.identity(self.lattice.field, self.lattice.n))

    @classmethod
    def from_subspaces(cls, family: Iterable[Subspace], form: BilinearForm | None = None) -> "QDeltaMatroid":
        family = list(family)
        if not family:
            raise EmptyFamily("empty family")
        lat = lattice(family[0].q, family[0].n)
        return cls(lat, frozenset(lat.id_of(s) for s in family), form)

    @property
    def n(self) -> int:
        return self.lattice.n

    def subspaces(self) -> list[Subspace]:
        return [self.lattice[i] for i in sorted(self.feasible)]

    def __contains__(self, a) -> bool:
        return _as_id(self.lattice, a) in self.feasible

    def __len__(self) -> int:
        return len(self.feasible)


def _as_id(lat: LatticeIndex, a) -> int:
    return int(a) if isinstance(a, (int, np.integer)) else lat.id_of(a)


def _family_ids(lat: LatticeIndex, feasible) -> list[int]:
    if isinstance(feasible, QDeltaMatroid):
        feasible = feasible.feasible
    ids = sorted({_as_id(lat, f) for f in feasible})
    if not ids:
        raise EmptyFamily("the feasible family is empty")
    return ids


class _Exchange:
    """Per-family caches for the disjuncts of (F1)-(F4)."""

    def __init__(self, lat: LatticeIndex, ids: list[int]):
        self.lat = lat
        self.ids = ids
        self.member = np.zeros(lat.size, dtype=bool)
        self.member[ids] = True
        self._ii: dict[int, bool] = {}
        self._iv: dict[int, bool] = {}
        self._bi: dict[int, int | None] = {}
        self._biii: dict[int, int | None] = {}

    # (ii): some hyperplane Z with Z^A feasible
    def has_ii(self, a: int) -> bool:
        if a not in self._ii:
            lat, m = self.lat, self.member
            self._ii[a] = any(m[lat.meet(z, a)] for z in lat.hyperplanes)
        return self._ii[a]

    # (iv): some point z with A+z feasible
    def has_iv(self, a: int) -> bool:
        if a not in self._iv:
            lat, m = self.lat, self.member
            self._iv[a] = any(m[lat.join(a, z)] for z in lat.points)
        return self._iv[a]

    def bound_i(self, a: int) -> int | None:
        """Meet of the hyperplanes Z >= A with A+z feasible for every point z outside Z."""
        if a not in self._bi:
            lat, m = self.lat, self.member
            good = [Z for Z in lat.hyperplanes if lat.leq(a, Z)
                    and all(m[lat.join(a, z)] for z in lat.points_outside(Z))]
            self._bi[a] = lat.meet_all(good) if good else None
        return self._bi[a]

    def bound_iii(self, a: int) -> int | None:
        """Join of the points z <= A with A^Z feasible for every hyperplane Z avoiding z."""
        if a not in self._biii:
            lat, m = self.lat, self.member
            good = [z for z in lat.points if lat.leq(z, a)
                    and all(m[lat.meet(a, Z)] for Z in lat.hyperplanes_avoiding(z))]
            self._biii[a] = lat.join_all(good) if good else None
        return self._biii[a]

    def has_i(self, a: int, y: int) -> bool:
        w = self.bound_i(a)
        return w is not None and not self.lat.leq(y, w)

    def has_iii(self, a: int, y: int) -> bool:
        v = self.bound_iii(a)
        return v is not None and not self.lat.leq(v, y)

    def holds(self, axiom: str, a: int, y: int) -> bool:
        if axiom == "F1":
            return self.has_ii(a) or self.has_i(a, y)
        if axiom == "F2":
            return self.has_iv(a) or self.has_iii(a, y)
        if axiom == "F3":
            return bool(self.member[a]) or self.has_i(a, y)
        if axiom == "F4":
            return bool(self.member[a]) or self.has_iii(a, y)
        raise ValueError(f"unknown axiom {axiom!r}")

    def violations(self, axioms: Iterable[str]) -> Iterator[tuple[str, int, int, int]]:
        """Every failing (axiom, X, Y, A) in deterministic order."""
        lat = self.lat
        for axiom in axioms:
            shrink = axiom in ("F1", "F3")
            for x in self.ids:
                cands = lat.down(x) if shrink else lat.up(x)
                if axiom == "F1":
                    cands = [a for a in cands if not self.has_ii(a)]
                elif axiom == "F2":
                    cands = [a for a in cands if not self.has_iv(a)]
                else:
                    cands = [a for a in cands if not self.member[a]]
                if not cands:
                    continue
                for y in self.ids:
                    for a in cands:
                        ok = self.has_i(a, y) if shrink else self.has_iii(a, y)
                        if not ok:
                            yield axiom, x, y, a

    def explain(self, axiom: str, a: int, y: int) -> str:
        lat = self.lat
        if axiom in ("F1", "F3"):
            first = "(ii) no hyperplane Z has Z^A feasible" if axiom == "F1" else "(v) A is not feasible"
            cands = [Z for Z in lat.hyperplanes if lat.leq(a, Z)]
            w = self.bound_i(a)
            good = [] if w is None else [Z for Z in cands if lat.leq(w, Z)]
            if not good:
                return f"{first}; (i) fails: none of the {len(cands)} hyperplanes Z >= A has A+z feasible for every z outside Z"
            return (f"{first}; (i) fails: {len(good)} of the {len(cands)} hyperplanes Z >= A "
                    f"have A+z feasible for every z outside Z, and each contains Y")
        first = "(iv) no point z has A+z feasible" if axiom == "F2" else "(vi) A is not feasible"
        cands = [z for z in lat.points if lat.leq(z, a)]
        v = self.bound_iii(a)
        good = [] if v is None else [z for z in cands if lat.leq(z, v)]
        if not good:
            return f"{first}; (iii) fails: none of the {len(cands)} points z <= A has A^Z feasible for every Z avoiding z"
        return (f"{first}; (iii) fails: {len(good)} of the {len(cands)} points z <= A "
                f"have A^Z feasible for every Z avoiding z, and each lies in Y")


def _report(ex: _Exchange, hit) -> AxiomReport:
    if hit is None:
        return AxiomReport.passed()
    axiom, x, y, a = hit
    lat = ex.lat
    return AxiomReport(False, axiom, {"X": lat[x], "Y": lat[y], "A": lat[a]}, ex.explain(axiom, a, y))


def _check(lat, feasible, axioms) -> AxiomReport:
    ex = _Exchange(lat, _family_ids(lat, feasible))
    return _report(ex, next(ex.violations(axioms), None))


def check_f1f2(lat: LatticeIndex, feasible, form: BilinearForm | None = None) -> AxiomReport:
    """Check (F1) and (F2); the first failing (X, Y, A) is the witness.

    ``form`` is accepted for interface symmetry; the axioms do not use it.
    """
    return _check(lat, feasible, ("F1", "F2"))


def check_f3f4(lat: LatticeIndex, feasible, form: BilinearForm | None = None) -> AxiomReport:
    """Check (F3) and (F4). A pass is cross-checked to imply (F1) and (F2)."""
    rep = _check(lat, feasible, ("F3", "F4"))
    if rep:
        weaker = check_f1f2(lat, feasible)
        if not weaker:
            raise InternalInconsistency(f"(F3)(F4) hold but {weaker.describe()}", weaker)
    return rep


def violations(lat: LatticeIndex, feasible, axioms=("F1", "F2")) -> Iterator[tuple[str, Subspace, Subspace, Subspace]]:
    ex = _Exchange(lat, _family_ids(lat, feasible))
    for axiom, x, y, a in ex.violations(axioms):
        yield axiom, lat[x], lat[y], lat[a]


def count_violations(lat: LatticeIndex, feasible, axioms=("F1", "F2")) -> int:
    ex = _Exchange(lat, _family_ids(lat, feasible))
    return sum(1 for _ in ex.violations(axioms))


def check_triple(lat: LatticeIndex, feasible, axiom: str, x, y, a) -> bool:
    """Re-run one axiom on one (X, Y, A) triple; True when the axiom holds there."""
    ids = _family_ids(lat, feasible)
    xi, yi, ai = (_as_id(lat, s) for s in (x, y, a))
    if xi not in ids or yi not in ids:
        raise PreconditionViolated("X and Y must be feasible")
    if axiom in ("F1", "F3"):
        if ai not in lat.down(xi):
            raise PreconditionViolated("A must have codimension 1 in X")
    elif ai not in lat.up(xi):
        raise PreconditionViolated("X must have codimension 1 in A")
    return _Exchange(lat, ids).holds(axiom, ai, yi)


def checked(lat: LatticeIndex, feasible, form: BilinearForm | None = None) -> QDeltaMatroid:
    ids = _family_ids(lat, feasible)
    rep = check_f1f2(lat, ids)
    if not rep:
        raise NotAQMatroid(f"family is not a q-Delta-matroid: {rep.describe()}", rep)
    return QDeltaMatroid(lat, frozenset(ids), form)


# -- duality, upper and lower q-matroids, saturation ----------------------------------

def dual(delta: QDeltaMatroid) -> QDeltaMatroid:
    """Feasible family of orthogonal complements."""
    lat = delta.lattice
    p = lat.perp_table(delta.form)
    out = QDeltaMatroid(lat, frozenset(p[f] for f in delta.feasible), delta.form)
    if check_f1f2(lat, delta.feasible):
        rep = check_f1f2(lat, out.feasible)
        if not rep:
            raise InternalInconsistency(f"dual of a q-Delta-matroid fails: {rep.describe()}", rep)
    return out


def upper_lower(delta: QDeltaMatroid) -> tuple[QMatroid, QMatroid]:
    """q-matroids whose bases are the max-dimensional / min-dimensional feasible spaces."""
    lat = delta.lattice
    dims = {f: lat.dim(f) for f in delta.feasible}
    hi, lo = max(dims.values()), min(dims.values())
    try:
        upper = from_bases([f for f, d in dims.items() if d == hi], lat, delta.form)
        lower = from_bases([f for f, d in dims.items() if d == lo], lat, delta.form)
    except NotAQMatroid as exc:
        raise InternalInconsistency(f"upper/lower family is not a basis family: {exc}", exc.report) from exc
    return upper, lower


def is_saturated(delta_or_lat, feasible=None) -> AxiomReport:
    """Every Z with Y <= Z <= X, for feasible Y and X, is feasible."""
    lat, ids = _unpack(delta_or_lat, feasible)
    member = np.zeros(lat.size, dtype=bool)
    member[ids] = True
    for x in ids:
        below = [y for y in ids if lat.leq(y, x)]
        seen = set(below)
        frontier = list(below)
        while frontier:
            nxt = []
            for z in frontier:
                for c in lat.up(z):
                    if c in seen or not lat.leq(c, x):
                        continue
                    if not member[c]:
                        y = next(y for y in below if lat.leq(y, c))
                        return AxiomReport(False, "saturated", {"Y": lat[y], "Z": lat[c], "X": lat[x]},
                                           "Z lies between feasible Y and X but is infeasible")
                    seen.add(c)
                    nxt.append(c)
            frontier = nxt
    return AxiomReport.passed()


def _unpack(delta_or_lat, feasible):
    if isinstance(delta_or_lat, QDeltaMatroid):
        return delta_or_lat.lattice, sorted(delta_or_lat.feasible)
    return delta_or_lat, _family_ids(delta_or_lat, feasible)


# -- rank and birank ----------------------------------------------------------------------

def rank_delta(delta: QDeltaMatroid, a) -> int:
    """n - min over feasible F of (dim A + dim F - 2 dim(A^F))."""
    lat = delta.lattice
    ai = _as_id(lat, a)
    da = lat.dim(ai)
    return lat.n - min(da + lat.dim(f) - 2 * lat.dim(lat.meet(ai, f)) for f in delta.feasible)


def rank_delta_table(delta: QDeltaMatroid) -> np.ndarray:
    lat = delta.lattice
    fs = np.array(sorted(delta.feasible))
    d = lat.dims
    dist = d[:, None] + d[fs][None, :] - 2 * d[lat.meet_table[:, fs]]
    return lat.n - dist.min(axis=1)


def birank(delta: QDeltaMatroid, x, y) -> int:
    """max over feasible F of dim(F^X) + dim(F^perp ^ Y), for orthogonal X, Y."""
    lat = delta.lattice
    xi, yi = _as_id(lat, x), _as_id(lat, y)
    p = lat.perp_table(delta.form)
    if not lat.leq(yi, p[xi]):
        raise NotOrthogonal(f"{lat[yi]} is not orthogonal to {lat[xi]}")
    return max(lat.dim(lat.meet(f, xi)) + lat.dim(lat.meet(p[f], yi)) for f in delta.feasible)


# -- the dimension-4 characterization and constructions -----------------------------------

def characterize_dim4(lat: LatticeIndex, D) -> bool:
    """For {0, E} + D with D of 2-spaces in F_q^4: every point lies in and every
    3-space contains some member of D. Cross-checked against (F1)(F2)."""
    if lat.n != 4:
        raise WrongDimensions("the characterization needs n = 4")
    ids = sorted({_as_id(lat, d) for d in D})
    if any(lat.dim(d) != 2 for d in ids):
        raise WrongDimensions("every member of D must be 2-dimensional")
    covered = all(any(lat.leq(z, d) for d in ids) for z in lat.points)
    contained = all(any(lat.leq(d, h) for d in ids) for h in lat.hyperplanes)
    verdict = covered and contained
    rep = check_f1f2(lat, [lat.zero, lat.top] + ids)
    if bool(rep) != verdict:
        raise InternalInconsistency(f"characterization says {verdict}, axioms say {rep.describe()}", rep)
    return verdict


def desarguesian_spread(q: int) -> list[Subspace]:
    """Lines of F_{q^2}^2 read as 2-spaces of F_q^4 through the basis {1, w} of F_{q^2}.

    (u, v) with u = u0 + u1 w, v = v0 + v1 w maps to (u0, u1, v0, v1); w is a
    root of the default modulus of F_{q^2}.
    """
    lat = lattice(q, 4)
    if lat.field.e != 1:
        raise UnsupportedAmbient("spread construction needs a prime q")
    K = GF(lat.field.p, 2)
    basis = (1, K.p)  # 1 and w
    lines = []
    for lam in range(K.q):
        vecs = [K.coeffs(a) + K.coeffs(K.mul(lam, a)) for a in basis]
        lines.append(lat[lat.span_id(*vecs)])
    lines.append(lat[lat.span_id(*[(0, 0) + K.coeffs(a) for a in basis])])
    return sorted(set(lines), key=order_key)


def spread(q: int = 2) -> QDeltaMatroid:
    """{0, E} together with a Desarguesian spread of F_q^4."""
    lat = lattice(q, 4)
    ids = [lat.zero, lat.top] + [lat.id_of(s) for s in desarguesian_spread(q)]
    return _asserted(lat, ids, None, "spread")


def even_dims(q: int = 2) -> QDeltaMatroid:
    """Every subspace of F_q^4 of even dimension."""
    lat = lattice(q, 4)
    ids = [i for i in range(lat.size) if lat.dim(i) % 2 == 0]
    return _asserted(lat, ids, None, "even_dims")


def from_qmatroid(M: QMatroid, mode: str) -> QDeltaMatroid:
    """Bases, independents or spanning spaces of a q-matroid as a feasible family."""
    fam = M.families
    ids = {"bases": fam.bases, "independents": fam.independents, "spanning": fam.spanning}[mode]
    return _asserted(M.lattice, ids, M.form, f"{mode} family")


def _asserted(lat, ids, form, what) -> QDeltaMatroid:
    out = QDeltaMatroid(lat, frozenset(ids), form)
    rep = check_f1f2(lat, out.feasible)
    if not rep:
        raise InternalInconsistency(f"{what} should be a q-Delta-matroid: {rep.describe()}", rep)
    return out


def construct(kind: str, *, q: int = 2, M: QMatroid | None = None, mode: str | None = None) -> QDeltaMatroid:
    if kind == "spread":
        return spread(q)
    if kind == "even_dims":
        return even_dims(q)
    if kind == "from_qmatroid":
        if M is None or mode is None:
            raise ValueError("from_qmatroid needs M and mode")
        return from_qmatroid(M, mode)
    raise ValueError(f"unknown construction {kind!r}")
