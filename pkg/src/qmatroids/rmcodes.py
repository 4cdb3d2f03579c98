"""F_{q^m}-linear rank-metric codes and the q-matroids they induce.

Only prime q is supported: then F_{q^m} is GF(q, m) and an element's
polynomial-basis coefficients are its expansion over F_q directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    AmbientMismatch,
    CertificateMissing,
    InternalInconsistency,
    LengthMismatch,
    NotNested,
    PreconditionViolated,
    UnsupportedAmbient,
    ValidationFailed,
)
from .gf import GF
from .linalg import MatGF, in_rowspace, kernel, kernel_rows, rank
from .qg import QGPair, qg_family
from .qmatroid import QMatroid, validate
from .reports import AxiomReport
from .subspace import BilinearForm, Subspace, canonicalize, lattice, perp


@dataclass(frozen=True)
class ExtFieldTower:
    """F_q inside F_{q^m}; expansion uses the polynomial basis 1, w, ..., w^(m-1)."""

    base: GF
    m: int
    top: GF

    @classmethod
    def of(cls, q: int, m: int) -> "ExtFieldTower":
        base = GF.of_order(q)
        if base.e != 1:
            raise UnsupportedAmbient(f"base field F_{q} must have prime order")
        if m < 1:
            raise UnsupportedAmbient("extension degree must be positive")
        return cls(base, m, GF(base.p, m))

    @property
    def q(self) -> int:
        return self.base.q

    def expand(self, x: int) -> tuple[int, ...]:
        return self.top.coeffs(x)

    def recombine(self, coeffs: Sequence[int]) -> int:
        return self.top.element(list(coeffs))

    def lift(self, c: int) -> int:
        # constant polynomials: base codes coincide with top codes
        return self.base.element(c)

    def basis(self) -> list[int]:
        return [self.top.p**i for i in range(self.m)]

    def frobenius(self, x: int, i: int = 1) -> int:
        return self.top.pow(x, self.q**i)


@dataclass(frozen=True)
class RankMetricCode:
    tower: ExtFieldTower
    n: int
    G: MatGF

    def __post_init__(self):
        if self.G.field != self.tower.top:
            raise AmbientMismatch("generator matrix must be over the top field")
        if self.G.cols != self.n:
            raise LengthMismatch(f"generator has {self.G.cols} columns, length is {self.n}")
        if rank(self.G) != self.G.rows:
            raise PreconditionViolated("generator matrix must have full row rank")

    @classmethod
    def from_rows(cls, tower: ExtFieldTower, rows: Sequence[Sequence[int]], n: int | None = None) -> "RankMetricCode":
        rows = [list(r) for r in rows]
        n = n if n is not None else (len(rows[0]) if rows else 0)
        return cls(tower, n, MatGF.from_rows(tower.top, rows, n))

    @property
    def k(self) -> int:
        return self.G.rows

    def codewords(self):
        """Every codeword (q^(mk) of them); only for small codes."""
        T = self.tower.top
        for u in np.ndindex(*([T.q] * self.k)):
            yield self.encode(u)

    def encode(self, u: Sequence[int]) -> tuple[int, ...]:
        T = self.tower.top
        out = [0] * self.n
        for ui, row in zip(u, self.G.entries):
            if ui:
                out = [T.add(o, T.mul(int(ui), g)) for o, g in zip(out, row)]
        return tuple(out)

    @cached_property
    def q_matroid(self) -> QMatroid:
        return code_qmatroid(self)


def rank_support(C: RankMetricCode, codeword: Sequence[int]) -> Subspace:
    """F_q-row space of the m x n expansion matrix of ``codeword``."""
    if len(codeword) != C.n:
        raise LengthMismatch(f"codeword has length {len(codeword)}, code length is {C.n}")
    tw = C.tower
    cols = [tw.expand(tw.top.element(c)) for c in codeword]
    rows = [tuple(col[i] for col in cols) for i in range(tw.m)]
    return canonicalize(tw.base, C.n, rows)


def subcode_dim(C: RankMetricCode, J: Subspace) -> int:
    """Dimension over F_{q^m} of the codewords whose rank support lies in J.

    Unknowns: the k message symbols, each expanded into m F_q-coordinates.
    Constraints: every expansion row of uG is orthogonal (standard dot product)
    to every vector of a basis of the standard complement of J. The solution
    space is F_{q^m}-linear, so its F_q-dimension is m times the answer.
    """
    tw = C.tower
    if J.field != tw.base or J.n != C.n:
        raise AmbientMismatch(f"J must be a subspace of F_{tw.q}^{C.n}")
    B = tw.base
    H = perp(J).basis
    if not H:
        return C.k
    basis = tw.basis()
    # column (s, t): effect of u = w^t e_s on all constraints
    columns = []
    for s in range(C.k):
        for t in range(tw.m):
            u = [0] * C.k
            u[s] = basis[t]
            rows = rank_support_rows(tw, C.encode(u))
            columns.append([_dot(B, r, h) for h in H for r in rows])
    system = [list(col) for col in zip(*columns)]
    free = len(kernel_rows(B, system, C.k * tw.m))
    if free % tw.m:
        raise InternalInconsistency(f"subcode solution space of F_q-dimension {free} is not F_q^m-linear")
    return free // tw.m


def rank_support_rows(tw: ExtFieldTower, codeword: Sequence[int]) -> list[tuple[int, ...]]:
    cols = [tw.expand(c) for c in codeword]
    return [tuple(col[i] for col in cols) for i in range(tw.m)]


def _dot(F: GF, a, b) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def oracle_rank(C: RankMetricCode, X: Subspace, form: BilinearForm | None = None) -> int:
    """rank over F_{q^m} of G * gram * X^T with X's F_q-basis lifted into F_{q^m}."""
    tw = C.tower
    if not X.basis:
        return 0
    rows = [list(r) for r in X.basis]
    if form is not None and not form.is_identity:
        rows = [list(r) for r in (MatGF.from_rows(tw.base, rows, C.n) @ form.gram.transpose()).entries]
    Xt = MatGF.from_rows(tw.top, [[tw.lift(c) for c in r] for r in rows], C.n).transpose()
    return rank(C.G @ Xt)


def code_qmatroid(C: RankMetricCode, form: BilinearForm | None = None) -> QMatroid:
    """r(X) = k - dim C(perp X), cross-checked against :func:`oracle_rank`."""
    tw = C.tower
    lat = lattice(tw.q, C.n)
    if form is None:
        form = BilinearForm.identity(tw.base, C.n)
    p = lat.perp_table(form)
    ranks = np.array([C.k - subcode_dim(C, lat[p[i]]) for i in range(lat.size)], dtype=np.int64)
    for i in range(lat.size):
        o = oracle_rank(C, lat[i], form)
        if o != ranks[i]:
            rep = AxiomReport(False, "oracle", {"X": lat[i]}, f"support rank {ranks[i]} != oracle rank {o}")
            raise ValidationFailed(f"code q-matroid rank formulas disagree: {rep.describe()}", rep)
    M = QMatroid(lat, ranks, form)
    rep = validate(M)
    if not rep:
        raise ValidationFailed(f"code q-matroid fails the rank axioms: {rep.describe()}", rep)
    return M


def gabidulin(tower: ExtFieldTower, k: int, n: int, g: Sequence[int] | None = None) -> RankMetricCode:
    """Rows g, g^q, ..., g^(q^(k-1)); g defaults to 1, w, ..., w^(n-1) (needs n <= m)."""
    if g is None:
        if n > tower.m:
            raise PreconditionViolated("default evaluation points need n <= m")
        g = tower.basis()[:n]
    g = [tower.top.element(x) for x in g]
    if len(g) != n:
        raise LengthMismatch("need n evaluation points")
    if canonicalize(tower.base, tower.m, [tower.expand(x) for x in g]).dim != n:
        raise PreconditionViolated("evaluation points must be F_q-linearly independent")
    rows = [[tower.frobenius(x, i) for x in g] for i in range(k)]
    return RankMetricCode.from_rows(tower, rows, n)


def subcode(C: RankMetricCode, rows: Sequence[int]) -> RankMetricCode:
    """Code generated by the chosen rows of C's generator."""
    return RankMetricCode.from_rows(C.tower, [C.G.entries[i] for i in rows], C.n)


def dual_code(C: RankMetricCode) -> RankMetricCode:
    """Dual under the standard inner product on F_{q^m}^n."""
    K = kernel(C.G)
    return RankMetricCode(C.tower, C.n, K)


def is_nested(C1: RankMetricCode, C2: RankMetricCode) -> bool:
    """True when C2 is a subcode of C1."""
    return all(in_rowspace(C1.G, row) for row in C2.G.entries)


def nested_pair(C1: RankMetricCode, C2: RankMetricCode, form: BilinearForm | None = None) -> QGPair:
    """Strong pair (M_C1, M_C2) for a subcode C2 of C1."""
    if C1.tower != C2.tower or C1.n != C2.n:
        raise AmbientMismatch("codes must share field tower and length")
    if not is_nested(C1, C2):
        raise NotNested("C2 is not contained in C1")
    M1, M2 = code_qmatroid(C1, form), code_qmatroid(C2, form)
    try:
        return QGPair.strong(M1, M2)
    except CertificateMissing as exc:
        raise InternalInconsistency(f"nested codes gave a non-strong pair: {exc}", exc.report) from exc


def represents_weakly(upper: QMatroid, lower: QMatroid, C1: RankMetricCode, C2: RankMetricCode) -> AxiomReport:
    """upper and lower are the q-matroids of nested codes C1 and C2."""
    if not is_nested(C1, C2):
        return AxiomReport(False, "nested", detail="C2 is not a subcode of C1")
    if code_qmatroid(C1, upper.form) != upper:
        return AxiomReport(False, "upper", detail="upper q-matroid differs from the q-matroid of C1")
    if code_qmatroid(C2, lower.form) != lower:
        return AxiomReport(False, "lower", detail="lower q-matroid differs from the q-matroid of C2")
    return AxiomReport.passed()


def represents_strongly(feasible, C1: RankMetricCode, C2: RankMetricCode,
                        form: BilinearForm | None = None) -> AxiomReport:
    """The feasible family is exactly the q-g family of the nested pair (C1, C2)."""
    pair = nested_pair(C1, C2, form)
    fam = qg_family(pair).feasible
    given = frozenset(getattr(feasible, "feasible", feasible))
    if given == fam:
        return AxiomReport.passed()
    lat = pair.lattice
    extra = sorted(given - fam)
    missing = sorted(fam - given)
    if extra:
        return AxiomReport(False, "family", {"F": lat[extra[0]]}, "feasible but not in the q-g family")
    return AxiomReport(False, "family", {"F": lat[missing[0]]}, "in the q-g family but not feasible")
