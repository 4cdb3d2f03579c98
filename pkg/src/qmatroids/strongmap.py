"""Weak and strong identity maps between two q-matroids on one ground space."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .qmatroid import QMatroid, check_same_lattice


@dataclass(frozen=True)
class MapReport:
    verdict: bool
    criterion: str
    witness: dict[str, Any] = field(default_factory=dict)
    detail: str = ""

    def __bool__(self) -> bool:
        return self.verdict

    def describe(self) -> str:
        head = f"{self.criterion}: {'true' if self.verdict else 'false'}"
        if self.verdict:
            return head
        parts = [head] + [f"{k}=<{v.render()}>" for k, v in self.witness.items()]
        if self.detail:
            parts.append(f"[{self.detail}]")
        return " ".join(parts)


def is_weak(M1: QMatroid, M2: QMatroid) -> MapReport:
    """rho2(V) <= rho1(V) for every subspace V."""
    check_same_lattice(M1, M2)
    bad = np.flatnonzero(M2.rank > M1.rank)
    if bad.size:
        v = int(bad[0])
        return MapReport(False, "weak", {"V": M1.lattice[v]}, f"rho2={M2.r(v)} > rho1={M1.r(v)}")
    return MapReport(True, "weak")


def is_strong_rankdiff(M1: QMatroid, M2: QMatroid) -> MapReport:
    """rho1(X) - rho1(Y) >= rho2(X) - rho2(Y) for all Y <= X; witness is the first (X, Y)."""
    check_same_lattice(M1, M2)
    lat = M1.lattice
    d = M1.rank - M2.rank
    # viol[x, y]: y <= x and d[x] < d[y]
    viol = lat.leq_matrix.T & (d[:, None] < d[None, :])
    hits = np.argwhere(viol)
    if hits.size:
        x, y = map(int, hits[0])
        return MapReport(False, "rankdiff", {"X": lat[x], "Y": lat[y]},
                         f"{M1.r(x)}-{M1.r(y)}={M1.r(x) - M1.r(y)} < {M2.r(x)}-{M2.r(y)}={M2.r(x) - M2.r(y)}")
    return MapReport(True, "rankdiff")


def is_strong_flats(M1: QMatroid, M2: QMatroid) -> MapReport:
    """Every flat of M2 is a flat of M1 (the preimage under Id is the flat itself)."""
    check_same_lattice(M1, M2)
    flats1 = M1.families.flats
    for f in sorted(M2.families.flats):
        if f not in flats1:
            return MapReport(False, "flats", {"F": M1.lattice[f]}, "flat of M2 that is not a flat of M1")
    return MapReport(True, "flats")


def is_strong_circuits(M1: QMatroid, M2: QMatroid) -> MapReport:
    """Every circuit of M1 is a sum of circuits of M2.

    A circuit C is such a sum iff the sum of *all* circuits of M2 inside C is
    C itself: any representing subset sums to something between them.
    """
    check_same_lattice(M1, M2)
    lat = M1.lattice
    circuits2 = sorted(M2.families.circuits)
    for c in sorted(M1.families.circuits):
        total = lat.join_all(d for d in circuits2 if lat.leq(d, c))
        if total != c:
            return MapReport(False, "circuits", {"C": lat[c]},
                             f"circuits of M2 inside C only span <{lat[total].render()}>")
    return MapReport(True, "circuits")


def basis_sandwich(M1: QMatroid, M2: QMatroid) -> MapReport:
    """Every basis of M2 lies in a basis of M1 and every basis of M1 contains one of M2."""
    check_same_lattice(M1, M2)
    lat = M1.lattice
    b1 = sorted(M1.families.bases)
    b2 = sorted(M2.families.bases)
    L = lat.leq_matrix
    for b in b2:
        if not L[b, b1].any():
            return MapReport(False, "sandwich", {"B2": lat[b]}, "basis of M2 in no basis of M1")
    for b in b1:
        if not L[b2, b].any():
            return MapReport(False, "sandwich", {"B1": lat[b]}, "basis of M1 containing no basis of M2")
    return MapReport(True, "sandwich")


CRITERIA = {
    "rankdiff": is_strong_rankdiff,
    "flats": is_strong_flats,
    "circuits": is_strong_circuits,
}


def is_strong(M1: QMatroid, M2: QMatroid, criterion: str = "rankdiff") -> MapReport:
    return CRITERIA[criterion](M1, M2)
