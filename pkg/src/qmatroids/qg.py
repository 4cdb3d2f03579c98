"""Weak q-g-matroids and q-g-matroids built from a pair of q-matroids."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CertificateMissing, InternalInconsistency
from .qdelta import QDeltaMatroid, check_f1f2, check_f3f4
from .qmatroid import QMatroid, check_same_lattice
from .strongmap import MapReport, basis_sandwich, is_strong_rankdiff


@dataclass(frozen=True)
class QGPair:
    """M1 (upper) and M2 (lower) on one lattice, with a verified certificate.

    Build through :meth:`weak` or :meth:`strong`; both raise CertificateMissing
    carrying the failing MapReport.
    """

    m_upper: QMatroid
    m_lower: QMatroid
    certificate: str
    report: MapReport

    @classmethod
    def weak(cls, M1: QMatroid, M2: QMatroid) -> "QGPair":
        check_same_lattice(M1, M2)
        rep = basis_sandwich(M1, M2)
        if not rep:
            raise CertificateMissing(f"no weak certificate: {rep.describe()}", rep)
        return cls(M1, M2, "weak", rep)

    @classmethod
    def strong(cls, M1: QMatroid, M2: QMatroid) -> "QGPair":
        check_same_lattice(M1, M2)
        rep = is_strong_rankdiff(M1, M2)
        if not rep:
            raise CertificateMissing(f"no strong certificate: {rep.describe()}", rep)
        return cls(M1, M2, "strong", rep)

    @property
    def lattice(self):
        return self.m_upper.lattice


def weak_qg_family(pair: QGPair) -> QDeltaMatroid:
    """{F : B2 <= F <= B1 for some bases B2 of M2 and B1 of M1}, not checked against (F1)(F2)."""
    if pair.certificate not in ("weak", "strong"):
        raise CertificateMissing("pair carries no certificate")
    lat = pair.lattice
    L = lat.leq_matrix
    b1 = sorted(pair.m_upper.families.bases)
    b2 = sorted(pair.m_lower.families.bases)
    above_b2 = L[b2, :].any(axis=0)   # F contains some basis of M2
    below_b1 = L[:, b1].any(axis=1)   # F lies in some basis of M1
    # a single pair (B2, B1) is needed; any B2 <= F <= B1 gives one, so the two tests suffice
    ids = np.flatnonzero(above_b2 & below_b1)
    return QDeltaMatroid(lat, frozenset(int(i) for i in ids), pair.m_upper.form)


def qg_family(pair: QGPair) -> QDeltaMatroid:
    """Spaces independent in M1 and spanning in M2; must satisfy (F1)-(F4)."""
    if pair.certificate != "strong":
        raise CertificateMissing("q-g family needs a strong certificate")
    lat = pair.lattice
    ids = pair.m_upper.families.independents & pair.m_lower.families.spanning
    out = QDeltaMatroid(lat, frozenset(ids), pair.m_upper.form)
    for check in (check_f3f4, check_f1f2):
        rep = check(lat, out.feasible)
        if not rep:
            raise InternalInconsistency(f"q-g family of a strong pair fails: {rep.describe()}", rep)
    return out
