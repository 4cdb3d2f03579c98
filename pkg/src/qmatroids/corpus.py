"""Standard test objects on F_2^4 and seeded random family generators."""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import qdelta as qd
from . import qmatroid as qm
from .qg import QGPair, qg_family
from .rmcodes import ExtFieldTower, RankMetricCode, code_qmatroid, gabidulin, nested_pair, subcode
from .subspace import BilinearForm, LatticeIndex, lattice

ALT_GRAM = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 1), (0, 0, 1, 0))


def lat24() -> LatticeIndex:
    return lattice(2, 4)


def alt_form() -> BilinearForm:
    """A symmetric, invertible, non-identity form on F_2^4."""
    return BilinearForm.from_rows(lat24().field, ALT_GRAM)


@lru_cache(maxsize=None)
def sandwich_pair(form: BilinearForm | None = None) -> tuple[qm.QMatroid, qm.QMatroid]:
    """M1: bases all 3-spaces but <e1,e2,e3>; M2: bases all 2-spaces but <e1,e2> and <e3,e4>.

    Every basis of M2 sits in one of M1 and vice versa, yet Id: M1 -> M2 is not strong.
    """
    lat = lat24()
    e123, e12, e34 = lat.unit_id(1, 2, 3), lat.unit_id(1, 2), lat.unit_id(3, 4)
    M1 = qm.from_bases([b for b in lat.by_dim[3] if b != e123], lat, form)
    M2 = qm.from_bases([b for b in lat.by_dim[2] if b not in (e12, e34)], lat, form)
    return M1, M2


@lru_cache(maxsize=None)
def tower(m: int) -> ExtFieldTower:
    return ExtFieldTower.of(2, m)


@lru_cache(maxsize=None)
def codes() -> dict[str, RankMetricCode]:
    t4, t2 = tower(4), tower(2)
    G2 = gabidulin(t4, 2, 4)
    G3 = gabidulin(t4, 3, 4)
    return {
        "gab1": subcode(G2, [0]),
        "gab2": G2,
        "gab3": G3,
        # not MRD: supports of dimension 1 exist
        "split2": RankMetricCode.from_rows(t4, [[1, 1, 0, 0], [0, 0, 1, 2]]),
        "short1": RankMetricCode.from_rows(t2, [[1, 2, 0, 0]]),
        "rep1": RankMetricCode.from_rows(t4, [[1, 1, 1, 0]]),
    }


@lru_cache(maxsize=None)
def qmatroid_corpus(form: BilinearForm | None = None) -> dict[str, qm.QMatroid]:
    """At least eight q-matroids on F_2^4, all under ``form``."""
    out = {f"U{k}": qm.uniform(k, 4, 2, form) for k in range(5)}
    M1, M2 = sandwich_pair(form)
    out.update({"M1": M1, "M2": M2, "M1*": qm.dual(M1, form), "M2*": qm.dual(M2, form)})
    for name in ("split2", "short1", "rep1"):
        out[f"code:{name}"] = code_qmatroid(codes()[name], form)
    return out


@lru_cache(maxsize=None)
def strong_pairs() -> dict[str, QGPair]:
    U = {k: qm.uniform(k, 4) for k in range(5)}
    M1, M2 = sandwich_pair()
    c = codes()
    pairs = {f"U{k}=U{k}": QGPair.strong(U[k], U[k]) for k in (1, 2, 3)}
    pairs["U4>M2"] = QGPair.strong(U[4], M2)
    pairs["U4>code:split2"] = QGPair.strong(U[4], code_qmatroid(c["split2"]))
    pairs["M1>U0"] = QGPair.strong(M1, U[0])
    pairs["U2>U0"] = QGPair.strong(U[2], U[0])
    pairs["gab2>gab1"] = nested_pair(c["gab2"], c["gab1"])
    pairs["gab3>gab2"] = nested_pair(c["gab3"], c["gab2"])
    return pairs


@lru_cache(maxsize=None)
def qdelta_corpus() -> dict[str, qd.QDeltaMatroid]:
    lat = lat24()
    out = {"spread": qd.spread(2), "even": qd.even_dims(2),
           "all": qd.QDeltaMatroid(lat, frozenset(range(lat.size)))}
    out["spread*"] = qd.dual(out["spread"])
    for name in ("U2", "M1", "M2", "code:split2"):
        M = qmatroid_corpus()[name]
        for mode in ("bases", "independents", "spanning"):
            out[f"{name}:{mode}"] = qd.from_qmatroid(M, mode)
    for name in ("gab2>gab1", "M1>U0"):
        out[f"qg:{name}"] = qg_family(strong_pairs()[name])
    return out


# -- seeded random families ------------------------------------------------------------

def random_two_dim_family(lat: LatticeIndex, rng: np.random.Generator) -> list[int]:
    """A random non-empty set of 2-spaces (size uniform in 1..all)."""
    twos = lat.by_dim[2]
    size = int(rng.integers(1, len(twos) + 1))
    return sorted(int(x) for x in rng.choice(twos, size=size, replace=False))


def random_closed_family(lat: LatticeIndex, rng: np.random.Generator) -> list[int]:
    """Downward closure of random generators, or a union of random intervals."""
    L = lat.leq_matrix
    k = int(rng.integers(1, 5))
    if rng.random() < 0.5:
        gens = rng.choice(lat.size, size=k, replace=False)
        member = L[:, gens].any(axis=1)
    else:
        member = np.zeros(lat.size, dtype=bool)
        for _ in range(k):
            lo, hi = (int(x) for x in rng.choice(lat.size, size=2))
            if not L[lo, hi]:
                lo, hi = lat.meet(lo, hi), lat.join(lo, hi)
            member |= L[lo, :] & L[:, hi]
    return sorted(int(i) for i in np.flatnonzero(member))
