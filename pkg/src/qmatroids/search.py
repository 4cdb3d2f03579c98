"""Seeded random searches for counterexamples to two open questions.

``upper-lower-strong``: is Id from the upper to the lower q-matroid of every
q-Delta-matroid a strong map?

``f3f4-vs-qg``: is every family satisfying (F3)(F4) the q-g family of a strong
pair? Such a pair must be (upper, lower), so the test is exact.

Candidates come from a fixed seed list (standard constructions and their
duals) followed by a random walk that flips one subspace at a time, keeping a
flip unless it raises the axiom-violation count (and sometimes even then).
Every zero-violation state is tested.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import corpus as cp
from . import qdelta as qd
from .errors import BudgetZero, CapExceeded, PreconditionViolated, UnsupportedAmbient
from .fileio import render_family
from .qg import QGPair, qg_family
from .rmcodes import RankMetricCode, code_qmatroid
from .strongmap import is_strong_rankdiff
from .subspace import LatticeIndex, lattice

TARGETS = ("upper-lower-strong", "f3f4-vs-qg")


@dataclass
class SearchResult:
    target: str
    seed: int
    budget: int
    steps: int = 0
    tested: int = 0
    found: bool = False
    witness: str | None = None
    log: list[str] = field(default_factory=list)


def _test(target: str, lat: LatticeIndex, fam: frozenset[int]) -> str | None:
    """Return a description when ``fam`` refutes the target statement."""
    delta = qd.QDeltaMatroid(lat, fam)
    up, lo = qd.upper_lower(delta)
    rep = is_strong_rankdiff(up, lo)
    if target == "upper-lower-strong":
        return None if rep else f"Id: upper -> lower is not strong: {rep.describe()}"
    if not rep:
        return f"(F3)(F4) family whose upper -> lower is not strong: {rep.describe()}"
    qg = qg_family(QGPair.strong(up, lo)).feasible
    if qg != fam:
        return f"(F3)(F4) family differs from the q-g family of (upper, lower) ({len(fam)} vs {len(qg)} spaces)"
    return None


def _seeds(lat: LatticeIndex, rng: np.random.Generator) -> list[frozenset[int]]:
    out = []
    if lat.q == 2 and lat.n == 4:
        out.extend(D.feasible for D in cp.qdelta_corpus().values())
    for M in _random_code_qmatroids(lat, rng, 4):
        for mode in ("bases", "independents", "spanning"):
            out.append(frozenset(getattr(M.families, mode)))
    p = lat.perp_table()
    out.extend([frozenset(p[f] for f in fam) for fam in out])
    return list(dict.fromkeys(out))


def _random_code_qmatroids(lat: LatticeIndex, rng: np.random.Generator, count: int):
    for _ in range(count):
        m = int(rng.integers(2, 5))
        tw = cp.tower(m)
        k = int(rng.integers(1, lat.n + 1))
        for _attempt in range(20):
            rows = rng.integers(0, tw.top.q, size=(k, lat.n)).tolist()
            try:
                yield code_qmatroid(RankMetricCode.from_rows(tw, rows, lat.n))
                break
            except PreconditionViolated:  # rank-deficient draw
                continue


def run_search(target: str, budget: int, seed: int, q: int = 2, n: int = 4,
               witness_path: str | Path | None = None) -> SearchResult:
    if budget <= 0:
        raise BudgetZero("budget must be positive")
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}")
    if q != 2 or n > 5:
        raise UnsupportedAmbient("search runs on F_2^n with n <= 5")
    lat = lattice(q, n)
    if lat.size > 10**4:
        raise CapExceeded("lattice too large for search")
    rng = np.random.default_rng(seed)
    axioms = ("F1", "F2") if target == "upper-lower-strong" else ("F3", "F4")
    res = SearchResult(target, seed, budget)
    seen: set[frozenset[int]] = set()

    def consider(fam: frozenset[int]) -> bool:
        if fam in seen:
            return False
        seen.add(fam)
        res.tested += 1
        bad = _test(target, lat, fam)
        if bad is None:
            return False
        res.found = True
        res.witness = render_family(q, n, [lat[i] for i in sorted(fam)], f"{target} counterexample\n{bad}")
        res.log.append(bad)
        return True

    seeds = _seeds(lat, rng)
    state = None
    for fam in seeds:
        if res.steps >= budget:
            break
        res.steps += 1
        if qd.count_violations(lat, fam, axioms) == 0:
            if consider(fam):
                break
            state = fam
    if not res.found:
        state = state or seeds[0]
        cost = qd.count_violations(lat, state, axioms)
        while res.steps < budget:
            res.steps += 1
            flip = int(rng.integers(lat.size))
            cand = state ^ {flip}
            if not cand:
                continue
            c = qd.count_violations(lat, cand, axioms)
            if c <= cost or rng.random() < 0.05:
                state, cost = frozenset(cand), c
                if cost == 0 and consider(state):
                    break
    res.log.insert(0, f"target {target}, seed {seed}, budget {budget}: {res.steps} steps, "
                      f"{res.tested} distinct families tested, "
                      f"{'counterexample found' if res.found else 'no counterexample'}")
    if res.found and witness_path is not None:
        Path(witness_path).write_text(res.witness)
    return res
