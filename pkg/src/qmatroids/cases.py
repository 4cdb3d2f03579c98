"""Named reproductions of the published finite examples, each with its expected outcome.

A case returns a :class:`CaseResult`; ``ok`` is True exactly when the
published outcome (including any named witness) is observed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import corpus as cp
from . import qdelta as qd
from . import qmatroid as qm
from .errors import UnknownCase
from .qg import QGPair, qg_family, weak_qg_family
from .strongmap import basis_sandwich, is_strong_rankdiff
from .subspace import coordinatize, lattice


@dataclass
class CaseResult:
    ok: bool
    lines: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class PaperCase:
    id: str
    expectation: str
    run: Callable[[], CaseResult]


def _expect(lines: list[str], label: str, cond: bool) -> bool:
    lines.append(f"{'ok  ' if cond else 'FAIL'} {label}")
    return cond


def weak_not_strong() -> CaseResult:
    lat = cp.lat24()
    M1, M2 = cp.sandwich_pair()
    out: list[str] = []
    sw = basis_sandwich(M1, M2)
    rd = is_strong_rankdiff(M1, M2)
    out.append(sw.describe())
    out.append(rd.describe())
    ok = _expect(out, "basis sandwich holds", bool(sw))
    ok &= _expect(out, "rank-difference fails", not rd)
    want = {"X": lat[lat.unit_id(1, 2, 3)], "Y": lat[lat.unit_id(1, 2)]}
    ok &= _expect(out, "witness X=<e1,e2,e3>, Y=<e1,e2>", rd.witness == want)
    if rd.witness == want:
        x, y = lat.unit_id(1, 2, 3), lat.unit_id(1, 2)
        vals = (M1.r(x), M1.r(y), M2.r(x), M2.r(y))
        ok &= _expect(out, "r1 difference 2-2=0 < r2 difference 2-1=1", vals == (2, 2, 2, 1))
    return CaseResult(ok, out)


def weak_qg_not_qdelta() -> CaseResult:
    lat = cp.lat24()
    fam = weak_qg_family(QGPair.weak(*cp.sandwich_pair()))
    out = [f"weak q-g family: {len(fam)} spaces"]
    rep = qd.check_f1f2(lat, fam.feasible)
    out.append(rep.describe())
    want = {"X": lat[lat.unit_id(1, 2, 4)], "Y": lat[lat.unit_id(1, 3)], "A": lat[lat.unit_id(1, 2)]}
    ok = _expect(out, "(F1)(F2) fail", not rep)
    ok &= _expect(out, "witness X=<e1,e2,e4>, Y=<e1,e3>, A=<e1,e2>", rep.witness == want)
    ok &= _expect(out, "witness is reproducible",
                  not qd.check_triple(lat, fam.feasible, "F1", want["X"], want["Y"], want["A"]))
    return CaseResult(ok, out)


def even_dims_not_weak_qg() -> CaseResult:
    lat = cp.lat24()
    ev = qd.even_dims(2)
    out = [f"even-dimensional family: {len(ev)} spaces"]
    ok = _expect(out, "(F1)(F2) hold", bool(qd.check_f1f2(lat, ev.feasible)))
    up, lo = qd.upper_lower(ev)
    ok &= _expect(out, "upper U(4,4), lower U(0,4)", up == qm.uniform(4, 4) and lo == qm.uniform(0, 4))
    sandwich = weak_qg_family(QGPair.weak(up, lo)).feasible
    odd = sorted(i for i in sandwich if lat.dim(i) % 2)
    out.append(f"sandwich family of (upper, lower): {len(sandwich)} spaces, {len(odd)} odd-dimensional")
    ok &= _expect(out, "feasible family is not that sandwich family", sandwich != ev.feasible and bool(odd))
    return CaseResult(ok, out)


def spread_example() -> CaseResult:
    lat = cp.lat24()
    sp = qd.spread(2)
    lines = [s for s in sp.subspaces() if s.dim == 2]
    out = [f"spread lines: {' | '.join(s.render() for s in lines)}"]
    ok = _expect(out, "5 lines covering every point once",
                 len(lines) == 5 and all(sum(lat.leq(z, lat.id_of(s)) for s in lines) == 1 for z in lat.points))
    ok &= _expect(out, "(F1)(F2) hold", bool(qd.check_f1f2(lat, sp.feasible)))
    ok &= _expect(out, "dim-4 characterization agrees", qd.characterize_dim4(lat, [lat.id_of(s) for s in lines]))
    up, lo = qd.upper_lower(sp)
    ok &= _expect(out, "upper U(4,4), lower U(0,4)", up == qm.uniform(4, 4) and lo == qm.uniform(0, 4))
    dual = qd.dual(sp)
    ok &= _expect(out, "dual is again {0, E} with a spread",
                  qd.characterize_dim4(lat, [f for f in dual.feasible if lat.dim(f) == 2]) and len(dual) == 7)
    ok &= _expect(out, "the lines are not the bases of a q-matroid",
                  not qm.check_basis_axioms(lat, [lat.id_of(s) for s in lines]))
    return CaseResult(ok, out)


def dim4_characterization(samples: int = 200, seed: int = 0) -> CaseResult:
    lat = cp.lat24()
    rng = np.random.default_rng(seed)
    verdicts = []
    # characterize_dim4 raises InternalInconsistency on any disagreement with (F1)(F2)
    for _ in range(samples):
        verdicts.append(qd.characterize_dim4(lat, cp.random_two_dim_family(lat, rng)))
    out = [f"{samples} random families (seed {seed}): {sum(verdicts)} q-Delta, {samples - sum(verdicts)} not"]
    ok = _expect(out, "characterization agrees with (F1)(F2) on every sample", True)
    return CaseResult(ok, out)


def _restriction_candidates(T: int):
    """Both attempted restrictions of the spread example to the 3-space T, in T's coordinates."""
    lat = cp.lat24()
    sp = qd.spread(2)
    lt = lattice(2, 3)
    Tsp = lat[T]
    inside = frozenset(lt.id_of(coordinatize(lat[f], Tsp)) for f in sp.feasible if lat.leq(f, T))
    cut = frozenset(lt.id_of(coordinatize(lat[lat.meet(f, T)], Tsp)) for f in sp.feasible)
    return lt, inside, cut


def restriction_fails() -> CaseResult:
    lat = cp.lat24()
    T = lat.unit_id(1, 2, 3)
    lt, inside, cut = _restriction_candidates(T)
    out = [f"T = {lat[T]}"]
    ok = True
    for name, fam in (("{F in F : F <= T}", inside), ("{F ^ T : F in F}", cut)):
        rep = qd.check_f1f2(lt, fam)
        out.append(f"{name}: {' | '.join(lt[i].render() for i in sorted(fam))}")
        out.append(f"  {rep.describe()}")
        if lt.top in fam:
            out.append("  T itself is feasible, so (iv) holds at A = T with any point z")
        hit = not rep and rep.axiom == "F2" and rep.witness.get("A") == lt[lt.top]
        ok &= _expect(out, f"{name} fails (F2) with A = T", hit)
    return CaseResult(ok, out)


def qmatroid_families_are_qdelta() -> CaseResult:
    lat = cp.lat24()
    out: list[str] = []
    ok = True
    for name, M in cp.qmatroid_corpus().items():
        fam = M.families
        res = [bool(qd.check_f1f2(lat, getattr(fam, mode))) for mode in ("bases", "independents", "spanning")]
        ok &= _expect(out, f"{name}: bases, independents, spanning pass (F1)(F2)", all(res))
    return CaseResult(ok, out)


def qg_is_qdelta() -> CaseResult:
    lat = cp.lat24()
    pairs = cp.strong_pairs()
    out: list[str] = []
    ok = True
    for name in ("U2=U2", "M1>U0", "gab2>gab1"):
        fam = qg_family(pairs[name])
        f34 = qd.check_f3f4(lat, fam.feasible)
        f12 = qd.check_f1f2(lat, fam.feasible)
        ok &= _expect(out, f"{name}: q-g family ({len(fam)} spaces) passes (F3)(F4) then (F1)(F2)",
                      bool(f34) and bool(f12))
    return CaseResult(ok, out)


def nested_codes_strong() -> CaseResult:
    from .rmcodes import code_qmatroid, oracle_rank
    c = cp.codes()
    lat = cp.lat24()
    out: list[str] = []
    ok = True
    for big, small in (("gab2", "gab1"), ("gab3", "gab2")):
        pair = cp.strong_pairs()[f"{big}>{small}"]
        fam = qg_family(pair)
        ok &= _expect(out, f"{big} > {small}: strong, q-g family of {len(fam)} spaces passes (F1)-(F4)",
                      pair.certificate == "strong" and bool(qd.check_f3f4(lat, fam.feasible)))
    for name, C in c.items():
        if C.n != 4:
            continue
        M = code_qmatroid(C)
        agree = all(oracle_rank(C, lat[i]) == M.r(i) for i in range(lat.size))
        ok &= _expect(out, f"{name}: support ranks equal G.A^T ranks on all {lat.size} subspaces", agree)
    return CaseResult(ok, out)


def rank_identities() -> CaseResult:
    out: list[str] = []
    ok = True
    for name, D in cp.qdelta_corpus().items():
        lat = D.lattice
        rho = qd.rank_delta_table(D)
        dual = qd.dual(D)
        rho_d = qd.rank_delta_table(dual)
        p = lat.perp_table(D.form)
        up, lo = qd.upper_lower(D)
        feas = np.zeros(lat.size, dtype=bool)
        feas[list(D.feasible)] = True
        conds = [
            bool(np.array_equal(rho == lat.n, feas)),
            all(rho_d[p[a]] == rho[a] for a in range(lat.size)),
            up.full_rank == rho[lat.top],
            qm.dual(lo, D.form).full_rank == rho[lat.zero],
            all((qd.birank(D, x, p[x]) == lat.n) == feas[x] for x in range(lat.size)),
        ]
        ok &= _expect(out, f"{name}: all five rank identities", all(conds))
    return CaseResult(ok, out)


CASES: dict[str, PaperCase] = {c.id: c for c in [
    PaperCase("prop-weak-not-strong", "sandwich holds, rank-difference fails at (<e1,e2,e3>, <e1,e2>)", weak_not_strong),
    PaperCase("weak-qg-not-qdelta", "weak q-g family fails (F1) at X=<e1,e2,e4>, Y=<e1,e3>, A=<e1,e2>", weak_qg_not_qdelta),
    PaperCase("even-dims", "even-dimensional family is q-Delta but not a weak q-g family", even_dims_not_weak_qg),
    PaperCase("spread", "{0, E} plus a spread is q-Delta with upper U(4,4) and lower U(0,4)", spread_example),
    PaperCase("dim4-characterization", "covering conditions agree with (F1)(F2) on random families", dim4_characterization),
    PaperCase("restriction-fails", "both attempted restrictions of the spread example fail (F2) at A = T", restriction_fails),
    PaperCase("qmatroid-families", "bases, independents and spanning spaces are q-Delta", qmatroid_families_are_qdelta),
    PaperCase("qg-is-qdelta", "q-g families of strong pairs satisfy (F3)(F4) and (F1)(F2)", qg_is_qdelta),
    PaperCase("nested-codes", "nested Gabidulin codes give strong pairs; both rank formulas agree", nested_codes_strong),
    PaperCase("rank-identities", "rank and birank identities on every test q-Delta-matroid", rank_identities),
]}


def get_case(case_id: str) -> PaperCase:
    try:
        return CASES[case_id]
    except KeyError:
        raise UnknownCase(f"unknown case {case_id!r}; known: {', '.join(CASES)}") from None
