"""Command-line front end.

Exit codes: 0 pass, 1 the checked property fails (a witness is printed),
2 input error, 3 a search found a counterexample.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cases as case_lib
from . import qdelta as qd
from . import qmatroid as qm
from .errors import (
    BasisMismatch,
    CertificateMissing,
    InternalInconsistency,
    NotAQMatroid,
    QMatroidError,
)
from .gf import GF
from .fileio import (
    parse_code,
    parse_family,
    parse_gram,
    parse_qmatroid,
    parse_subspace,
    read_text,
    render_family,
)
from .qg import QGPair, qg_family, weak_qg_family
from .rmcodes import code_qmatroid, nested_pair
from .search import TARGETS, run_search
from .strongmap import CRITERIA, basis_sandwich, is_weak
from .subspace import enumerate_subspaces, lattice

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_FOUND = 0, 1, 2, 3


class Fail(Exception):
    """The checked property does not hold; the message carries the witness."""


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _form(args, lat=None):
    if not getattr(args, "form", None):
        return None
    form = parse_gram(read_text(args.form))
    if lat is not None and (form.gram.field != lat.field or form.n != lat.n):
        raise QMatroidError(f"Gram matrix is {form.n}x{form.n} over GF({form.gram.field.q}), "
                            f"ambient is F_{lat.q}^{lat.n}")
    return form


def _load_family(args, path):
    lat, fam = parse_family(read_text(path))
    return lat, [lat.id_of(s) for s in fam], _form(args, lat)


def _load_qmatroid(args, path) -> qm.QMatroid:
    text = read_text(path)
    form = None
    if args.form:
        form = parse_gram(read_text(args.form))
    return parse_qmatroid(text, form)


def _family_text(lat, ids, comment="") -> str:
    return render_family(lat.q, lat.n, [lat[i] for i in sorted(ids)], comment)


# -- commands ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    if args.n < 1:
        raise QMatroidError("n must be positive")
    F = GF.of_order(args.q)
    if args.k is not None:
        subs = enumerate_subspaces(F, args.n, args.k)
        print(len(subs) if args.count else "\n".join(s.render() for s in subs))
        return EXIT_PASS
    lat = lattice(args.q, args.n)
    if args.count:
        print(" ".join(str(len(ids)) for ids in lat.by_dim))
    else:
        for i, s in enumerate(lat.subspaces):
            print(f"{i} {s.dim} {s.render()}")
    return EXIT_PASS


def cmd_verify(args) -> int:
    lat, ids, form = _load_family(args, args.file)
    if args.axioms == "qmatroid":
        rep = qm.check_basis_axioms(lat, ids) if ids else None
        if rep is None:
            raise QMatroidError("empty family")
    elif args.axioms == "f1f2":
        rep = qd.check_f1f2(lat, ids, form)
    elif args.axioms == "f3f4":
        rep = qd.check_f3f4(lat, ids, form)
    else:
        rep = qd.is_saturated(lat, ids)
    print(f"{args.axioms}: {rep.describe()}")
    return EXIT_PASS if rep else EXIT_FAIL


def cmd_qmatroid(args) -> int:
    try:
        M = _load_qmatroid(args, args.file)
    except (NotAQMatroid, BasisMismatch) as exc:
        if args.action == "validate":
            raise Fail(str(exc)) from exc
        raise
    lat = M.lattice
    if args.action == "validate":
        print(f"q-matroid of rank {M.full_rank} on F_{lat.q}^{lat.n}: {qm.validate(M).describe()}")
    elif args.action == "dump":
        _emit(qm.dump_ranks(M), args.output)
    elif args.action == "dual":
        D = qm.dual(M, M.form)
        _emit(_family_text(lat, D.families.bases, f"bases of the dual (rank {D.full_rank})"), args.output)
    else:
        fam = qm.derived(M)
        for name in ("independents", "bases", "spanning", "circuits", "flats", "hyperplanes", "loops", "coloops"):
            members = sorted(getattr(fam, name))
            print(f"{name} ({len(members)}):")
            for i in members:
                print(f"  {lat[i].render()}")
    return EXIT_PASS


def cmd_strongmap(args) -> int:
    M1, M2 = _load_qmatroid(args, args.upper), _load_qmatroid(args, args.lower)
    print(is_weak(M1, M2).describe())
    print(basis_sandwich(M1, M2).describe())
    names = list(CRITERIA) if args.criterion == "all" else [args.criterion]
    verdicts = []
    for name in names:
        rep = CRITERIA[name](M1, M2)
        print(rep.describe())
        verdicts.append(bool(rep))
    if len(set(verdicts)) > 1:
        raise InternalInconsistency("strong-map criteria disagree")
    return EXIT_PASS if all(verdicts) else EXIT_FAIL


def cmd_qg(args) -> int:
    M1, M2 = _load_qmatroid(args, args.upper), _load_qmatroid(args, args.lower)
    try:
        if args.mode == "weak":
            fam = weak_qg_family(QGPair.weak(M1, M2))
        else:
            fam = qg_family(QGPair.strong(M1, M2))
    except CertificateMissing as exc:
        raise Fail(str(exc)) from exc
    _emit(_family_text(M1.lattice, fam.feasible, f"{args.mode} q-g family"), args.output)
    return EXIT_PASS


def cmd_qdelta(args) -> int:
    lat, ids, form = _load_family(args, args.file)
    rep = qd.check_f1f2(lat, ids)
    if not rep:
        raise Fail(f"input is not a q-Delta-matroid: {rep.describe()}")
    D = qd.QDeltaMatroid(lat, frozenset(ids), form)
    if args.action == "dual":
        _emit(_family_text(lat, qd.dual(D).feasible, "dual q-Delta-matroid"), args.output)
    elif args.action == "upper-lower":
        up, lo = qd.upper_lower(D)
        _emit(_family_text(lat, up.families.bases, f"upper q-matroid bases (rank {up.full_rank})")
              + _family_text(lat, lo.families.bases, f"lower q-matroid bases (rank {lo.full_rank})"), args.output)
    elif args.action == "rank":
        if args.subspace:
            a = parse_subspace(args.subspace, lat.field, lat.n)
            print(qd.rank_delta(D, a))
        else:
            for i, r in enumerate(qd.rank_delta_table(D)):
                print(f"{i} {lat.dim(i)} {int(r)} {lat[i].render()}")
    else:
        if not (args.x and args.y):
            raise QMatroidError("birank needs --x and --y")
        x = parse_subspace(args.x, lat.field, lat.n)
        y = parse_subspace(args.y, lat.field, lat.n)
        print(qd.birank(D, x, y))
    return EXIT_PASS


def cmd_codes(args) -> int:
    form = _form(args)
    if args.action == "qmatroid":
        C = parse_code(read_text(args.files[0]))
        _emit(qm.dump_ranks(code_qmatroid(C, form)), args.output)
        return EXIT_PASS
    if len(args.files) != 2:
        raise QMatroidError("codes nested needs two code files")
    C1, C2 = (parse_code(read_text(p)) for p in args.files)
    pair = nested_pair(C1, C2, form)
    fam = qg_family(pair)
    print(f"strong certificate: {pair.report.describe()}")
    print(f"q-g family: {len(fam)} spaces, (F3)(F4): {qd.check_f3f4(fam.lattice, fam.feasible).describe()}")
    if args.output:
        _emit(_family_text(fam.lattice, fam.feasible, "q-g family of the nested pair"), args.output)
    return EXIT_PASS


def cmd_reproduce(args) -> int:
    if args.all:
        ids = list(case_lib.CASES)
    elif args.case:
        ids = [args.case]
    else:
        raise QMatroidError("name a case or pass --all")
    ok = True
    for cid in ids:
        case = case_lib.get_case(cid)
        res = case.run()
        print(f"[{'PASS' if res.ok else 'FAIL'}] {case.id}: {case.expectation}")
        for line in res.lines:
            print(f"    {line}")
        ok &= res.ok
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_search(args) -> int:
    res = run_search(args.target, args.budget, args.seed, args.q, args.n, args.witness)
    for line in res.log:
        print(line)
    if res.found:
        if args.witness:
            print(f"witness written to {args.witness}")
        else:
            sys.stdout.write(res.witness)
        return EXIT_FOUND
    return EXIT_PASS


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--form", metavar="GRAM", help="Gram matrix file of the bilinear form (default identity)")
    common.add_argument("--threads", type=int, default=None, metavar="N",
                        help="worker count; accepted for compatibility, checks run in one process")
    common.add_argument("-o", "--output", metavar="PATH", help="write the result here instead of stdout")

    p = argparse.ArgumentParser(prog="qmatroids", description="q-matroids, strong maps and q-Delta-matroids")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common], help="list subspaces of F_q^n")
    s.add_argument("q", type=int)
    s.add_argument("n", type=int)
    s.add_argument("k", type=int, nargs="?")
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", parents=[common], help="check a family file against axioms")
    s.add_argument("file")
    s.add_argument("--axioms", choices=("f1f2", "f3f4", "saturated", "qmatroid"), default="f1f2")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("qmatroid", parents=[common], help="q-matroid given by bases or a rank table")
    s.add_argument("action", choices=("validate", "dump", "dual", "derived"))
    s.add_argument("file")
    s.set_defaults(func=cmd_qmatroid)

    s = sub.add_parser("strongmap", parents=[common], help="is Id: upper -> lower a strong map?")
    s.add_argument("action", choices=("check",))
    s.add_argument("--upper", required=True)
    s.add_argument("--lower", required=True)
    s.add_argument("--criterion", choices=(*CRITERIA, "all"), default="all")
    s.set_defaults(func=cmd_strongmap)

    s = sub.add_parser("qg", parents=[common], help="weak q-g or q-g family of a pair")
    s.add_argument("action", choices=("build",))
    s.add_argument("--upper", required=True)
    s.add_argument("--lower", required=True)
    s.add_argument("--mode", choices=("weak", "strong"), default="strong")
    s.set_defaults(func=cmd_qg)

    s = sub.add_parser("qdelta", parents=[common], help="operations on a q-Delta-matroid family file")
    s.add_argument("action", choices=("dual", "upper-lower", "rank", "birank"))
    s.add_argument("file")
    s.add_argument("--subspace", help="rank of this subspace only (digit-string vectors)")
    s.add_argument("--x", help="birank argument X")
    s.add_argument("--y", help="birank argument Y, orthogonal to X")
    s.set_defaults(func=cmd_qdelta)

    s = sub.add_parser("codes", parents=[common], help="rank-metric codes")
    s.add_argument("action", choices=("qmatroid", "nested"))
    s.add_argument("files", nargs="+", help="code file(s); nested takes the larger code first")
    s.set_defaults(func=cmd_codes)

    s = sub.add_parser("paper", parents=[common], help="run named reproductions")
    s.add_argument("case", nargs="?", help=f"one of: {', '.join(case_lib.CASES)}")
    s.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("search", parents=[common], help="randomized counterexample search")
    s.add_argument("--target", choices=TARGETS, required=True)
    s.add_argument("--budget", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--q", type=int, default=2)
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--witness", metavar="PATH", help="write a counterexample family here")
    s.set_defaults(func=cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except Fail as exc:
        print(f"fail: {exc}")
        return EXIT_FAIL
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except QMatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
