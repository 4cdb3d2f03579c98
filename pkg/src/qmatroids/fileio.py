"""Plain-text formats: subspace families, rank tables, Gram matrices and codes.

Family file::

    # comment
    2 4
    0
    1000 0100
    E

Line 1 is ``q n``; every other non-comment line is one subspace given by
spanning vectors (digit strings, one digit per coordinate). ``0`` is the
zero space and ``E`` the full space. Subspaces are canonicalized on load and
repeats are rejected.

A q-matroid file is either a family file listing its bases or a rank table
as written by :func:`qmatroids.qmatroid.dump_ranks`.

Gram file: ``q n`` then n rows, each one digit string.

Code file: ``q m n k`` then k rows of n entries, each entry a length-m digit
string of polynomial-basis coefficients, constant term first.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import NotAQMatroid, ParseError, QMatroidError
from .gf import GF
from .qmatroid import QMatroid, from_bases, validate
from .rmcodes import ExtFieldTower, RankMetricCode
from .subspace import BilinearForm, LatticeIndex, Subspace, canonicalize, full_space, lattice, parse_vector, render_vector, zero_space

RANK_HEADER = "# qmatroid-ranks"


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _ints(line: str, count: int, what: str, no: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"line {no}: expected {what}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"line {no}: expected {what}") from None


def _field(q: int, no: int) -> GF:
    try:
        return GF.of_order(q)
    except QMatroidError as exc:
        raise ParseError(f"line {no}: {exc}") from exc


def parse_subspace(text: str, F: GF, n: int, no: int = 0) -> Subspace:
    tokens = text.split()
    if tokens == ["0"]:
        return zero_space(F, n)
    if tokens == ["E"]:
        return full_space(F, n)
    vecs = []
    for tok in tokens:
        if len(tok) != n:
            raise ParseError(f"line {no}: vector {tok!r} does not have {n} coordinates")
        try:
            vecs.append(parse_vector(tok, F))
        except ValueError as exc:
            raise ParseError(f"line {no}: {exc}") from None
    return canonicalize(F, n, vecs)


def parse_family(text: str) -> tuple[LatticeIndex, list[Subspace]]:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty family file")
    no, head = lines[0]
    q, n = _ints(head, 2, "header 'q n'", no)
    F = _field(q, no)
    if n < 1:
        raise ParseError(f"line {no}: n must be positive")
    seen: dict[Subspace, int] = {}
    family = []
    for no, line in lines[1:]:
        s = parse_subspace(line, F, n, no)
        if s in seen:
            raise ParseError(f"line {no}: repeats the subspace of line {seen[s]}")
        seen[s] = no
        family.append(s)
    return lattice(q, n), family


def render_family(q: int, n: int, family: Iterable[Subspace], comment: str = "") -> str:
    out = [f"# {c}" for c in comment.splitlines()] if comment else []
    out.append(f"{q} {n}")
    out.extend(s.render() for s in family)
    return "\n".join(out) + "\n"


def parse_rank_table(text: str) -> QMatroid:
    first = text.lstrip().splitlines()[0] if text.strip() else ""
    try:
        fields = dict(kv.split("=") for kv in first[len(RANK_HEADER):].split())
        q, n = int(fields["q"]), int(fields["n"])
    except (ValueError, KeyError):
        raise ParseError(f"rank table header must read '{RANK_HEADER} q=<q> n=<n>'") from None
    lat = lattice(q, n)
    ranks = np.full(lat.size, -1, dtype=np.int64)
    for no, line in _lines(text):
        parts = line.split(None, 3)
        if len(parts) != 4:
            raise ParseError(f"line {no}: expected '<id> <dim> <rank> <basis>'")
        try:
            i, d, r = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"line {no}: id, dim and rank must be integers") from None
        if not 0 <= i < lat.size or lat.dim(i) != d:
            raise ParseError(f"line {no}: id {i} with dimension {d} is not in the lattice")
        if parse_subspace(parts[3], lat.field, n, no) != lat[i]:
            raise ParseError(f"line {no}: basis does not match lattice id {i}")
        ranks[i] = r
    if (ranks < 0).any():
        raise ParseError(f"rank table misses lattice id {int(np.flatnonzero(ranks < 0)[0])}")
    M = QMatroid(lat, ranks)
    rep = validate(M)
    if not rep:
        raise NotAQMatroid(f"rank table is not a q-matroid: {rep.describe()}", rep)
    return M


def parse_qmatroid(text: str, form: BilinearForm | None = None) -> QMatroid:
    """Rank table or basis family; raises NotAQMatroid when the axioms fail."""
    if text.lstrip().startswith(RANK_HEADER):
        M = parse_rank_table(text)
        return QMatroid(M.lattice, M.rank, form) if form is not None else M
    lat, family = parse_family(text)
    if not family:
        raise ParseError("a basis family needs at least one subspace")
    return from_bases(family, lat, form)


def parse_gram(text: str) -> BilinearForm:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty Gram file")
    no, head = lines[0]
    q, n = _ints(head, 2, "header 'q n'", no)
    F = _field(q, no)
    rows = []
    for no, line in lines[1:]:
        if len(line) != n:
            raise ParseError(f"line {no}: Gram row must have {n} digits")
        try:
            rows.append(parse_vector(line, F))
        except ValueError as exc:
            raise ParseError(f"line {no}: {exc}") from None
    if len(rows) != n:
        raise ParseError(f"Gram matrix needs {n} rows, found {len(rows)}")
    try:
        return BilinearForm.from_rows(F, rows)
    except QMatroidError as exc:
        raise ParseError(f"Gram matrix rejected: {exc}") from exc


def render_gram(form: BilinearForm) -> str:
    g = form.gram
    return f"{g.field.q} {g.rows}\n" + "\n".join(render_vector(r) for r in g.entries) + "\n"


def parse_code(text: str) -> RankMetricCode:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty code file")
    no, head = lines[0]
    q, m, n, k = _ints(head, 4, "header 'q m n k'", no)
    try:
        tw = ExtFieldTower.of(q, m)
    except QMatroidError as exc:
        raise ParseError(f"line {no}: {exc}") from exc
    rows = []
    for no, line in lines[1:]:
        entries = line.split()
        if len(entries) != n:
            raise ParseError(f"line {no}: expected {n} entries")
        row = []
        for e in entries:
            if len(e) != m:
                raise ParseError(f"line {no}: entry {e!r} must have {m} digits")
            try:
                row.append(tw.recombine(parse_vector(e, tw.base)))
            except ValueError as exc:
                raise ParseError(f"line {no}: {exc}") from None
        rows.append(row)
    if len(rows) != k:
        raise ParseError(f"expected {k} generator rows, found {len(rows)}")
    try:
        return RankMetricCode.from_rows(tw, rows, n)
    except QMatroidError as exc:
        raise ParseError(f"generator rejected: {exc}") from exc


def render_code(C: RankMetricCode) -> str:
    tw = C.tower
    head = f"{tw.q} {tw.m} {C.n} {C.k}"
    rows = [" ".join(render_vector(tw.expand(x)) for x in r) for r in C.G.entries]
    return "\n".join([head] + rows) + "\n"


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
