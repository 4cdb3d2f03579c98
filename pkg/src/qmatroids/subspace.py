"""Subspaces of F_q^n: canonical form, enumeration, lattice operations.

A :class:`Subspace` stores its basis in reduced row echelon form, so two
values are equal exactly when they span the same space. A
:class:`LatticeIndex` materializes every subspace of F_q^n once, numbers them
(by dimension, then lexicographically on the basis), and answers meet, join,
containment and orthogonal-complement queries by table lookup on those ids.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import AmbientMismatch, CapExceeded, DimensionMismatch, InvalidDimension, InvalidForm, NotContained
from .gf import GF, field
from .linalg import MatGF, is_invertible, kernel_rows, rref_rows

DEFAULT_LATTICE_CAP = 10**6
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Subspace:
    field: GF
    n: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def q(self) -> int:
        return self.field.q

    def matrix(self) -> MatGF:
        return MatGF(self.field, self.dim, self.n, self.basis)

    def vectors(self):
        """Yield every vector of the subspace (q^dim of them)."""
        F = self.field
        for coeffs in itertools.product(range(F.q), repeat=self.dim):
            v = [0] * self.n
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, row)]
            yield tuple(v)

    def render(self) -> str:
        if not self.basis:
            return "0"
        return " ".join(render_vector(r) for r in self.basis)

    def __str__(self) -> str:
        return f"<{self.render()}>"

    def __repr__(self) -> str:
        return f"Subspace(q={self.q}, n={self.n}, {self.render()})"


def render_vector(v: Sequence[int]) -> str:
    return "".join(_DIGITS[x] for x in v)


def parse_vector(text: str, F: GF) -> tuple[int, ...]:
    try:
        v = tuple(_DIGITS.index(ch) for ch in text.lower())
    except ValueError:
        raise ValueError(f"bad vector {text!r}") from None
    if any(x >= F.q for x in v):
        raise ValueError(f"vector {text!r} has entries outside GF({F.q})")
    return v


def canonicalize(F: GF, n: int, vectors) -> Subspace:
    """Canonical subspace spanned by the rows of ``vectors`` (MatGF or row sequence)."""
    if isinstance(vectors, MatGF):
        if vectors.cols != n:
            raise DimensionMismatch(f"matrix has {vectors.cols} columns, ambient dimension is {n}")
        rows = vectors.entries
    else:
        rows = [tuple(v) for v in vectors]
        if any(len(v) != n for v in rows):
            raise DimensionMismatch(f"vectors must have length {n}")
    basis, _ = rref_rows(F, rows, n)
    return Subspace(F, n, basis)


def span(F: GF, n: int, *vectors: Sequence[int]) -> Subspace:
    return canonicalize(F, n, vectors)


def unit_span(F: GF, n: int, *coords: int) -> Subspace:
    """``<e_i : i in coords>`` with 1-based coordinate indices."""
    return canonicalize(F, n, [tuple(int(j == i - 1) for j in range(n)) for i in coords])


def zero_space(F: GF, n: int) -> Subspace:
    return Subspace(F, n, ())


def full_space(F: GF, n: int) -> Subspace:
    return unit_span(F, n, *range(1, n + 1))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def lattice_size(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def vector_code(v, q: int) -> int:
    """Base-q integer of v with the first coordinate least significant (e1 -> 1, e2 -> q)."""
    return sum(x * q**j for j, x in enumerate(v))


def order_key(s: Subspace) -> tuple[int, ...]:
    """Sort key inside one dimension: sorted codes of the canonical basis rows.

    Puts <e1> before <e2> before <e1+e2> before <e3>, and <e1,e3> before <e2,e3>.
    """
    return tuple(sorted(vector_code(r, s.field.q) for r in s.basis))


def enumerate_subspaces(F: GF, n: int, k: int) -> list[Subspace]:
    """All k-dimensional subspaces of F^n, ordered by :func:`order_key`."""
    if not 0 <= k <= n:
        raise InvalidDimension(f"dimension {k} outside [0, {n}]")
    out = []
    for pivots in itertools.combinations(range(n), k):
        # free entries: row i, columns > pivots[i] that are not pivots
        free = [(i, c) for i in range(k) for c in range(pivots[i] + 1, n) if c not in pivots]
        for vals in itertools.product(range(F.q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), x in zip(free, vals):
                rows[i][c] = x
            out.append(Subspace(F, n, tuple(tuple(r) for r in rows)))
    out.sort(key=order_key)
    return out


# -- lattice operations on explicit subspaces -----------------------------------

def _same_ambient(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.n != b.n:
        raise AmbientMismatch("subspaces live in different ambient spaces")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _same_ambient(a, b)
    return canonicalize(a.field, a.n, a.basis + b.basis)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked system [A; -B]^T."""
    _same_ambient(a, b)
    F = a.field
    if not a.basis or not b.basis:
        return zero_space(F, a.n)
    # x A = y B  <=>  (x, y) [A; -B] = 0; solve for the left kernel
    stacked = list(a.basis) + [tuple(F.neg(x) for x in r) for r in b.basis]
    cols = list(zip(*stacked))  # n rows, dim a + dim b columns
    sols = kernel_rows(F, cols, len(stacked))
    vecs = []
    for s in sols:
        v = [0] * a.n
        for c, row in zip(s[: a.dim], a.basis):
            if c:
                v = [F.add(x, F.mul(c, y)) for x, y in zip(v, row)]
        vecs.append(v)
    return canonicalize(F, a.n, vecs)


def contains(a: Subspace, b: Subspace) -> bool:
    """True when b is a subspace of a."""
    return intersect(a, b) == b


def lattice_ops(a: Subspace, b: Subspace, op: str):
    if op == "sum":
        return subspace_sum(a, b)
    if op == "intersect":
        return intersect(a, b)
    if op == "contains":
        return contains(a, b)
    raise ValueError(f"unknown lattice operation {op!r}")


@dataclass(frozen=True)
class BilinearForm:
    """Nondegenerate reflexive bilinear form <u, v> = u G v^T."""

    gram: MatGF

    def __post_init__(self):
        G = self.gram
        if not is_invertible(G):
            raise InvalidForm("Gram matrix must be invertible")
        F = G.field
        sym = all(G.entries[i][j] == G.entries[j][i] for i in range(G.rows) for j in range(G.rows))
        skew = all(G.entries[i][j] == F.neg(G.entries[j][i]) for i in range(G.rows) for j in range(G.rows))
        if not (sym or skew):
            raise InvalidForm("Gram matrix must be symmetric or skew-symmetric (reflexive form)")

    @classmethod
    def identity(cls, F: GF, n: int) -> "BilinearForm":
        return _identity_form(F, n)

    @classmethod
    def from_rows(cls, F: GF, rows) -> "BilinearForm":
        return cls(MatGF.from_rows(F, rows))

    @property
    def n(self) -> int:
        return self.gram.rows

    @property
    def is_identity(self) -> bool:
        return self.gram == MatGF.identity(self.gram.field, self.n)


@lru_cache(maxsize=None)
def _identity_form(F: GF, n: int) -> BilinearForm:
    return BilinearForm(MatGF.identity(F, n))


def perp(a: Subspace, form: BilinearForm | None = None) -> Subspace:
    """{v : v G a^T = 0 for every a in the subspace}."""
    F, n = a.field, a.n
    if form is None:
        form = BilinearForm.identity(F, n)
    if form.gram.field != F or form.n != n:
        raise AmbientMismatch("form and subspace live in different ambient spaces")
    if not a.basis:
        return full_space(F, n)
    # row a -> a G^T; v must be orthogonal (standard) to all of these
    G = form.gram.entries
    rows = []
    for r in a.basis:
        rows.append(tuple(_dot(F, r, [G[j][i] for i in range(n)]) for j in range(n)))
    return canonicalize(F, n, kernel_rows(F, rows, n))


def _dot(F: GF, u, v) -> int:
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def interval_neighbors(a: Subspace, direction: str, within: Subspace | None = None) -> list[Subspace]:
    """Hyperplanes of ``a`` (codim1_inside) or covers of ``a`` inside ``within`` (cover_above)."""
    F, n = a.field, a.n
    if within is None:
        within = full_space(F, n)
    _same_ambient(a, within)
    if not contains(within, a):
        raise NotContained(f"{a} is not contained in {within}")
    if direction == "codim1_inside":
        if a.dim == 0:
            return []
        # hyperplanes of a <-> nonzero functionals up to scalar on coordinates of a
        out = set()
        for sub in enumerate_subspaces(F, a.dim, a.dim - 1):
            out.add(canonicalize(F, n, [_combine(F, c, a.basis, n) for c in sub.basis]))
        return sorted(out, key=order_key)
    if direction == "cover_above":
        out = set()
        for v in within.vectors():
            s = canonicalize(F, n, a.basis + (v,))
            if s.dim == a.dim + 1:
                out.add(s)
        return sorted(out, key=order_key)
    raise ValueError(f"unknown direction {direction!r}")


def _combine(F: GF, coeffs, rows, n):
    v = [0] * n
    for c, row in zip(coeffs, rows):
        if c:
            v = [F.add(x, F.mul(c, y)) for x, y in zip(v, row)]
    return tuple(v)


def coordinatize(a: Subspace, within: Subspace) -> Subspace:
    """Express ``a`` (contained in ``within``) in the coordinates of within's canonical basis."""
    if not contains(within, a):
        raise NotContained(f"{a} is not contained in {within}")
    F = a.field
    W = within.basis
    # within is in RREF: the coordinate of v is read off at the pivot columns
    pivots = [next(j for j, x in enumerate(r) if x) for r in W]
    return canonicalize(F, within.dim, [tuple(v[p] for p in pivots) for v in a.basis])


def embed(a: Subspace, within: Subspace) -> Subspace:
    """Inverse of :func:`coordinatize`."""
    F = within.field
    return canonicalize(F, within.n, [_combine(F, r, within.basis, within.n) for r in a.basis])


# -- the materialized lattice -------------------------------------------------

class LatticeIndex:
    """Every subspace of F_q^n, numbered, with O(1) relation queries.

    Ids are grouped by dimension (so dimension is non-decreasing in the id)
    and ordered by :func:`order_key` inside a dimension.
    """

    def __init__(self, F: GF, n: int, cap: int = DEFAULT_LATTICE_CAP):
        size = lattice_size(n, F.q)
        if size > cap:
            raise CapExceeded(f"lattice of F_{F.q}^{n} has {size} subspaces, cap is {cap}")
        self.field, self.n, self.q = F, n, F.q
        self.subspaces: list[Subspace] = []
        for k in range(n + 1):
            self.subspaces.extend(enumerate_subspaces(F, n, k))
        self.size = len(self.subspaces)
        self.ids = {s: i for i, s in enumerate(self.subspaces)}
        self.dims = np.array([s.dim for s in self.subspaces], dtype=np.int64)
        self.by_dim = [[i for i, s in enumerate(self.subspaces) if s.dim == k] for k in range(n + 1)]
        self.zero = 0
        self.top = self.size - 1
        self.points = self.by_dim[1] if n >= 1 else []
        self.hyperplanes = self.by_dim[n - 1] if n >= 1 else []

        q = F.q
        weights = [q**j for j in range(n)]
        self.vecsets: list[int] = []
        for s in self.subspaces:
            mask = 0
            for v in s.vectors():
                mask |= 1 << sum(x * w for x, w in zip(v, weights))
            self.vecsets.append(mask)
        self._by_vecset = {m: i for i, m in enumerate(self.vecsets)}
        self.std_perp = [self.ids[perp(s)] for s in self.subspaces]
        self._perp_cache: dict[BilinearForm, list[int]] = {}
        self._up: dict[int, list[int]] = {}
        self._down: dict[int, list[int]] = {}

    @classmethod
    def get(cls, q: int, n: int) -> "LatticeIndex":
        return _cached_lattice(field(q), n)

    # -- conversions ---------------------------------------------------------
    def id_of(self, s: Subspace) -> int:
        if s.field != self.field or s.n != self.n:
            raise AmbientMismatch(f"{s!r} is not a subspace of F_{self.q}^{self.n}")
        return self.ids[s]

    def __getitem__(self, i: int) -> Subspace:
        return self.subspaces[i]

    def __len__(self) -> int:
        return self.size

    def dim(self, i: int) -> int:
        return int(self.dims[i])

    def span_id(self, *vectors) -> int:
        return self.ids[canonicalize(self.field, self.n, vectors)]

    def unit_id(self, *coords: int) -> int:
        return self.ids[unit_span(self.field, self.n, *coords)]

    def same_as(self, other: "LatticeIndex") -> bool:
        return self is other or (self.field == other.field and self.n == other.n)

    # -- relations -------------------------------------------------------------
    def leq(self, i: int, j: int) -> bool:
        """Subspace i is contained in subspace j."""
        return not (self.vecsets[i] & ~self.vecsets[j])

    def meet(self, i: int, j: int) -> int:
        return self._by_vecset[self.vecsets[i] & self.vecsets[j]]

    def join(self, i: int, j: int) -> int:
        p = self.std_perp
        return p[self.meet(p[i], p[j])]

    def meet_all(self, ids: Iterable[int]) -> int:
        out = self.top
        for i in ids:
            out = self.meet(out, i)
        return out

    def join_all(self, ids: Iterable[int]) -> int:
        out = self.zero
        for i in ids:
            out = self.join(out, i)
        return out

    def perp_table(self, form: BilinearForm | None = None) -> list[int]:
        if form is None or form.is_identity:
            return self.std_perp
        if form not in self._perp_cache:
            if form.gram.field != self.field or form.n != self.n:
                raise AmbientMismatch("form does not match the lattice")
            self._perp_cache[form] = [self.ids[perp(s, form)] for s in self.subspaces]
        return self._perp_cache[form]

    def up(self, i: int) -> list[int]:
        """Covers of i: subspaces containing i with one more dimension."""
        if i not in self._up:
            self._up[i] = sorted({self.join(i, p) for p in self.points if not self.leq(p, i)})
        return self._up[i]

    def down(self, i: int) -> list[int]:
        """Hyperplanes of i: subspaces of i with one dimension less."""
        if i not in self._down:
            p = self.std_perp
            self._down[i] = sorted(p[c] for c in self.up(p[i]))
        return self._down[i]

    def below(self, i: int) -> list[int]:
        return [j for j in range(self.size) if self.leq(j, i)]

    def above(self, i: int) -> list[int]:
        return [j for j in range(self.size) if self.leq(i, j)]

    def interval(self, lo: int, hi: int) -> list[int]:
        return [j for j in range(self.size) if self.leq(lo, j) and self.leq(j, hi)]

    # -- dense tables (built on first use) ----------------------------------------
    @cached_property
    def leq_matrix(self) -> np.ndarray:
        """Boolean matrix L with L[i, j] true when i is contained in j."""
        q, n = self.q, self.n
        member = np.zeros((self.size, q**n), dtype=np.int32)
        for i, m in enumerate(self.vecsets):
            bits = [b for b in range(q**n) if (m >> b) & 1]
            member[i, bits] = 1
        outside = 1 - member
        return (member @ outside.T) == 0

    @cached_property
    def meet_table(self) -> np.ndarray:
        T = np.empty((self.size, self.size), dtype=np.int32)
        for i in range(self.size):
            vi = self.vecsets[i]
            row = T[i]
            for j in range(i, self.size):
                row[j] = self._by_vecset[vi & self.vecsets[j]]
        iu = np.triu_indices(self.size, 1)
        T[(iu[1], iu[0])] = T[iu]
        return T

    @cached_property
    def join_table(self) -> np.ndarray:
        p = np.array(self.std_perp)
        return p[self.meet_table[np.ix_(p, p)]]

    def points_outside(self, i: int) -> list[int]:
        return [z for z in self.points if not self.leq(z, i)]

    def hyperplanes_avoiding(self, z: int) -> list[int]:
        return [Z for Z in self.hyperplanes if not self.leq(z, Z)]

    def __repr__(self) -> str:
        return f"LatticeIndex(q={self.q}, n={self.n}, size={self.size})"


@lru_cache(maxsize=None)
def _cached_lattice(F: GF, n: int) -> LatticeIndex:
    return LatticeIndex(F, n)


def lattice(q: int, n: int) -> LatticeIndex:
    """Shared, cached lattice of F_q^n with the default field modulus."""
    return LatticeIndex.get(q, n)
