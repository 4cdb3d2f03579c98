"""Exact matrix algebra over GF(q): reduced row echelon form, rank, kernel.

Over GF(2) rows are packed into Python ints and reduced with XOR; other
fields go through the generic path. Pivots are always the leftmost nonzero
column with the topmost candidate row, so results are canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .gf import GF


@dataclass(frozen=True)
class MatGF:
    field: GF
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, F: GF, rows: Iterable[Sequence[int]], cols: int | None = None) -> "MatGF":
        rows = tuple(tuple(F.element(x) for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise DimensionMismatch("cols is required for an empty matrix")
            cols = len(rows[0])
        return cls(F, len(rows), cols, rows)

    @classmethod
    def identity(cls, F: GF, n: int) -> "MatGF":
        return cls(F, n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, F: GF, rows: int, cols: int) -> "MatGF":
        return cls(F, rows, cols, tuple((0,) * cols for _ in range(rows)))

    def transpose(self) -> "MatGF":
        return MatGF(self.field, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                     tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "MatGF") -> "MatGF":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        F = self.field
        cols_b = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for r in self.entries:
            row = []
            for c in cols_b:
                acc = 0
                for x, y in zip(r, c):
                    if x and y:
                        acc = F.add(acc, F.mul(x, y))
                row.append(acc)
            out.append(tuple(row))
        return MatGF(F, self.rows, other.cols, tuple(out))

    def stack(self, other: "MatGF") -> "MatGF":
        if self.cols != other.cols:
            raise DimensionMismatch("column counts differ")
        return MatGF(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)


# -- GF(2) bit packing: column j is bit (cols - 1 - j), so the leftmost column is the top bit

def pack(row: Sequence[int]) -> int:
    v = 0
    for x in row:
        v = (v << 1) | x
    return v


def unpack(v: int, cols: int) -> tuple[int, ...]:
    return tuple((v >> (cols - 1 - j)) & 1 for j in range(cols))


def rref_bits(rows: Iterable[int], cols: int) -> tuple[list[int], list[int]]:
    """RREF of bit-packed GF(2) rows; returns (nonzero reduced rows, pivot columns)."""
    pivrows: list[int] = []
    for v in rows:
        for r in pivrows:
            if v & (1 << (r.bit_length() - 1)):
                v ^= r
        if v:
            top = 1 << (v.bit_length() - 1)
            pivrows = [r ^ v if r & top else r for r in pivrows]
            pivrows.append(v)
    pivrows.sort(reverse=True)
    return pivrows, [cols - r.bit_length() for r in pivrows]


def _rref_generic(F: GF, entries: Sequence[Sequence[int]], cols: int) -> tuple[list[list[int]], list[int]]:
    A = [list(r) for r in entries]
    pivots: list[int] = []
    top = 0
    for c in range(cols):
        piv = next((i for i in range(top, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[top], A[piv] = A[piv], A[top]
        inv = F.inv(A[top][c])
        if inv != 1:
            A[top] = [F.mul(inv, x) for x in A[top]]
        prow = A[top]
        for i in range(len(A)):
            if i != top and A[i][c]:
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], prow)]
        pivots.append(c)
        top += 1
        if top == len(A):
            break
    return A[:top], pivots


def rref_rows(F: GF, entries: Sequence[Sequence[int]], cols: int) -> tuple[tuple[tuple[int, ...], ...], list[int]]:
    """RREF as (nonzero rows, pivots) on plain row sequences."""
    if F.q == 2:
        rows, pivots = rref_bits((pack(r) for r in entries), cols)
        return tuple(unpack(r, cols) for r in rows), pivots
    rows, pivots = _rref_generic(F, entries, cols)
    return tuple(tuple(r) for r in rows), pivots


def rref(M: MatGF) -> tuple[MatGF, tuple[int, ...], int]:
    """Reduced row echelon form; R keeps M's row count (zero rows at the bottom)."""
    rows, pivots = rref_rows(M.field, M.entries, M.cols)
    padded = rows + tuple((0,) * M.cols for _ in range(M.rows - len(rows)))
    return MatGF(M.field, M.rows, M.cols, padded), tuple(pivots), len(pivots)


def rank(M: MatGF) -> int:
    return len(rref_rows(M.field, M.entries, M.cols)[1])


def kernel_rows(F: GF, entries: Sequence[Sequence[int]], cols: int) -> tuple[tuple[int, ...], ...]:
    """Basis (in RREF) of the right kernel {x : M x = 0}."""
    rows, pivots = rref_rows(F, entries, cols)
    pivset = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivset:
            continue
        x = [0] * cols
        x[f] = 1
        for r, pc in zip(rows, pivots):
            if r[f]:
                x[pc] = F.neg(r[f])
        basis.append(x)
    return rref_rows(F, basis, cols)[0]


def kernel(M: MatGF) -> MatGF:
    rows = kernel_rows(M.field, M.entries, M.cols)
    return MatGF(M.field, len(rows), M.cols, rows)


def in_rowspace(M: MatGF, v: Sequence[int]) -> bool:
    return rank(M.stack(MatGF(M.field, 1, M.cols, (tuple(v),)))) == rank(M)


def is_invertible(M: MatGF) -> bool:
    return M.rows == M.cols and rank(M) == M.rows
