"""Exact linear algebra over the rationals.

Subspaces are kept in reduced row-echelon form so that equality and
containment are plain comparisons. Ranks of (possibly large) sparse
matrices go through fraction-free Bareiss elimination on integer rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = tuple  # tuple of Fractions


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact scalars")
    return Fraction(x)


def rref(vectors: Iterable[Sequence], ncols: int) -> list[list[Fraction]]:
    """Reduced row-echelon form of the given rows; zero rows are dropped."""
    rows = [[as_fraction(x) for x in v] for v in vectors]
    rows = [r for r in rows if any(r)]
    out = []
    pivot_row = 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        prow = rows[pivot_row]
        inv = 1 / prow[col]
        prow = [x * inv for x in prow]
        rows[pivot_row] = prow
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    out = rows[:pivot_row]
    return out


def pivot_of(row: Sequence) -> int:
    for i, x in enumerate(row):
        if x != 0:
            return i
    return -1


def nullspace(matrix: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : matrix @ x = 0}, one vector per free column."""
    red = rref(matrix, ncols)
    pivots = [pivot_of(r) for r in red]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


def solve_in_basis(basis: Sequence[Sequence], v: Sequence) -> list[Fraction] | None:
    """Coordinates of v in the (independent) rows of ``basis``; None if v is outside the span."""
    n = len(v)
    m = len(basis)
    # augmented system: columns are basis vectors
    aug = [[as_fraction(basis[j][i]) for j in range(m)] + [as_fraction(v[i])] for i in range(n)]
    red = rref(aug, m + 1)
    coords = [Fraction(0)] * m
    for row in red:
        p = pivot_of(row)
        if p == m:
            return None
        coords[p] = row[m]
    return coords


def primitive_integer(v: Sequence) -> tuple[int, ...]:
    """Scale to coprime integers with the first nonzero entry positive."""
    fr = [as_fraction(x) for x in v]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        red = rref(vectors, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in red))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(unit_vectors(ambient_dim), ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(pivot_of(r) for r in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, v: Sequence) -> bool:
        if not any(as_fraction(x) for x in v):
            return True
        return Subspace.span(list(self.basis) + [v], self.ambient_dim).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return Subspace.span(list(self.basis) + list(other.basis), self.ambient_dim).dim == self.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(list(self.basis) + list(other.basis), self.ambient_dim)


def unit_vectors(n: int) -> list[tuple[Fraction, ...]]:
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


@dataclass(frozen=True)
class SparseRationalMatrix:
    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for (r, c), x in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if x == 0:
                raise ValueError(f"explicit zero stored at ({r}, {c})")

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence], cols: int | None = None) -> "SparseRationalMatrix":
        nrows = len(dense)
        ncols = cols if cols is not None else (len(dense[0]) if nrows else 0)
        entries = {}
        for r, row in enumerate(dense):
            for c, x in enumerate(row):
                x = as_fraction(x)
                if x:
                    entries[(r, c)] = x
        return cls(nrows, ncols, entries)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), x in self.entries.items():
            out[r][c] = x
        return out

    def row_dicts(self) -> list[dict]:
        rows = [dict() for _ in range(self.rows)]
        for (r, c), x in self.entries.items():
            rows[r][c] = x
        return rows

    def __matmul__(self, other: "SparseRationalMatrix") -> "SparseRationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        right = other.row_dicts()
        acc: dict = {}
        for (r, k), x in self.entries.items():
            for c, y in right[k].items():
                acc[(r, c)] = acc.get((r, c), 0) + x * y
        return SparseRationalMatrix(self.rows, other.cols, {key: v for key, v in acc.items() if v})

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def nnz(self) -> int:
        return len(self.entries)


def _bitsize(x: int) -> int:
    # numerator plus denominator bit size; denominators are 1 after row scaling
    return abs(x).bit_length() + 1


def rank_exact(m: SparseRationalMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Rows are first cleared of denominators. In each column the pivot is the
    candidate of smallest bit size, ties going to the lowest row index.
    """
    rows = []
    for row in m.row_dicts():
        if not row:
            continue
        den = lcm(*(x.denominator for x in row.values()))
        rows.append({c: int(x * den) for c, x in row.items()})
    if not rows:
        return 0

    prev = 1
    rank = 0
    for col in range(m.cols):
        best = None
        for idx in range(rank, len(rows)):
            a = rows[idx].get(col)
            if a:
                key = (_bitsize(a), idx)
                if best is None or key < best:
                    best = key
        if best is None:
            continue
        sel = best[1]
        rows[rank], rows[sel] = rows[sel], rows[rank]
        piv_row = rows[rank]
        p = piv_row[col]
        for idx in range(rank + 1, len(rows)):
            row = rows[idx]
            a = row.get(col, 0)
            new = {}
            keys = set(row) | set(piv_row) if a else row.keys()
            for c in keys:
                if c == col:
                    continue
                val = p * row.get(c, 0) - a * piv_row.get(c, 0)
                if val:
                    q, rem = divmod(val, prev)
                    assert rem == 0, "Bareiss division not exact"
                    new[c] = q
            rows[idx] = new
        prev = p
        rank += 1
        # rows emptied by elimination carry no further pivots
        tail = [r for r in rows[rank:] if r]
        rows[rank:] = tail
        if rank == len(rows):
            break
    return rank
