"""Finite-dimensional Lie algebras over Q given by structure constants.

Indices are 1-based at the public surface (``from_structure_constants``,
``structure_constants``) and 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateEntry,
    IndexOutOfRange,
    InternalGradingInconsistency,
    JacobiViolation,
    NotNilpotent,
    UnknownFamily,
    UnsupportedCenter,
    ValidationError,
    ZeroScaling,
)
from .linalg import (
    Subspace,
    as_fraction,
    nullspace,
    pivot_of,
    primitive_integer,
    rref,
    unit_vectors,
)


class LieAlgebra:
    """A Lie algebra with basis e_1..e_dim and brackets [e_i, e_j] for i < j.

    Instances are immutable once built; construct them through
    :func:`from_structure_constants` so the Jacobi identity is checked.
    """

    __slots__ = ("dim", "label", "_table")

    def __init__(self, dim: int, table: dict, label: str = ""):
        self.dim = dim
        self.label = label
        # (i, j) with i < j, 0-based -> {k: nonzero Fraction}
        self._table = {key: dict(val) for key, val in table.items() if val}

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, label={self.label!r}, nbrackets={len(self._table)})"

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __hash__(self):
        return hash((self.dim, tuple(self.structure_constants())))

    def bracket_basis(self, i: int, j: int) -> dict:
        """[e_i, e_j] as a sparse {k: coeff} dict (0-based)."""
        if i == j:
            return {}
        if i < j:
            return self._table.get((i, j), {})
        return {k: -c for k, c in self._table.get((j, i), {}).items()}

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for (i, j), col in self._table.items():
            coeff = u[i] * v[j] - u[j] * v[i]
            if coeff:
                for k, c in col.items():
                    out[k] += coeff * c
        return out

    def structure_constants(self) -> list[tuple[int, int, int, Fraction]]:
        """Sorted 1-based entries (i, j, k, c) with c nonzero."""
        return sorted(
            (i + 1, j + 1, k + 1, c)
            for (i, j), col in self._table.items()
            for k, c in col.items()
        )

    def is_abelian(self) -> bool:
        return not self._table

    def with_label(self, label: str) -> "LieAlgebra":
        return LieAlgebra(self.dim, self._table, label)

    def ad_matrix(self, i: int) -> list[list[Fraction]]:
        """Matrix of v -> [e_i, v] (rows = output coordinate)."""
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            for k, c in self.bracket_basis(i, j).items():
                m[k][j] = c
        return m


def _jacobi_residual(g: LieAlgebra, i: int, j: int, k: int) -> list[Fraction]:
    res = [Fraction(0)] * g.dim
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        for m, coef in g.bracket_basis(a, b).items():
            for t, coef2 in g.bracket_basis(m, c).items():
                res[t] += coef * coef2
    return res


def check_jacobi(g: LieAlgebra) -> None:
    for i, j, k in combinations(range(g.dim), 3):
        res = _jacobi_residual(g, i, j, k)
        if any(res):
            raise JacobiViolation((i + 1, j + 1, k + 1), res)


def from_structure_constants(dim: int, entries: Iterable, label: str = "") -> LieAlgebra:
    """Build and validate a Lie algebra from 1-based entries (i, j, k, c), i < j."""
    if not isinstance(dim, int) or dim < 1:
        raise ValidationError(f"dimension must be a positive integer, got {dim!r}")
    table: dict = {}
    seen = set()
    for entry in entries:
        i, j, k, c = entry
        if not (1 <= i < j <= dim):
            raise IndexOutOfRange(f"bracket indices ({i}, {j}) must satisfy 1 <= i < j <= {dim}")
        if not (1 <= k <= dim):
            raise IndexOutOfRange(f"output index {k} outside 1..{dim}")
        if (i, j, k) in seen:
            raise DuplicateEntry(f"duplicate structure constant for ({i}, {j}, {k})")
        seen.add((i, j, k))
        c = as_fraction(c)
        if c:
            table.setdefault((i - 1, j - 1), {})[k - 1] = c
    g = LieAlgebra(dim, table, label)
    check_jacobi(g)
    return g


def _from_table(dim: int, table: dict, label: str) -> LieAlgebra:
    g = LieAlgebra(dim, table, label)
    check_jacobi(g)
    return g


@dataclass(frozen=True)
class GradedLieAlgebra:
    algebra: LieAlgebra
    layers: tuple

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def label(self) -> str:
        return self.algebra.label

    @property
    def layer_dims(self) -> tuple[int, ...]:
        return tuple(m.dim for m in self.layers)

    def invariant_violations(self) -> list[str]:
        g = self.algebra
        problems = []
        if sum(self.layer_dims) != g.dim:
            problems.append(f"layer dims {self.layer_dims} do not sum to {g.dim}")
        total = Subspace.zero(g.dim)
        for m in self.layers:
            total = total + m
        if total.dim != g.dim:
            problems.append("layers are not independent")
        series = lower_central_series(g)
        s = len(self.layers)
        for i in range(1, s + 2):
            expected = Subspace.zero(g.dim)
            for m in self.layers[i - 1:]:
                expected = expected + m
            actual = series[i - 1] if i - 1 < len(series) else Subspace.zero(g.dim)
            if actual != expected:
                problems.append(f"C^{i} differs from the sum of layers >= {i}")
        for a, ma in enumerate(self.layers, start=1):
            for b, mb in enumerate(self.layers, start=1):
                if b < a:
                    continue
                target = self.layers[a + b - 1] if a + b <= s else Subspace.zero(g.dim)
                for u in ma.basis:
                    for v in mb.basis:
                        if not target.contains(g.bracket(u, v)):
                            problems.append(f"[m_{a}, m_{b}] not contained in m_{a + b}")
                            break
                    else:
                        continue
                    break
        return problems


def _algebra(g) -> LieAlgebra:
    return g.algebra if isinstance(g, GradedLieAlgebra) else g


def lower_central_series(g) -> list[Subspace]:
    """C^1 = g, C^i = [g, C^{i-1}], ending with the first zero subspace."""
    g = _algebra(g)
    n = g.dim
    current = Subspace.full(n)
    series = [current]
    basis = unit_vectors(n)
    while not current.is_zero():
        nxt = Subspace.span((g.bracket(e, v) for e in basis for v in current.basis), n)
        if nxt.dim == current.dim:
            raise NotNilpotent(
                f"lower central series of {g.label or 'algebra'} stabilizes at dimension {nxt.dim}"
            )
        series.append(nxt)
        current = nxt
    return series


def nilpotency_class(g) -> int:
    return len(lower_central_series(g)) - 1


def derived_dim(g) -> int:
    """dim [g, g]."""
    g = _algebra(g)
    basis = unit_vectors(g.dim)
    return Subspace.span((g.bracket(u, v) for u in basis for v in basis), g.dim).dim


def center(g) -> Subspace:
    g = _algebra(g)
    stacked = [row for i in range(g.dim) for row in g.ad_matrix(i)]
    return Subspace.span(nullspace(stacked, g.dim), g.dim)


def _invert(columns: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse of the square matrix whose columns are given."""
    n = len(columns)
    aug = [[columns[c][r] for c in range(n)] + [Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    red = rref(aug, 2 * n)
    if len(red) < n or any(pivot_of(row) >= n for row in red):
        raise ValidationError("basis change matrix is singular")
    return [row[n:] for row in red]


def _apply(mat: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in mat]


def _table_in_basis(g: LieAlgebra, basis: Sequence[Sequence], inverse, keep=None) -> dict:
    """Bracket table of g rewritten in a new basis (given as old-coordinate vectors)."""
    table = {}
    for a, b in combinations(range(len(basis)), 2):
        coords = _apply(inverse, g.bracket(basis[a], basis[b]))
        col = {k: c for k, c in enumerate(coords) if c and (keep is None or keep(a, b, k))}
        if col:
            table[(a, b)] = col
    return table


def change_of_basis(g, columns: Sequence[Sequence], label: str | None = None) -> LieAlgebra:
    """Rewrite g in the basis f_a = sum_i columns[a][i] e_i."""
    g = _algebra(g)
    cols = [[as_fraction(x) for x in c] for c in columns]
    if len(cols) != g.dim or any(len(c) != g.dim for c in cols):
        raise ValidationError("basis change must be a square matrix of size dim")
    inverse = _invert(cols)
    return _from_table(g.dim, _table_in_basis(g, cols, inverse), g.label if label is None else label)


def carnotification(g) -> GradedLieAlgebra:
    """Associated graded algebra gr(g) with its canonical layer blocks."""
    g = _algebra(g)
    series = lower_central_series(g)
    new_basis = []
    layer_of = []
    for i in range(len(series) - 1):
        deeper = set(series[i + 1].pivots)
        for row in series[i].basis:
            if pivot_of(row) not in deeper:
                new_basis.append(list(row))
                layer_of.append(i + 1)
    inverse = _invert(new_basis)
    table = _table_in_basis(
        g, new_basis, inverse, keep=lambda a, b, k: layer_of[k] == layer_of[a] + layer_of[b]
    )
    label = f"gr({g.label})" if g.label else "gr"
    h = _from_table(g.dim, table, label)
    layers = _block_layers(g.dim, [layer_of.count(i + 1) for i in range(len(series) - 1)])
    out = GradedLieAlgebra(h, layers)
    problems = out.invariant_violations()
    if problems:
        raise InternalGradingInconsistency("; ".join(problems))
    return out


def _block_layers(dim: int, sizes: Sequence[int]) -> tuple:
    units = unit_vectors(dim)
    layers = []
    start = 0
    for s in sizes:
        layers.append(Subspace.span(units[start:start + s], dim))
        start += s
    return tuple(layers)


def homogeneous_dimension(g: GradedLieAlgebra) -> int:
    return sum(i * d for i, d in enumerate(g.layer_dims, start=1))


def direct_product(g, h, label: str | None = None) -> LieAlgebra:
    g, h = _algebra(g), _algebra(h)
    n = g.dim
    table = {key: dict(col) for key, col in g._table.items()}
    for (i, j), col in h._table.items():
        table[(i + n, j + n)] = {k + n: c for k, c in col.items()}
    if label is None:
        label = f"{g.label} x {h.label}"
    return _from_table(n + h.dim, table, label)


def central_generator(g) -> tuple[int, ...]:
    """Primitive integer generator of a one-dimensional center."""
    z = center(g)
    if z.dim != 1:
        raise UnsupportedCenter(
            f"central product needs a 1-dimensional center; {_algebra(g).label or 'algebra'} has {z.dim}"
        )
    return primitive_integer(z.basis[0])


def central_product(g, h, scaling=1, label: str | None = None) -> LieAlgebra:
    """Quotient of g x h by the span of (z_g, scaling * z_h)."""
    g, h = _algebra(g), _algebra(h)
    scaling = as_fraction(scaling)
    if scaling == 0:
        raise ZeroScaling("central product scaling must be nonzero")
    zg = central_generator(g)
    zh = central_generator(h)
    prod = direct_product(g, h, label="")
    w = [Fraction(x) for x in zg] + [scaling * x for x in zh]
    # drop the last coordinate where the identified central vector is nonzero
    p = max(i for i, x in enumerate(w) if x)
    keep = [i for i in range(prod.dim) if i != p]

    def project(v):
        t = v[p] / w[p]
        return [v[i] - t * w[i] for i in keep]

    units = unit_vectors(prod.dim)
    table = {}
    for a, b in combinations(range(len(keep)), 2):
        coords = project(prod.bracket(units[keep[a]], units[keep[b]]))
        col = {k: c for k, c in enumerate(coords) if c}
        if col:
            table[(a, b)] = col
    if label is None:
        label = f"{g.label} xZ {h.label}"
    return _from_table(len(keep), table, label)


FAMILIES = ("filiform_l", "model_filiform", "heisenberg", "abelian")


def _normalize_family(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    aliases = {"l": "filiform_l", "filiform": "filiform_l", "gr_filiform_l": "model_filiform", "h": "heisenberg"}
    key = aliases.get(key, key)
    if key not in FAMILIES:
        raise UnknownFamily(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    return key


def catalog(name: str, n: int):
    """Named families.

    ``filiform_l``: [X_i, X_j] = (j - i) X_{i+j} for i + j <= n. For n <= 2 no
    pair qualifies, so l_1 and l_2 are abelian.
    ``model_filiform``: [Y_1, Y_j] = (j - 1) Y_{j+1} for 2 <= j <= n - 1;
    returned as a GradedLieAlgebra with layers (2, 1, ..., 1).
    ``heisenberg``: dimension 2n + 1 with [e_i, e_{n+i}] = e_{2n+1}.
    ``abelian``: zero bracket on Q^n.
    """
    key = _normalize_family(name)
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"family parameter must be a positive integer, got {n!r}")
    if key == "filiform_l":
        entries = [(i, j, i + j, j - i) for i in range(1, n + 1) for j in range(i + 1, n + 1) if i + j <= n]
        return from_structure_constants(n, entries, label=f"l_{n}")
    if key == "model_filiform":
        entries = [(1, j, j + 1, j - 1) for j in range(2, n)]
        g = from_structure_constants(n, entries, label=f"gr(l_{n})")
        sizes = [n] if n <= 2 else [2] + [1] * (n - 2)
        return GradedLieAlgebra(g, _block_layers(n, sizes))
    if key == "heisenberg":
        entries = [(i, n + i, 2 * n + 1, 1) for i in range(1, n + 1)]
        return from_structure_constants(2 * n + 1, entries, label=f"h_{2 * n + 1}")
    return from_structure_constants(n, [], label=f"R^{n}")
