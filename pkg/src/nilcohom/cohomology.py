"""Chevalley-Eilenberg cohomology with trivial rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import DegreeOutOfRange
from .lie import GradedLieAlgebra, LieAlgebra, lower_central_series
from .linalg import SparseRationalMatrix, rank_exact


@dataclass(frozen=True)
class CochainBasis:
    dim: int
    degree: int
    elements: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", _subsets(self.dim, self.degree))

    def index(self) -> dict:
        return {s: i for i, s in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)


@lru_cache(maxsize=None)
def _subsets(n: int, k: int) -> tuple:
    if k < 0 or k > n:
        return ()
    return tuple(combinations(range(n), k))


def ce_differential_matrix(g, k: int) -> SparseRationalMatrix:
    """Matrix of d_k : Lambda^k g* -> Lambda^{k+1} g* in lexicographic dual bases.

    (d w)(x_0..x_k) = sum_{i<j} (-1)^{i+j} w([x_i, x_j], x_0..^i..^j..x_k)
    Rows index (k+1)-subsets, columns index k-subsets.
    """
    if isinstance(g, GradedLieAlgebra):
        g = g.algebra
    n = g.dim
    if not 0 <= k <= n:
        raise DegreeOutOfRange(f"cochain degree {k} outside 0..{n}")
    src = CochainBasis(n, k)
    dst = CochainBasis(n, k + 1)
    col_of = src.index()
    entries: dict = {}
    for row, T in enumerate(dst.elements):
        for i, j in combinations(range(k + 1), 2):
            br = g.bracket_basis(T[i], T[j])
            if not br:
                continue
            rest = T[:i] + T[i + 1:j] + T[j + 1:]
            sign_ij = -1 if (i + j) % 2 else 1
            for m, c in br.items():
                if m in rest:
                    continue
                # moving m from the front into sorted position
                pos = sum(1 for r in rest if r < m)
                S = tuple(sorted(rest + (m,)))
                val = c * sign_ij * (-1 if pos % 2 else 1)
                key = (row, col_of[S])
                total = entries.get(key, 0) + val
                if total:
                    entries[key] = total
                else:
                    entries.pop(key, None)
    return SparseRationalMatrix(len(dst), len(src), entries)


@dataclass(frozen=True)
class BettiProfile:
    algebra_label: str
    n: int
    dims: tuple
    ranks: tuple
    betti: tuple

    def to_record(self) -> dict:
        return {
            "label": self.algebra_label,
            "n": self.n,
            "dims": list(self.dims),
            "ranks": list(self.ranks),
            "betti": list(self.betti),
        }

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def differential_ranks(g: LieAlgebra) -> list[int]:
    return [rank_exact(ce_differential_matrix(g, k)) for k in range(g.dim)]


def betti_profile(g) -> BettiProfile:
    if isinstance(g, GradedLieAlgebra):
        g = g.algebra
    lower_central_series(g)  # raises NotNilpotent
    n = g.dim
    ranks = differential_ranks(g)
    dims = [comb(n, k) for k in range(n + 1)]
    betti = []
    for k in range(n + 1):
        r_out = ranks[k] if k < n else 0
        r_in = ranks[k - 1] if k >= 1 else 0
        betti.append(dims[k] - r_out - r_in)
    return BettiProfile(g.label, n, tuple(dims), tuple(ranks), tuple(betti))
