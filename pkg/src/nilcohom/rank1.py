"""Scalar ranges for non-cocompact lattices in Isom(H^n_K), K = R, C, H.

Filling degrees of such lattices are known in the following degrees:

    K = R:  deg cFV^j = j/(j-1) for 2 <= j <= n-1,  deg cFV^n = 1
    K = C:  deg cFV^j = j/(j-1) for 2 <= j <= n-1,  deg cFV^n = (n+1)/(n-1),
            deg cFV^j = (j+1)/j for n+1 <= j <= 2n-1, deg cFV^{2n} = 1
    K = H:  deg cFV^j = j/(j-1) for 2 <= j <= n-1,  deg cFV^{4n} = 1

Every other degree is reported as unknown rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeOutOfRange, DegreeTooHigh, InternalInconsistency, UnknownDegree, ValidationError
from .obstruction import FillingDegrees, fmt_rational

_FIELD_DIM = {"R": 1, "C": 2, "H": 4}
# sqrt(-delta): curvature pinching -1 for R, -1/4 for C and H
_SQRT_NEG_PINCHING = {"R": Fraction(1), "C": Fraction(1, 2), "H": Fraction(1, 2)}


@dataclass(frozen=True)
class Rank1Params:
    field: str
    n: int

    def __post_init__(self):
        f = str(self.field).strip().upper()
        if f in ("O", "OCTONIONS", "CA"):
            raise UnknownDegree("no filling function computations are available for the octonionic plane")
        if f not in _FIELD_DIM:
            raise ValidationError(f"field must be one of R, C, H; got {self.field!r}")
        object.__setattr__(self, "field", f)
        if not isinstance(self.n, int) or self.n < 2:
            raise ValidationError(f"n must be an integer >= 2, got {self.n!r}")

    @property
    def d(self) -> int:
        return _FIELD_DIM[self.field]

    @property
    def delta(self) -> Fraction:
        return Fraction(-1) if self.field == "R" else Fraction(-1, 4)

    @property
    def sqrt_neg_delta(self) -> Fraction:
        return _SQRT_NEG_PINCHING[self.field]

    def known_degrees(self) -> list[int]:
        n = self.n
        if self.field == "R":
            return list(range(2, n + 1))
        if self.field == "C":
            return list(range(2, 2 * n + 1))
        return list(range(2, n)) + [4 * n]

    def max_known_nk(self) -> int:
        """Largest k with every degree 2..k known."""
        k = 1
        known = set(self.known_degrees())
        while k + 1 in known:
            k += 1
        return k

    def corollary_range(self) -> range:
        """Degrees k covered by the l^p vanishing statement."""
        n = self.n
        if self.field == "R":
            return range(1, n - 1)
        if self.field == "C":
            return range(1, 2 * n - 2)
        return range(1, n)


def confdim(p: Rank1Params) -> int:
    return p.d * (p.n + 1) - 2


def filling_degree(p: Rank1Params, j: int) -> Fraction:
    n = p.n
    if j >= 2 and j <= n - 1:
        return Fraction(j, j - 1)
    if p.field == "R" and j == n:
        return Fraction(1)
    if p.field == "C":
        if j == n:
            return Fraction(n + 1, n - 1)
        if n + 1 <= j <= 2 * n - 1:
            return Fraction(j + 1, j)
        if j == 2 * n:
            return Fraction(1)
    if p.field == "H" and j == 4 * n:
        return Fraction(1)
    if p.field == "H" and n <= j < 4 * n:
        raise UnknownDegree(
            f"filling degree j={j} is not known for quaternionic lattices (known: j <= {n - 1} and j = {4 * n})"
        )
    raise UnknownDegree(f"filling degree j={j} is not known for K={p.field}, n={n}")


def filling_degree_table(p: Rank1Params, upto: int | None = None) -> FillingDegrees:
    """All known degrees, or degrees 2..upto (raising on the first unknown one)."""
    js = p.known_degrees() if upto is None else range(2, upto + 1)
    return FillingDegrees({j: filling_degree(p, j) for j in js}, exact=True)


def nk_rank1(p: Rank1Params, k: int) -> Fraction:
    if k < 1:
        raise DegreeOutOfRange(f"k must be >= 1, got {k}")
    out = Fraction(1)
    for j in range(2, k + 1):
        out *= filling_degree(p, j)
    return out


def nk_closed_form(p: Rank1Params, k: int) -> int:
    """The tabulated values of N_k, used to cross-check the product."""
    n = p.n
    if k == 1:
        return 1
    if p.field == "R":
        if 2 <= k <= n - 1:
            return k
        if k == n:
            return n - 1
    elif p.field == "C":
        if k <= n - 1:
            return k
        if n <= k <= 2 * n - 1:
            return k + 1
        if k == 2 * n:
            return 2 * n
    elif 2 <= k <= n - 1:
        return k
    raise UnknownDegree(f"N_{k} is not known for K={p.field}, n={n}")


def pansu_bound(p: Rank1Params, k: int) -> Fraction:
    """1 + (dn - k - 1)/k * sqrt(-delta)."""
    if k < 1:
        raise DegreeOutOfRange(f"k must be >= 1, got {k}")
    num = p.d * p.n - k - 1
    if num <= 0:
        raise DegreeTooHigh(f"dn - k - 1 = {num} is not positive for K={p.field}, n={p.n}, k={k}")
    return 1 + Fraction(num, k) * p.sqrt_neg_delta


def induction_range(p: Rank1Params, k: int) -> Fraction:
    return Fraction(confdim(p)) / nk_rank1(p, k)


def vanishing_closed_form(p: Rank1Params, k: int) -> Fraction:
    n = p.n
    if p.field == "R":
        return Fraction(n - 1, k)
    if p.field == "C":
        return Fraction(2 * n + k - 1, 2 * k)
    return Fraction(4 * n + k - 1, 2 * k)


def lp_vanishing_range(p: Rank1Params, k: int) -> Fraction:
    """Upper end of the p-range on which H^k(lattice, l^p) vanishes."""
    if k not in p.corollary_range():
        rng = p.corollary_range()
        raise DegreeOutOfRange(
            f"k={k} outside the vanishing range {rng.start}..{rng.stop - 1} for K={p.field}, n={p.n}"
        )
    value = min(induction_range(p, k), pansu_bound(p, k))
    closed = vanishing_closed_form(p, k)
    if value != closed:
        raise InternalInconsistency(
            f"min(confdim/N_k, Pansu bound) = {value} but closed form gives {closed} (K={p.field}, n={p.n}, k={k})"
        )
    return value


def unitary_degrees(p: Rank1Params) -> list[int]:
    """Known k with 2 N_k < confdim, i.e. where induction applies at p = 2."""
    return [k for k in range(1, p.max_known_nk() + 1) if 2 * nk_rank1(p, k) < confdim(p)]


def _maybe(fn, *args):
    try:
        return fn(*args)
    except (UnknownDegree, DegreeOutOfRange):
        return None


def rank1_row(p: Rank1Params, k: int) -> dict:
    in_range = k in p.corollary_range()
    nk = _maybe(nk_rank1, p, k)
    return {
        "k": k,
        "N_k": nk,
        "confdim": confdim(p),
        "pansu_bound": _maybe(pansu_bound, p, k),
        "induction_range": _maybe(induction_range, p, k),
        "vanishing": lp_vanishing_range(p, k) if in_range else None,
        "status": "in corollary range" if in_range else "outside corollary range",
    }


def rank1_table(p: Rank1Params) -> list[dict]:
    """Rows for every k in the vanishing range plus the next degree above it."""
    rng = p.corollary_range()
    last = max(rng.stop, 1)
    return [rank1_row(p, k) for k in range(1, last + 1)]


def row_to_json(row: dict) -> dict:
    return {key: (fmt_rational(v) if isinstance(v, Fraction) else v) for key, v in row.items()}
