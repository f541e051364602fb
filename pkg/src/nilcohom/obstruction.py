"""Filling-degree constants and the L^p measure-equivalence threshold.

Given filling degrees deg cFV^j for j = 2..k, the constants are

    N_1 = 1,  N_k = prod_{j=2}^k deg cFV^j
    alpha_1(N) = N + 1
    alpha_i(N) = max((N + 1) P_i, P_i + alpha_{i-1}(N)),  P_i = prod_{j=2}^i deg cFV^j

and two finitely generated nilpotent groups whose k-th Betti numbers differ
cannot be mutually coboundedly L^p measure equivalent for p > d k + 2 M + 1,
where d is the polynomial growth degree and M the coboundary degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .cohomology import BettiProfile, betti_profile
from .errors import MissingDegree, ValidationError
from .lie import (
    GradedLieAlgebra,
    carnotification,
    homogeneous_dimension,
    nilpotency_class,
)
from .linalg import as_fraction

GROWTH_CONVENTION = "ball growth: Bass-Guivarc'h homogeneous dimension sum_i i*dim(m_i) of gr(g)"


def fmt_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class FillingDegrees:
    degrees: Mapping = field(default_factory=dict)
    exact: bool = False

    def __post_init__(self):
        clean = {}
        for j, d in dict(self.degrees).items():
            j = int(j)
            d = as_fraction(d)
            if j < 2:
                raise ValidationError(f"filling degrees start at j=2, got j={j}")
            if d < 1:
                raise ValidationError(f"filling degree for j={j} must be >= 1, got {d}")
            clean[j] = d
        object.__setattr__(self, "degrees", dict(sorted(clean.items())))

    def degree(self, j: int) -> Fraction:
        try:
            return self.degrees[j]
        except KeyError:
            raise MissingDegree(j) from None

    def with_exact(self, exact: bool) -> "FillingDegrees":
        return FillingDegrees(self.degrees, exact)

    def merged(self, other: Mapping) -> "FillingDegrees":
        d = dict(self.degrees)
        d.update(other)
        return FillingDegrees(d, self.exact)

    def to_dict(self) -> dict:
        return {"degrees": {str(j): fmt_rational(d) for j, d in self.degrees.items()}, "exact": self.exact}


def running_product(f: FillingDegrees, i: int) -> Fraction:
    """prod_{j=2}^i deg cFV^j (empty product 1)."""
    out = Fraction(1)
    for j in range(2, i + 1):
        out *= f.degree(j)
    return out


def nk_constant(f: FillingDegrees, k: int) -> Fraction:
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    return running_product(f, k)


def alpha(N, i: int, f: FillingDegrees) -> Fraction:
    N = as_fraction(N)
    if i < 1:
        raise ValidationError(f"alpha index must be >= 1, got {i}")
    value = N + 1
    for step in range(2, i + 1):
        P = running_product(f, step)
        value = max((N + 1) * P, P + value)
    return value


def saturated_alpha_bound(N, j: int) -> Fraction:
    """N^2 + (j - 1) N: alpha_j(N) when every running product equals N (j >= 2).

    Since alpha is monotone in the running products, this bounds alpha_j(N)
    from above whenever all products are at most N.
    """
    N = as_fraction(N)
    if j < 2:
        raise ValidationError("the saturated closed form holds for j >= 2")
    return N * N + (j - 1) * N


def growth_degree(g: GradedLieAlgebra) -> int:
    return homogeneous_dimension(g)


def default_filling_degrees(g, k_max: int = 2) -> FillingDegrees:
    """Dehn-function degree class + 1 for j = 2; higher degrees are left to the caller."""
    if k_max < 2:
        raise ValidationError("k_max must be >= 2")
    return FillingDegrees({2: nilpotency_class(g) + 1}, exact=False)


def lp_threshold(d_growth, k: int, M) -> Fraction:
    return as_fraction(d_growth) * k + 2 * as_fraction(M) + 1


@dataclass(frozen=True)
class TraceStep:
    name: str
    value: Fraction
    formula: str

    def to_list(self) -> list:
        return [self.name, fmt_rational(self.value), self.formula]


@dataclass(frozen=True)
class GroupSummary:
    label: str
    dim: int
    nilpotency_class: int
    layer_dims: tuple
    growth_degree: int
    betti: BettiProfile
    filling: FillingDegrees

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "dim": self.dim,
            "class": self.nilpotency_class,
            "gr_layer_dims": list(self.layer_dims),
            "growth_degree": self.growth_degree,
            "betti": self.betti.to_record(),
            "filling": self.filling.to_dict(),
        }


@dataclass(frozen=True)
class ObstructionReport:
    a: GroupSummary
    b: GroupSummary
    k: int
    N: Fraction
    M: Fraction
    d_growth: Fraction
    p_threshold: Fraction
    obstructed: bool
    attained: bool
    growth_convention: str
    trace: tuple

    @property
    def verdict(self) -> str:
        return "OBSTRUCTED" if self.obstructed else "NOT_OBSTRUCTED"

    @property
    def warnings(self) -> list[str]:
        out = []
        if not self.attained:
            out.append("threshold is an infimum, not attained")
        return out

    def to_dict(self) -> dict:
        return {
            "a": self.a.to_dict(),
            "b": self.b.to_dict(),
            "k": self.k,
            "b_k": [self.a.betti.betti[self.k] if self.k <= self.a.dim else 0,
                    self.b.betti.betti[self.k] if self.k <= self.b.dim else 0],
            "N": fmt_rational(self.N),
            "M": fmt_rational(self.M),
            "d_growth": fmt_rational(self.d_growth),
            "growth_convention": self.growth_convention,
            "p_threshold": fmt_rational(self.p_threshold),
            "threshold_semantics": "obstructed for every p > p_threshold"
            + ("" if self.attained else " (infimum over N > N_k, M > alpha_{k-1}(N); not attained)"),
            "attained": self.attained,
            "verdict": self.verdict,
            "trace": [s.to_list() for s in self.trace],
        }


def _summarize(g, f: FillingDegrees) -> GroupSummary:
    alg = g.algebra if isinstance(g, GradedLieAlgebra) else g
    gr = carnotification(alg)
    return GroupSummary(
        label=alg.label,
        dim=alg.dim,
        nilpotency_class=len(gr.layers),
        layer_dims=gr.layer_dims,
        growth_degree=growth_degree(gr),
        betti=betti_profile(alg),
        filling=f,
    )


def compare_groups(gA, gB, k: int, fA: FillingDegrees, fB: FillingDegrees, d_override=None) -> ObstructionReport:
    """Contrapositive of Betti-number invariance under mutually cobounded L^p-ME."""
    if k < 2:
        raise ValidationError(f"compared degree k must be >= 2, got {k}")
    A = _summarize(gA, fA)
    B = _summarize(gB, fB)
    trace = []

    def step(name, value, formula):
        trace.append(TraceStep(name, Fraction(value), formula))
        return Fraction(value)

    nA = step("N_k(A)", nk_constant(fA, k), f"prod_{{j=2}}^{k} deg cFV^j of {A.label}")
    nB = step("N_k(B)", nk_constant(fB, k), f"prod_{{j=2}}^{k} deg cFV^j of {B.label}")
    N = step("N", max(nA, nB), "max(N_k(A), N_k(B))")
    aA = step("alpha_{k-1}(N)(A)", alpha(N, k - 1, fA), f"alpha_{k - 1}(N) with degrees of {A.label}")
    aB = step("alpha_{k-1}(N)(B)", alpha(N, k - 1, fB), f"alpha_{k - 1}(N) with degrees of {B.label}")
    M = step("M", max(aA, aB), "max(alpha_{k-1}(N)(A), alpha_{k-1}(N)(B))")
    dA = step("d(A)", A.growth_degree, "sum_i i*dim m_i of gr(A)")
    dB = step("d(B)", B.growth_degree, "sum_i i*dim m_i of gr(B)")
    if d_override is not None:
        d = step("d", as_fraction(d_override), "user-supplied growth degree")
    else:
        d = step("d", max(dA, dB), "max(d(A), d(B))")
    step("p_threshold(A)", lp_threshold(dA, k, M), "d(A)*k + 2M + 1")
    step("p_threshold(B)", lp_threshold(dB, k, M), "d(B)*k + 2M + 1")
    p = step("p_threshold", lp_threshold(d, k, M), "d*k + 2M + 1")
    bA = A.betti.betti[k] if k <= A.dim else 0
    bB = B.betti.betti[k] if k <= B.dim else 0
    step("b_k(A)", bA, f"dim H^{k}({A.label})")
    step("b_k(B)", bB, f"dim H^{k}({B.label})")
    return ObstructionReport(
        a=A,
        b=B,
        k=k,
        N=N,
        M=M,
        d_growth=d,
        p_threshold=p,
        obstructed=bA != bB,
        attained=fA.exact and fB.exact,
        growth_convention=GROWTH_CONVENTION if d_override is None else "user-supplied",
        trace=tuple(trace),
    )
