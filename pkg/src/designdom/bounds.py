"""Lower and upper bounds on the domination number of a design's incidence graph.

All bound values are integers; the fractional domination number is kept as an
exact ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, isqrt

from .design import Design, DesignParams
from .errors import GirthTooSmall, InconsistentTauBeta, NotSteiner, NotSts, NotSymmetric
from .graph import IncidenceGraph, girth_at_least_6


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class Bound:
    name: str
    value: int
    note: str = ""


@dataclass
class BoundReport:
    lower: list[Bound] = field(default_factory=list)
    upper: list[Bound] = field(default_factory=list)
    fractional: Fraction | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def best_lower(self) -> int | None:
        return max((b.value for b in self.lower), default=None)

    @property
    def best_upper(self) -> int | None:
        return min((b.value for b in self.upper), default=None)

    def get(self, name: str) -> int | None:
        for b in self.lower + self.upper:
            if b.name == name:
                return b.value
        return None

    def extend(self, other: "BoundReport") -> None:
        self.lower += other.lower
        self.upper += other.upper
        self.notes += other.notes

    def to_dict(self) -> dict:
        return {
            "lower": [{"name": b.name, "value": b.value, "note": b.note} for b in self.lower],
            "upper": [{"name": b.name, "value": b.value, "note": b.note} for b in self.upper],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
            "fractional": None if self.fractional is None else str(self.fractional),
            "notes": list(self.notes),
        }


def bound_naive(p: DesignParams) -> int:
    """ceil(n / (Delta + 1)) with n = v + b and Delta = max(r, k)."""
    return _cdiv(p.v + p.b, max(p.r, p.k) + 1)


def naive_ratio(p: DesignParams) -> Fraction:
    return Fraction(p.v + p.b, max(p.r, p.k) + 1)


def fractional_domination(p: DesignParams) -> Fraction:
    """Fractional domination number of the (semiregular, bipartite) incidence graph."""
    denom = p.k * p.r - 1
    return Fraction(p.v * (p.r - 1) + p.b * (p.k - 1), denom)


def fractional_weights(p: DesignParams) -> tuple[Fraction, Fraction]:
    """(point weight, block weight); every closed neighbourhood sums to exactly 1."""
    denom = p.k * p.r - 1
    return Fraction(p.r - 1, denom), Fraction(p.k - 1, denom)


def bound_fractional(p: DesignParams) -> int:
    return ceil(fractional_domination(p))


def bound_steiner_bol(p: DesignParams) -> int:
    if p.lam != 1:
        raise NotSteiner(f"lambda={p.lam}")
    return _cdiv(2 * p.v, p.k) - 1


def bound_girth6(g: IncidenceGraph) -> int:
    if not girth_at_least_6(g):
        raise GirthTooSmall("incidence graph contains a 4-cycle")
    return 2 * (g.min_degree - 1)


def bound_struc(p: DesignParams, points_chosen: int) -> int:
    """Least size of a dominating set that contains exactly ``points_chosen`` points."""
    if not 0 <= points_chosen <= p.v:
        raise ValueError(f"points_chosen must lie in [0, {p.v}]")
    return _cdiv(p.v + points_chosen * (p.k - 1), p.k)


def bounds_from_tau_beta(p: DesignParams, tau: int, beta: int) -> BoundReport:
    """Bounds driven by the transversal number and the independence number.

    The upper entries are sizes of explicit dominating sets: a minimum
    transversal plus ceil((v - tau)/2) pair-covering blocks, or plus the r
    blocks through one point.
    """
    if tau + beta != p.v:
        raise InconsistentTauBeta(f"tau + beta = {tau + beta}, expected v = {p.v}")
    rep = BoundReport()
    rep.lower.append(Bound("tau_lb", tau, "a dominating set yields a transversal"))
    rep.upper.append(Bound("tau_mid", tau + _cdiv(p.v - tau, 2), "transversal + pairing blocks"))
    rep.upper.append(Bound("tau_plus_r", tau + p.r, "transversal + blocks through a point"))
    rep.upper.append(Bound("beta_bound", p.v - beta // 2, "v - floor(beta/2)"))
    if p.is_symmetric:
        rep.notes.append(f"symmetric design: tau <= k - lambda + 1 = {tau_upper_symmetric(p)}")
    return rep


def tau_upper_symmetric(p: DesignParams) -> int:
    if not p.is_symmetric:
        raise NotSymmetric(f"b={p.b} != v={p.v}")
    return p.k - p.lam + 1


def bound_symmetric(p: DesignParams) -> int:
    if not p.is_symmetric:
        raise NotSymmetric(f"b={p.b} != v={p.v}")
    if p.lam == 1:
        return 2 * (p.k - 1)
    return 2 * (p.k - p.lam + 1)


def bound_sts_sqrt(p: DesignParams) -> int:
    """floor(v - sqrt(v/2)), i.e. the largest x with 2(v - x)^2 >= v."""
    if not p.is_sts:
        raise NotSts(f"({p.v},{p.k},{p.lam}) is not a Steiner triple system")
    v = p.v
    # smallest d >= 0 with 2 d^2 >= v
    d = isqrt(v // 2)
    while 2 * d * d < v:
        d += 1
    while d > 0 and 2 * (d - 1) ** 2 >= v:
        d -= 1
    return v - d


def punctured_block_upper(d: Design) -> int:
    """Smallest closure I_P over all punctured blocks P of a Steiner design."""
    from .neatness import punctured_block_sets

    return min(len(s) for s in punctured_block_sets(d, verify=False))


def params_report(p: DesignParams) -> BoundReport:
    """The bounds that need nothing beyond the parameters."""
    rep = BoundReport()
    rep.fractional = fractional_domination(p)
    rep.lower.append(Bound("naive", bound_naive(p), "ceil((v+b)/(max(r,k)+1))"))
    rep.lower.append(Bound("fractional", bound_fractional(p), f"ceil({rep.fractional})"))
    rep.lower.append(Bound("struc_root", bound_struc(p, 0), "ceil(v/k)"))
    if p.lam == 1:
        rep.lower.append(Bound("steiner_bol", bound_steiner_bol(p), "ceil(2v/k) - 1"))
        rep.lower.append(Bound("girth6", 2 * (min(p.r, p.k) - 1), "2(delta - 1)"))
    if p.is_symmetric:
        rep.upper.append(Bound("symmetric_2k", bound_symmetric(p), "2(k - lambda + 1)"))
    if p.is_sts:
        rep.upper.append(Bound("sts_sqrt", bound_sts_sqrt(p), "floor(v - sqrt(v/2))"))
    rep.upper.append(Bound("trivial", p.v, "all points"))
    rep.notes.append("asymptotic bounds with unspecified constants are not computed")
    return rep


def full_report(
    d: Design | DesignParams,
    tau: int | None = None,
    beta: int | None = None,
    graph: IncidenceGraph | None = None,
) -> BoundReport:
    """Every applicable bound.  ``d`` may be bare parameters, in which case
    only the closed-form entries are produced."""
    p = d.params if isinstance(d, Design) else d
    rep = params_report(p)
    if isinstance(d, Design):
        if p.lam == 1:
            g = graph if graph is not None else IncidenceGraph(d)
            # replace the closed-form girth entry by the checked graph version
            rep.lower = [b for b in rep.lower if b.name != "girth6"]
            rep.lower.append(Bound("girth6", bound_girth6(g), "2(delta - 1)"))
            rep.upper.append(Bound("punctured_block", punctured_block_upper(d), "min |I_P|, P a punctured block"))
    if tau is not None or beta is not None:
        if tau is None:
            tau = p.v - beta
        if beta is None:
            beta = p.v - tau
        rep.extend(bounds_from_tau_beta(p, tau, beta))
    return rep
