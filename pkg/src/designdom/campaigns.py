"""Evidence-gathering runs for open questions about domination in designs.

A campaign never fails because a conjecture looks false: it returns
:class:`~designdom.report.Verdict` records (``supported``, ``refuted`` with a
re-checkable witness, or ``not-computed`` when a time or size budget ran out).
"""

from __future__ import annotations

from typing import Sequence

from .bounds import bound_girth6
from .constructors import projective_plane
from .design import Design, classify, residual
from .exact import (
    MINIMAL_ENUM_CAP,
    enumerate_min_dominating,
    enumerate_minimal_dominating,
    gamma_bnb,
    idom_exact,
)
from .fileformat import format_design
from .graph import IncidenceGraph
from .neatness import (
    find_pasch,
    is_neat_set,
    pasch_trade,
    punctured_block_sets,
)
from .report import Verdict

SUPPORTED = "supported"
REFUTED = "refuted"
NOT_COMPUTED = "not-computed"


def _gamma(d: Design, timeout: float | None):
    return gamma_bnb(IncidenceGraph(d), time_limit=timeout)


def _design_witness(d: Design) -> dict:
    return {"name": d.name, "file": format_design(d)}


def sts_uniform(designs: Sequence[Design], timeout: float | None = 60.0) -> Verdict:
    """All supplied STS(v) of one order share a domination number."""
    results = {}
    for d in designs:
        if not classify(d).is_sts:
            raise ValueError(f"{d.name or d} is not a Steiner triple system")
        results[d.name or f"design{len(results)}"] = (d, _gamma(d, timeout))
    orders = {d.v for d, _ in results.values()}
    if len(orders) != 1:
        raise ValueError(f"designs have different orders {sorted(orders)}")
    evidence = {
        name: (r.value if r.optimal else f"not-computed [{r.lower}, {r.upper}]")
        for name, (_, r) in results.items()
    }
    solved = [(name, d, r) for name, (d, r) in results.items() if r.optimal]
    values = {r.value for _, _, r in solved}
    if len(values) > 1:
        lo = min(solved, key=lambda t: t[2].value)
        hi = max(solved, key=lambda t: t[2].value)
        witness = {
            name: {"design": _design_witness(d), "gamma": r.value, "set": r.witness.to_dict()}
            for name, d, r in (lo, hi)
        }
        return Verdict(f"sts-uniform v={orders.pop()}", REFUTED, evidence, witness)
    if len(solved) < len(results):
        return Verdict(f"sts-uniform v={orders.pop()}", NOT_COMPUTED, evidence)
    return Verdict(f"sts-uniform v={orders.pop()}", SUPPORTED, evidence)


def pasch(d: Design, timeout: float | None = 60.0, trades: int = 1) -> list[Verdict]:
    """Trade up to ``trades`` Pasch configurations and compare gamma before and after."""
    configs = find_pasch(d)
    if not configs:
        return [Verdict("pasch", NOT_COMPUTED, {"configurations": 0, "note": "no configuration found"})]
    before = _gamma(d, timeout)
    out = []
    for c in configs[:trades]:
        traded = pasch_trade(d, c)
        after = _gamma(traded, timeout)
        evidence = {
            "configurations": len(configs),
            "configuration": c.to_dict(),
            "gamma_before": before.value,
            "gamma_after": after.value,
            "traded_pasch_count": len(find_pasch(traded)),
        }
        if not (before.optimal and after.optimal):
            out.append(Verdict("pasch", NOT_COMPUTED, evidence))
        elif before.value == after.value:
            out.append(Verdict("pasch", SUPPORTED, evidence))
        else:
            witness = {
                "original": _design_witness(d), "traded": _design_witness(traded),
                "set_before": before.witness.to_dict(), "set_after": after.witness.to_dict(),
            }
            out.append(Verdict("pasch", REFUTED, evidence, witness))
    return out


def projective(q: int, timeout: float | None = 60.0,
               exact_cap: int = 40) -> list[Verdict]:
    """gamma(PG(2,q)) = 2q, and super-neatness where enumeration is affordable.

    Planes with more than ``exact_cap`` vertices are certified without search:
    the girth lower bound and a punctured-block closure both give 2q.
    """
    d = projective_plane(q)
    g = IncidenceGraph(d)
    lower = bound_girth6(g)
    closures = punctured_block_sets(d)
    upper = min(len(s) for s in closures)
    evidence = {"q": q, "girth6_lower": lower, "punctured_upper": upper}
    if g.n <= exact_cap:
        res = gamma_bnb(g, time_limit=timeout)
        evidence["gamma_exact"] = res.value if res.optimal else "not-computed"
        gamma = res.value if res.optimal else None
    else:
        gamma = lower if lower == upper else None
    if gamma is None:
        verdicts = [Verdict(f"projective gamma=2q q={q}", NOT_COMPUTED, evidence)]
    elif gamma == 2 * q:
        verdicts = [Verdict(f"projective gamma=2q q={q}", SUPPORTED, evidence)]
    else:
        verdicts = [Verdict(f"projective gamma=2q q={q}", REFUTED, evidence,
                            {"design": _design_witness(d)})]

    # the weaker property (every minimum set neat) is reported as evidence
    minimum_ev = {}
    if gamma is not None and g.n <= exact_cap:
        enum = enumerate_min_dominating(g, gamma)
        minimum_ev = {"minimum_sets": len(enum.sets),
                      "all_minimum_neat": all(is_neat_set(d, s) for s in enum.sets)}
    if g.n <= MINIMAL_ENUM_CAP:
        minimal = enumerate_minimal_dominating(g)
        bad = [s for s in minimal.sets if not is_neat_set(d, s)]
        ev = {"q": q, "minimal_sets": len(minimal.sets), "non_neat": len(bad), **minimum_ev}
        if bad:
            verdicts.append(Verdict(f"projective super-neat q={q}", REFUTED, ev,
                                    {"set": bad[0].to_dict()}))
        else:
            verdicts.append(Verdict(f"projective super-neat q={q}", SUPPORTED, ev))
    else:
        verdicts.append(Verdict(f"projective super-neat q={q}", NOT_COMPUTED,
                                {"q": q, "vertices": g.n, "cap": MINIMAL_ENUM_CAP, **minimum_ev}))
    return verdicts


def biplane(d: Design, timeout: float | None = 60.0) -> Verdict:
    """A symmetric (v,k,2)-design with k >= 4 has gamma = k."""
    cls = classify(d)
    if not (cls.is_symmetric and d.lam == 2 and d.k >= 4):
        raise ValueError("biplane campaign needs a symmetric design with lambda=2, k>=4")
    res = _gamma(d, timeout)
    evidence = {"k": d.k, "gamma": res.value if res.optimal else "not-computed"}
    claim = f"biplane gamma=k ({d.v},{d.k},2)"
    if not res.optimal:
        evidence["bracket"] = [res.lower, res.upper]
        return Verdict(claim, NOT_COMPUTED, evidence)
    if res.value == d.k:
        return Verdict(claim, SUPPORTED, evidence)
    return Verdict(claim, REFUTED, evidence,
                   {"design": _design_witness(d), "set": res.witness.to_dict()})


def residual_campaign(d: Design, blocks: Sequence[int] | None = None,
                      timeout: float | None = 60.0) -> list[Verdict]:
    """gamma(residual) = gamma(D) - 1, checked for the given block indices (default: the first)."""
    res_d = _gamma(d, timeout)
    out = []
    for j in blocks if blocks is not None else [0]:
        r = residual(d, j)
        res_r = _gamma(r, timeout)
        evidence = {
            "block": j + 1,
            "gamma_design": res_d.value,
            "gamma_residual": res_r.value,
            "residual_parameters": [r.v, r.k, r.lam],
        }
        claim = f"residual gamma drop block={j + 1}"
        if not (res_d.optimal and res_r.optimal):
            out.append(Verdict(claim, NOT_COMPUTED, evidence))
        elif res_r.value == res_d.value - 1:
            out.append(Verdict(claim, SUPPORTED, evidence))
        else:
            out.append(Verdict(claim, REFUTED, evidence, {
                "design": _design_witness(d), "residual": _design_witness(r),
                "set_design": res_d.witness.to_dict(), "set_residual": res_r.witness.to_dict(),
            }))
    return out


def simple_neat(designs: Sequence[Design], timeout: float | None = 60.0) -> list[Verdict]:
    """Simple designs are neat, i.e. gamma = i.  Non-simple inputs are skipped."""
    out = []
    for d in designs:
        if not classify(d).is_simple:
            continue
        g = IncidenceGraph(d)
        gam = gamma_bnb(g, time_limit=timeout)
        if not gam.optimal:
            out.append(Verdict(f"simple-neat {d.name}", NOT_COMPUTED, {"gamma": "not-computed"}))
            continue
        idom = idom_exact(g, time_limit=timeout, gamma=gam.value)
        evidence = {"gamma": gam.value, "idom": idom.value if idom.optimal else "not-computed"}
        if not idom.optimal:
            out.append(Verdict(f"simple-neat {d.name}", NOT_COMPUTED, evidence))
        elif idom.value == gam.value:
            out.append(Verdict(f"simple-neat {d.name}", SUPPORTED, evidence))
        else:
            out.append(Verdict(f"simple-neat {d.name}", REFUTED, evidence, {
                "design": _design_witness(d), "minimum_set": gam.witness.to_dict(),
            }))
    return out


CAMPAIGNS = ("sts-uniform", "pasch", "projective", "biplane", "residual", "simple-neat")
