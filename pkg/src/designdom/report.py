"""Analysis pipeline and report rendering (plain text or JSON)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bounds import BoundReport, full_report
from .design import Design, classify
from .exact import (
    MINIMAL_ENUM_CAP,
    SolveResult,
    beta_exact,
    enumerate_min_dominating,
    enumerate_minimal_dominating,
    epn_certificate,
    gamma_bnb,
    idom_exact,
    tau_exact,
)
from .graph import IncidenceGraph
from .neatness import NeatnessReport, classify_neatness, hat_containment


@dataclass
class Verdict:
    claim: str
    verdict: str  # supported | refuted | not-computed
    evidence: dict = field(default_factory=dict)
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {"claim": self.claim, "verdict": self.verdict, "evidence": self.evidence}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    source: str
    design: Design
    bounds: BoundReport
    solves: dict[str, SolveResult] = field(default_factory=dict)
    enumeration: dict | None = None
    neatness: NeatnessReport | None = None
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def timed_out(self) -> bool:
        return any(not s.optimal for s in self.solves.values())

    def to_dict(self) -> dict:
        d = self.design
        cls = classify(d)
        return {
            "source": self.source,
            "parameters": {"v": d.v, "k": d.k, "lambda": d.lam, "b": d.b, "r": d.r},
            "class": {
                "simple": cls.is_simple,
                "steiner": cls.is_steiner,
                "symmetric": cls.is_symmetric,
                "sts": cls.is_sts,
            },
            "bounds": self.bounds.to_dict(),
            "solves": {k: s.to_dict() for k, s in self.solves.items()},
            "enumeration": self.enumeration,
            "neatness": None if self.neatness is None else self.neatness.to_dict(),
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def analyze(
    design: Design,
    *,
    source: str = "",
    exact: bool = False,
    enumerate_sets: bool = False,
    neat: bool = False,
    timeout: float | None = 60.0,
    budget: int | None = None,
) -> Report:
    """Bounds always; exact invariants, enumeration and neatness on request.

    ``enumerate_sets`` and ``neat`` imply ``exact``.  Raises
    :class:`~designdom.errors.BudgetExceeded` when an enumeration runs over
    ``budget`` nodes.
    """
    g = IncidenceGraph(design)
    exact = exact or enumerate_sets or neat
    rep = Report(source or design.name, design, full_report(design, graph=g))
    if not exact:
        return rep

    tau = tau_exact(design, time_limit=timeout)
    beta = beta_exact(design, time_limit=timeout, check_tau=False)
    rep.solves["tau"] = tau
    rep.solves["beta"] = beta
    if tau.optimal and beta.optimal:
        rep.bounds = full_report(design, tau=tau.value, beta=beta.value, graph=g)
    gamma = gamma_bnb(g, time_limit=timeout, node_budget=budget)
    rep.solves["gamma"] = gamma
    _check_bracket(rep.bounds, gamma)

    if (enumerate_sets or neat) and gamma.optimal:
        kwargs = {} if budget is None else {"node_budget": budget}
        enum = enumerate_min_dominating(g, gamma.value, **kwargs)
        bad_hat = [s for s in enum.sets if not hat_containment(design, s)]
        if bad_hat:
            raise AssertionError(f"hat containment fails for {bad_hat[0].describe(design)}")
        rep.enumeration = {
            "targetSize": enum.target_size,
            "minimumSets": len(enum.sets),
            "complete": enum.complete,
            "epnCertificate": epn_certificate(g, enum),
        }
        if neat:
            idom = idom_exact(g, time_limit=timeout, gamma=gamma.value)
            rep.solves["idom"] = idom
            if idom.optimal:
                minimal = None
                if g.n <= MINIMAL_ENUM_CAP:
                    minimal = enumerate_minimal_dominating(g, **kwargs)
                rep.neatness = classify_neatness(design, enum, idom.value, minimal)
    return rep


def _check_bracket(bounds: BoundReport, res: SolveResult) -> None:
    if res.optimal and not bounds.best_lower <= res.value <= bounds.best_upper:
        raise AssertionError(
            f"gamma={res.value} outside [{bounds.best_lower}, {bounds.best_upper}]"
        )


def render_text(rep: Report) -> str:
    d = rep.design
    lines = [
        f"design: {rep.source or '(unnamed)'}",
        f"parameters: v={d.v} k={d.k} lambda={d.lam} b={d.b} r={d.r}",
    ]
    cls = classify(d)
    flags = [name for name, on in (("simple", cls.is_simple), ("steiner", cls.is_steiner),
                                   ("symmetric", cls.is_symmetric), ("sts", cls.is_sts)) if on]
    lines.append(f"class: {', '.join(flags) or '-'}")
    lines.append("")
    lines.append(f"{'bound':<16} {'kind':<6} {'value':>6}  note")
    for kind, entries in (("lower", rep.bounds.lower), ("upper", rep.bounds.upper)):
        for b in entries:
            lines.append(f"{b.name:<16} {kind:<6} {b.value:>6}  {b.note}")
    lines.append(f"{'best':<16} {'':<6} {'':>6}  [{rep.bounds.best_lower}, {rep.bounds.best_upper}]")
    if rep.bounds.fractional is not None:
        lines.append(f"fractional domination number: {rep.bounds.fractional}")
    for note in rep.bounds.notes:
        lines.append(f"note: {note}")
    for key, s in rep.solves.items():
        lines.append("")
        if s.optimal:
            lines.append(f"{key} = {s.value}  ({s.nodes} nodes, {s.elapsed:.2f}s)")
        else:
            lines.append(f"{key}: not-computed ({s.status}), bracket [{s.lower}, {s.upper}]")
        w = s.witness
        if w is not None:
            if hasattr(w, "describe"):
                lines.append(f"  witness: {w.describe(d)}")
            else:
                lines.append("  witness: {" + ", ".join(str(x + 1) for x in sorted(w)) + "}")
    if rep.enumeration is not None:
        e = rep.enumeration
        lines.append("")
        lines.append(f"minimum dominating sets of size {e['targetSize']}: {e['minimumSets']}")
        lines.append(f"EPN certificate: {e['epnCertificate']}")
    if rep.neatness is not None:
        n = rep.neatness
        lines.append(f"neat minimum sets: {n.neat_minimum_sets}")
        lines.append(f"neat: {n.is_neat}  (gamma={n.gamma}, i={n.idom})")
        sn = "not-computed" if n.is_super_neat is None else n.is_super_neat
        lines.append(f"super-neat: {sn}")
        lines.append(f"every minimum set neat: {n.all_minimum_neat}")
        if n.neat_witness is not None:
            lines.append(f"  neat witness: {n.neat_witness.describe(d)}")
        if n.non_neat_witness is not None:
            lines.append(f"  non-neat witness: {n.non_neat_witness.describe(d)}")
    for v in rep.verdicts:
        lines.append(f"verdict [{v.claim}]: {v.verdict}")
    return "\n".join(lines) + "\n"


def emit_report(rep: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n"
    if fmt == "text":
        return render_text(rep)
    raise ValueError(f"unknown report format {fmt!r}")
