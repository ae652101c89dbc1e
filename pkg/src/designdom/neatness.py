"""Neat sets, punctured blocks, neat/super-neat verdicts and Pasch trades.

For a point set P, L(P) holds the blocks meeting P and Lhat(P) the blocks
disjoint from it.  The neat closure of P is I_P = P + Lhat(P); a vertex set is
neat when it equals the closure of its own point side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .design import Design, validate_design
from .errors import IncompleteEnumeration, InvalidConfiguration, NotSteiner, NotSts
from .graph import IncidenceGraph, VertexSet


@dataclass(frozen=True)
class PointProjection:
    points: frozenset[int]
    meeting: frozenset[int]   # L(P), block indices
    disjoint: frozenset[int]  # Lhat(P), block indices


def _point_mask(points: Iterable[int]) -> int:
    m = 0
    for x in points:
        m |= 1 << x
    return m


def project(s: VertexSet) -> frozenset[int]:
    return s.points


def split_blocks(d: Design, points: Iterable[int]) -> PointProjection:
    pts = frozenset(points)
    pm = _point_mask(pts)
    meeting, disjoint = [], []
    for j, m in enumerate(d.masks):
        (meeting if m & pm else disjoint).append(j)
    return PointProjection(pts, frozenset(meeting), frozenset(disjoint))


def neat_closure(d: Design, points: Iterable[int]) -> VertexSet:
    proj = split_blocks(d, points)
    return VertexSet(proj.points, proj.disjoint)


def is_neat_set(d: Design, s: VertexSet) -> bool:
    return s == neat_closure(d, project(s))


def hat_containment(d: Design, s: VertexSet) -> bool:
    """Every block disjoint from the point side of a dominating set must be in it."""
    return split_blocks(d, s.points).disjoint <= s.blocks


def punctured_block_sets(d: Design, verify: bool = True) -> list[VertexSet]:
    """I_{B - x} for every block B and every x in B, in (block, point) order.

    For a Steiner design each of these is dominating; ``verify`` re-checks it.
    """
    if d.lam != 1:
        raise NotSteiner(f"lambda={d.lam}")
    out = []
    g = IncidenceGraph(d) if verify else None
    for blk in d.blocks:
        for x in sorted(blk):
            s = neat_closure(d, blk - {x})
            if g is not None and not g.is_dominating_mask(s.mask(d.v)):
                raise AssertionError(f"punctured closure {s.describe(d)} does not dominate")
            out.append(s)
    return out


def disjoint_partition_holds(d: Design) -> bool:
    """For a Steiner design: blocks through x, minus x, partition the other points."""
    if d.lam != 1:
        raise NotSteiner(f"lambda={d.lam}")
    everything = frozenset(range(d.v))
    for x in range(d.v):
        parts = [d.blocks[j] - {x} for j in d.blocks_through(x)]
        union = frozenset().union(*parts)
        if sum(len(p) for p in parts) != len(union) or union != everything - {x}:
            return False
    return True


@dataclass
class NeatnessReport:
    gamma: int
    idom: int
    minimum_sets: int
    neat_minimum_sets: int
    is_neat: bool
    is_super_neat: bool | None = None
    all_minimum_neat: bool = False
    minimal_sets: int | None = None
    neat_witness: VertexSet | None = None
    non_neat_witness: VertexSet | None = None
    non_neat_minimal_witness: VertexSet | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self, design: Design | None = None) -> dict:
        def w(s):
            return None if s is None else s.to_dict()

        return {
            "gamma": self.gamma,
            "idom": self.idom,
            "minimumSets": self.minimum_sets,
            "neatMinimumSets": self.neat_minimum_sets,
            "isNeat": self.is_neat,
            "isSuperNeat": "not-computed" if self.is_super_neat is None else self.is_super_neat,
            "allMinimumNeat": self.all_minimum_neat,
            "minimalSets": self.minimal_sets,
            "neatWitness": w(self.neat_witness),
            "nonNeatWitness": w(self.non_neat_witness),
            "nonNeatMinimalWitness": w(self.non_neat_minimal_witness),
            "notes": list(self.notes),
        }


def classify_neatness(d: Design, enum, idom: int, minimal_enum=None) -> NeatnessReport:
    """Count neat minimum dominating sets and decide neat / super-neat.

    ``enum`` must be the complete list of minimum dominating sets (an
    :class:`~designdom.exact.EnumerationResult`); ``minimal_enum``, when given
    and complete, the inclusion-minimal ones.
    """
    if not enum.complete:
        raise IncompleteEnumeration("minimum dominating set enumeration is incomplete")
    neat = [s for s in enum.sets if is_neat_set(d, s)]
    non_neat = [s for s in enum.sets if not is_neat_set(d, s)]
    gamma = enum.target_size
    rep = NeatnessReport(
        gamma=gamma,
        idom=idom,
        minimum_sets=len(enum.sets),
        neat_minimum_sets=len(neat),
        is_neat=bool(neat),
        all_minimum_neat=not non_neat,
        neat_witness=neat[0] if neat else None,
        non_neat_witness=non_neat[0] if non_neat else None,
    )
    if rep.is_neat != (gamma == idom):
        raise AssertionError(
            f"neat verdict {rep.is_neat} disagrees with gamma={gamma}, i={idom}"
        )
    if minimal_enum is not None and minimal_enum.complete:
        bad = [s for s in minimal_enum.sets if not is_neat_set(d, s)]
        rep.minimal_sets = len(minimal_enum.sets)
        rep.is_super_neat = not bad
        rep.non_neat_minimal_witness = bad[0] if bad else None
    else:
        rep.notes.append("super-neatness not computed: no complete minimal enumeration")
    return rep


@dataclass(frozen=True)
class PaschConfiguration:
    """Six points a..f and the four block indices carrying
    {a,b,c}, {a,d,e}, {b,d,f}, {c,e,f}, in that order."""

    points: tuple[int, int, int, int, int, int]
    blocks: tuple[int, int, int, int]

    def triples(self) -> list[frozenset[int]]:
        a, b, c, d, e, f = self.points
        return [frozenset(t) for t in ((a, b, c), (a, d, e), (b, d, f), (c, e, f))]

    def traded_triples(self) -> list[frozenset[int]]:
        a, b, c, d, e, f = self.points
        return [frozenset(t) for t in ((a, b, d), (a, c, e), (b, c, f), (d, e, f))]

    def image(self) -> "PaschConfiguration":
        """The configuration formed by the traded blocks; trading it undoes the trade."""
        a, b, c, d, e, f = self.points
        return PaschConfiguration((a, b, d, c, e, f), self.blocks)

    def to_dict(self) -> dict:
        return {"points": [x + 1 for x in self.points], "blocks": [j + 1 for j in self.blocks]}


def _label_quadruple(blocks: list[frozenset[int]], idx: tuple[int, ...]) -> PaschConfiguration:
    b1, b2, b3, b4 = (blocks[j] for j in idx)
    (a,) = b1 & b2
    (b,) = b1 & b3
    (d,) = b2 & b3
    (c,) = b1 - {a, b}
    (e,) = b2 - {a, d}
    (f,) = b3 - {b, d}
    return PaschConfiguration((a, b, c, d, e, f), idx)


def find_pasch(d: Design, limit: int | None = None) -> list[PaschConfiguration]:
    """All Pasch configurations, in lexicographic order of block quadruples."""
    if not (d.k == 3 and d.lam == 1):
        raise NotSts(f"({d.v},{d.k},{d.lam}) is not a Steiner triple system")
    masks = d.masks
    b = len(masks)
    # meets[i]: blocks after i sharing exactly one point with block i
    meets = [
        [j for j in range(i + 1, b) if (masks[i] & masks[j]).bit_count() == 1]
        for i in range(b)
    ]
    out: list[PaschConfiguration] = []
    for i in range(b):
        for j in meets[i]:
            common_ij = masks[i] & masks[j]
            for k in meets[j]:
                mk = masks[k]
                if (masks[i] & mk).bit_count() != 1 or mk & common_ij:
                    continue
                for l in meets[k]:
                    ml = masks[l]
                    if (masks[i] & ml).bit_count() != 1 or (masks[j] & ml).bit_count() != 1:
                        continue
                    if (masks[i] | masks[j] | mk | ml).bit_count() != 6:
                        continue
                    out.append(_label_quadruple(list(d.blocks), (i, j, k, l)))
                    if limit is not None and len(out) >= limit:
                        return out
    return out


def is_pasch(d: Design, c: PaschConfiguration) -> bool:
    if len(set(c.points)) != 6 or len(set(c.blocks)) != 4:
        return False
    return all(0 <= j < d.b and d.blocks[j] == t for j, t in zip(c.blocks, c.triples()))


def pasch_trade(d: Design, c: PaschConfiguration) -> Design:
    """Replace the four Pasch blocks in place by the opposite quadruple."""
    if not is_pasch(d, c):
        raise InvalidConfiguration(f"{c} is not a Pasch configuration of the design")
    blocks = list(d.blocks)
    for j, t in zip(c.blocks, c.traded_triples()):
        blocks[j] = t
    name = f"pasch({d.name})" if d.name else "pasch"
    return validate_design(d.v, blocks, 3, 1, name=name)
