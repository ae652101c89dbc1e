"""The incidence (Levi) graph of a design.

Vertex numbering: point ``x`` is vertex ``x``; block ``j`` is vertex ``v + j``.
Vertex sets are Python ints used as bit masks over those ``v + b`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .design import Design


@dataclass(frozen=True, order=True)
class VertexSet:
    """A set of graph vertices split into its point side and its block side."""

    points: frozenset[int]
    blocks: frozenset[int]

    @classmethod
    def of(cls, points: Iterable[int] = (), blocks: Iterable[int] = ()) -> "VertexSet":
        return cls(frozenset(points), frozenset(blocks))

    @classmethod
    def from_mask(cls, mask: int, v: int) -> "VertexSet":
        pts, blks = [], []
        u = 0
        while mask:
            if mask & 1:
                (pts if u < v else blks).append(u if u < v else u - v)
            mask >>= 1
            u += 1
        return cls(frozenset(pts), frozenset(blks))

    def mask(self, v: int) -> int:
        m = 0
        for x in self.points:
            m |= 1 << x
        for j in self.blocks:
            m |= 1 << (v + j)
        return m

    def __len__(self) -> int:
        return len(self.points) + len(self.blocks)

    def sort_key(self) -> tuple:
        return (sorted(self.points), sorted(self.blocks))

    def describe(self, design: Design | None = None) -> str:
        """1-based rendering; blocks are spelled out when ``design`` is given."""
        parts = [str(x + 1) for x in sorted(self.points)]
        for j in sorted(self.blocks):
            if design is None:
                parts.append(f"B{j + 1}")
            else:
                parts.append("(" + ",".join(str(x + 1) for x in sorted(design.blocks[j])) + ")")
        return "{" + ", ".join(parts) + "}"

    def to_dict(self) -> dict:
        return {
            "points": [x + 1 for x in sorted(self.points)],
            "blocks": [j + 1 for j in sorted(self.blocks)],
        }


class IncidenceGraph:
    """Bipartite graph on points and block occurrences of ``design``.

    Duplicate blocks give distinct vertices with identical neighbourhoods.
    """

    def __init__(self, design: Design):
        self.design = design
        self.v = design.v
        self.b = design.b
        self.n = design.v + design.b
        self.k = design.k
        self.r = design.r
        # block_points[j]: point mask of block j; point_blocks[x]: block-index mask
        self.block_points: tuple[int, ...] = design.masks
        pb = [0] * self.v
        for j, m in enumerate(self.block_points):
            for x in design.blocks[j]:
                pb[x] |= 1 << j
        self.point_blocks: tuple[int, ...] = tuple(pb)

    @cached_property
    def closed_nbhd(self) -> tuple[int, ...]:
        """Closed neighbourhood of each vertex as a vertex mask."""
        v = self.v
        out = [(1 << x) | (self.point_blocks[x] << v) for x in range(v)]
        out += [(1 << (v + j)) | m for j, m in enumerate(self.block_points)]
        return tuple(out)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def point_mask(self) -> int:
        return (1 << self.v) - 1

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.block_points)

    @property
    def max_degree(self) -> int:
        return max(self.r, self.k)

    @property
    def min_degree(self) -> int:
        return min(self.r, self.k)

    def degree(self, u: int) -> int:
        return self.closed_nbhd[u].bit_count() - 1

    def neighbours(self, u: int) -> list[int]:
        m = self.closed_nbhd[u] & ~(1 << u)
        return [w for w in range(self.n) if m >> w & 1]

    def dominated_by(self, mask: int) -> int:
        nb = self.closed_nbhd
        out = 0
        while mask:
            low = mask & -mask
            out |= nb[low.bit_length() - 1]
            mask ^= low
        return out

    def is_dominating_mask(self, mask: int) -> bool:
        return self.dominated_by(mask) == self.full_mask

    def is_independent_mask(self, mask: int) -> bool:
        pts = mask & self.point_mask
        blocks = mask >> self.v
        while blocks:
            low = blocks & -blocks
            if self.block_points[low.bit_length() - 1] & pts:
                return False
            blocks ^= low
        return True


def build_graph(d: Design) -> IncidenceGraph:
    return IncidenceGraph(d)


def is_dominating(g: IncidenceGraph, s: VertexSet) -> bool:
    return g.is_dominating_mask(s.mask(g.v))


def is_independent(g: IncidenceGraph, s: VertexSet) -> bool:
    return g.is_independent_mask(s.mask(g.v))


def girth_at_least_6(g: IncidenceGraph) -> bool:
    """True iff no two block vertices share two points (the graph has no 4-cycle)."""
    return all((a & c).bit_count() < 2 for a, c in combinations(g.block_points, 2))
