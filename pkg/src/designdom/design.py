"""Validated (v, k, lambda)-designs and the standard design transforms.

Points are ``0 .. v-1`` internally.  Blocks are kept in input order as a
multiset: repeated blocks are separate entries with their own index, because
each occurrence becomes its own vertex in the incidence graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import (
    BlockSizeViolation,
    DegenerateDerived,
    DegenerateResidual,
    NotSymmetric,
    PairCoverageViolation,
    TrivialDesign,
    ValidationError,
)


@dataclass(frozen=True)
class DesignParams:
    v: int
    k: int
    lam: int
    b: int
    r: int

    def __post_init__(self):
        if min(self.v, self.k, self.lam, self.b, self.r) <= 0:
            raise ValidationError(f"design parameters must be positive: {self}")
        if self.r * (self.k - 1) != self.lam * (self.v - 1):
            raise ValidationError(f"r(k-1) != lambda(v-1) for {self}")
        if self.b * self.k != self.v * self.r:
            raise ValidationError(f"bk != vr for {self}")

    @classmethod
    def from_vkl(cls, v: int, k: int, lam: int) -> "DesignParams":
        """Derive ``b`` and ``r`` from ``(v, k, lambda)``; raise if not integral."""
        if k < 2 or v < 2:
            raise ValidationError("need v >= 2 and k >= 2")
        r, rem = divmod(lam * (v - 1), k - 1)
        if rem:
            raise ValidationError(f"r = lambda(v-1)/(k-1) is not integral for ({v},{k},{lam})")
        b, rem = divmod(v * r, k)
        if rem:
            raise ValidationError(f"b = vr/k is not integral for ({v},{k},{lam})")
        return cls(v, k, lam, b, r)

    @property
    def is_steiner(self) -> bool:
        return self.lam == 1

    @property
    def is_symmetric(self) -> bool:
        return self.b == self.v

    @property
    def is_sts(self) -> bool:
        return self.k == 3 and self.lam == 1


@dataclass(frozen=True)
class DesignClass:
    is_simple: bool
    is_steiner: bool
    is_symmetric: bool
    is_sts: bool


@dataclass(frozen=True)
class Design:
    """A (v, k, lambda)-design.  Construct through :func:`validate_design`.

    ``blocks`` holds one frozenset of 0-based points per block occurrence.
    """

    v: int
    k: int
    lam: int
    blocks: tuple[frozenset[int], ...]
    name: str = field(default="", compare=False)

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def r(self) -> int:
        return self.lam * (self.v - 1) // (self.k - 1)

    @cached_property
    def params(self) -> DesignParams:
        return DesignParams(self.v, self.k, self.lam, self.b, self.r)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Each block as a point bit mask (bit ``x`` set iff point ``x`` is in it)."""
        return tuple(sum(1 << x for x in blk) for blk in self.blocks)

    def blocks_through(self, x: int) -> list[int]:
        return [j for j, m in enumerate(self.masks) if m >> x & 1]

    def sorted_blocks(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(blk)) for blk in self.blocks]

    def with_name(self, name: str) -> "Design":
        return Design(self.v, self.k, self.lam, self.blocks, name)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Design{label} ({self.v},{self.k},{self.lam}) b={self.b}>"


def validate_design(
    v: int,
    blocks: Iterable[Iterable[int]],
    k: int,
    lam: int,
    *,
    one_based: bool = False,
    name: str = "",
) -> Design:
    """Check that ``blocks`` form a (v, k, lambda)-design and return it.

    Raises :class:`BlockSizeViolation` for a block of the wrong size (or with a
    repeated point), :class:`PairCoverageViolation` naming the first pair (in
    1-based lexicographic order) whose coverage count differs from ``lam``, and
    :class:`TrivialDesign` when ``k >= v``.
    """
    if v < 2:
        raise ValidationError("a design needs at least 2 points")
    if lam <= 0:
        raise ValidationError("lambda must be positive")
    if k >= v:
        raise TrivialDesign(f"k={k} >= v={v}")
    if k < 2:
        raise ValidationError("block size must be at least 2")
    shift = 1 if one_based else 0
    parsed: list[frozenset[int]] = []
    for idx, raw in enumerate(blocks):
        pts = [int(x) - shift for x in raw]
        blk = frozenset(pts)
        if len(blk) != len(pts) or len(blk) != k:
            raise BlockSizeViolation(idx, len(blk), k)
        bad = [x for x in pts if not 0 <= x < v]
        if bad:
            raise ValidationError(f"block {idx + 1} has out-of-range point {bad[0] + shift}")
        parsed.append(blk)
    if not parsed:
        raise ValidationError("design has no blocks")

    counts: Counter[tuple[int, int]] = Counter()
    for blk in parsed:
        counts.update(combinations(sorted(blk), 2))
    for pair in combinations(range(v), 2):
        c = counts.get(pair, 0)
        if c != lam:
            raise PairCoverageViolation((pair[0] + 1, pair[1] + 1), c, lam)

    d = Design(v, k, lam, tuple(parsed), name)
    d.params  # identity checks on b and r
    return d


def classify(d: Design) -> DesignClass:
    is_simple = len(set(d.blocks)) == d.b
    is_steiner = d.lam == 1
    # every pair lies in one block, so two equal blocks would cover it twice
    assert not is_steiner or is_simple
    return DesignClass(
        is_simple=is_simple,
        is_steiner=is_steiner,
        is_symmetric=d.b == d.v,
        is_sts=d.k == 3 and d.lam == 1,
    )


def double(d: Design) -> Design:
    """The (v, k, 2 lambda)-design holding two copies of every block.

    Copies of block ``j`` sit at indices ``j`` and ``b + j``.
    """
    return validate_design(d.v, d.blocks + d.blocks, d.k, 2 * d.lam, name=_derived_name("2", d))


def complement(d: Design) -> Design:
    if d.v - d.k < 2:
        raise TrivialDesign("complement blocks would have fewer than 2 points")
    everything = frozenset(range(d.v))
    lam = d.b - 2 * d.r + d.lam
    return validate_design(
        d.v, [everything - blk for blk in d.blocks], d.v - d.k, lam,
        name=_derived_name("complement", d),
    )


def dual(d: Design) -> Design:
    """Swap points and blocks: new block ``i`` holds the old blocks through point ``i``."""
    _require_symmetric(d)
    new_blocks = [d.blocks_through(x) for x in range(d.v)]
    return validate_design(d.v, new_blocks, d.k, d.lam, name=_derived_name("dual", d))


def residual(d: Design, block_index: int) -> Design:
    """Delete block ``B`` and its points; the other blocks become ``C - B``."""
    _require_symmetric(d)
    if d.k - d.lam < 2:
        raise DegenerateResidual(f"residual blocks would have k - lambda = {d.k - d.lam} points")
    removed = d.blocks[block_index]
    keep = [x for x in range(d.v) if x not in removed]
    relabel = {x: i for i, x in enumerate(keep)}
    new_blocks = [
        [relabel[x] for x in blk - removed]
        for j, blk in enumerate(d.blocks)
        if j != block_index
    ]
    return validate_design(
        len(keep), new_blocks, d.k - d.lam, d.lam, name=_derived_name(f"residual[{block_index + 1}]", d)
    )


def derived(d: Design, block_index: int) -> Design:
    """Restrict to the points of block ``B``; the other blocks become ``C & B``."""
    _require_symmetric(d)
    if d.lam < 2:
        raise DegenerateDerived("derived design of a lambda=1 design has blocks of size 1")
    base = d.blocks[block_index]
    keep = sorted(base)
    relabel = {x: i for i, x in enumerate(keep)}
    new_blocks = [
        [relabel[x] for x in blk & base]
        for j, blk in enumerate(d.blocks)
        if j != block_index
    ]
    return validate_design(
        d.k, new_blocks, d.lam, d.lam - 1, name=_derived_name(f"derived[{block_index + 1}]", d)
    )


def block_intersection_sizes(d: Design) -> set[int]:
    return {len(a & c) for a, c in combinations(d.blocks, 2)}


def _require_symmetric(d: Design) -> None:
    if d.b != d.v:
        raise NotSymmetric(f"design has b={d.b} != v={d.v}")


def _derived_name(op: str, d: Design) -> str:
    return f"{op}({d.name})" if d.name else op
