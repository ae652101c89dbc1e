"""Exact solvers on incidence graphs: domination number, independent domination
number, transversal number, independence number, and enumeration of minimum
and inclusion-minimal dominating sets.

All searches are single-threaded and deterministic: vertices are always tried
in ascending index order, so the same input yields the same witness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .bounds import full_report
from .design import Design
from .errors import BudgetExceeded, InstanceTooLarge
from .graph import IncidenceGraph, VertexSet
from .neatness import neat_closure

OPTIMAL = "optimal"
TIMEOUT = "lower-only-timeout"

DEFAULT_TIME_LIMIT = 60.0
BRUTEFORCE_CAP = 26
MINIMAL_ENUM_CAP = 24


@dataclass
class SolveResult:
    """Outcome of an exact solve.

    ``value`` is None unless ``status == "optimal"``; ``lower``/``upper`` always
    bracket the true value and ``witness`` (when present) achieves ``upper``.
    """

    invariant: str
    value: int | None
    witness: VertexSet | frozenset[int] | None
    nodes: int
    status: str
    lower: int
    upper: int | None
    elapsed: float = 0.0

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, VertexSet):
            w = w.to_dict()
        elif w is not None:
            w = [x + 1 for x in sorted(w)]
        return {
            "invariant": self.invariant,
            "value": self.value if self.optimal else "not-computed",
            "status": self.status,
            "lower": self.lower,
            "upper": self.upper,
            "witness": w,
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 3),
        }


@dataclass
class EnumerationResult:
    target_size: int | None
    sets: list[VertexSet] = field(default_factory=list)
    complete: bool = True
    nodes: int = 0


class _Deadline(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# brute-force oracle


def gamma_bruteforce(g: IncidenceGraph, size_cap: int = BRUTEFORCE_CAP) -> SolveResult:
    """Minimum dominating set by trying all subsets in order of size.

    Works on the design's point and block sets directly rather than on the
    graph's bit masks, so it shares no search code with :func:`gamma_bnb`.
    """
    if g.n > size_cap:
        raise InstanceTooLarge(f"{g.n} vertices exceeds the brute-force cap of {size_cap}")
    d = g.design
    v = d.v
    blocks = d.blocks
    start = time.perf_counter()
    tried = 0
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            tried += 1
            pts = {u for u in combo if u < v}
            blks = [u - v for u in combo if u >= v]
            covered = set(pts)
            for j in blks:
                covered |= blocks[j]
            if len(covered) < v:
                continue
            chosen = set(blks)
            if all(j in chosen or blocks[j] & pts for j in range(len(blocks))):
                s = VertexSet.of(pts, blks)
                return SolveResult("gamma", size, s, tried, OPTIMAL, size, size,
                                   time.perf_counter() - start)
    raise AssertionError("the full vertex set always dominates")


# ---------------------------------------------------------------------------
# dominating-set branch and bound


class _DomSearch:
    """Branch and bound for (independent) dominating sets.

    At each node the undominated vertex with the fewest still-allowed
    dominators is chosen and the search branches over those dominators in
    ascending order; after a branch returns, its vertex is forbidden for the
    remaining siblings.
    """

    def __init__(self, g: IncidenceGraph, independent: bool, deadline: float | None,
                 node_budget: int | None):
        self.g = g
        self.nb = g.closed_nbhd
        self.full = g.full_mask
        self.pmask = g.point_mask
        self.v, self.k, self.r = g.v, g.k, g.r
        self.delta1 = g.max_degree + 1
        self.independent = independent
        self.deadline = deadline
        self.node_budget = node_budget
        self.nodes = 0
        self.best = g.n + 1
        self.best_set: int | None = None
        self.stop_at = 0

    def offer(self, mask: int) -> None:
        size = mask.bit_count()
        if size < self.best:
            self.best = size
            self.best_set = mask

    def _lower(self, undominated: int, forbidden: int, chosen: int) -> int:
        cnt = undominated.bit_count()
        lb = _cdiv(cnt, self.delta1)
        up = (undominated & self.pmask).bit_count()
        ub = cnt - up
        # x points (each dominates <= 1 point, <= r blocks) and y blocks
        # (each dominates <= k points, <= 1 block)
        k, r = self.k, self.r
        best_xy = None
        for y in range(0, _cdiv(up, k) + 1):
            x = max(up - k * y, _cdiv(ub - y, r) if ub > y else 0, 0)
            if best_xy is None or x + y < best_xy:
                best_xy = x + y
        if best_xy > lb:
            lb = best_xy
        # vertices with pairwise disjoint sets of allowed dominators
        allowed = ~forbidden
        used = 0
        packing = 0
        nb = self.nb
        for u in _bits(undominated):
            a = nb[u] & allowed
            if not a & used:
                used |= a
                packing += 1
        if packing > lb:
            lb = packing
        # a dominating set with |P| points needs (v - |P|)/k further blocks
        p = (chosen & self.pmask).bit_count()
        struc = _cdiv(self.v + p * (self.k - 1), self.k) - chosen.bit_count()
        return max(lb, struc)

    def run(self, chosen: int, dominated: int, forbidden: int) -> None:
        self.nodes += 1
        if self.nodes & 1023 == 0:
            if self.deadline is not None and time.perf_counter() > self.deadline:
                raise _Deadline
            if self.node_budget is not None and self.nodes > self.node_budget:
                raise _Deadline
        undominated = self.full & ~dominated
        size = chosen.bit_count()
        if not undominated:
            self.offer(chosen)
            return
        if size + 1 >= self.best:
            return
        if size + self._lower(undominated, forbidden, chosen) >= self.best:
            return
        nb = self.nb
        allowed = ~forbidden
        pick_opts = None
        pick_cnt = self.g.n + 1
        for u in _bits(undominated):
            opts = nb[u] & allowed
            c = opts.bit_count()
            if c < pick_cnt:
                pick_cnt, pick_opts = c, opts
                if c <= 1:
                    break
        if not pick_opts:
            return
        for c in _bits(pick_opts):
            nf = forbidden | (1 << c)
            if self.independent:
                nf |= nb[c]
            self.run(chosen | (1 << c), dominated | nb[c], nf)
            if self.best <= self.stop_at:
                return
            forbidden |= 1 << c


def _greedy_dominating(g: IncidenceGraph, independent: bool) -> int:
    nb = g.closed_nbhd
    full = g.full_mask
    dominated = chosen = forbidden = 0
    while dominated != full:
        best_u, best_gain = -1, -1
        for u in range(g.n):
            if forbidden >> u & 1:
                continue
            gain = (nb[u] & ~dominated).bit_count()
            if gain > best_gain:
                best_u, best_gain = u, gain
        chosen |= 1 << best_u
        dominated |= nb[best_u]
        forbidden |= (nb[best_u] if independent else 1 << best_u)
    return chosen


def _solve_domination(g: IncidenceGraph, independent: bool, time_limit: float | None,
                      node_budget: int | None, lower_hint: int = 0) -> SolveResult:
    start = time.perf_counter()
    d = g.design
    rep = full_report(d, graph=g)
    root_lower = max(rep.best_lower, lower_hint)

    search = _DomSearch(g, independent,
                        None if time_limit is None else start + time_limit, node_budget)
    search.offer(_greedy_dominating(g, independent))
    if d.lam == 1:
        # a neat punctured-block closure is independent and dominating
        for blk in d.blocks:
            x = min(blk)
            search.offer(neat_closure(d, blk - {x}).mask(d.v))
    if not independent:
        search.offer(g.point_mask)
    search.stop_at = root_lower

    status = OPTIMAL
    if search.best > root_lower:
        try:
            search.run(0, 0, 0)
        except _Deadline:
            status = TIMEOUT
    witness = VertexSet.from_mask(search.best_set, d.v)
    mask = search.best_set
    if not g.is_dominating_mask(mask):
        raise AssertionError("solver produced a non-dominating witness")
    if independent and not g.is_independent_mask(mask):
        raise AssertionError("solver produced a dependent witness")
    name = "idom" if independent else "gamma"
    upper = search.best
    return SolveResult(
        invariant=name,
        value=upper if status == OPTIMAL else None,
        witness=witness,
        nodes=search.nodes,
        status=status,
        lower=upper if status == OPTIMAL else root_lower,
        upper=upper,
        elapsed=time.perf_counter() - start,
    )


def gamma_bnb(g: IncidenceGraph, time_limit: float | None = DEFAULT_TIME_LIMIT,
              node_budget: int | None = None) -> SolveResult:
    """Domination number with a witness.

    On timeout the result has status ``lower-only-timeout``: ``lower`` is the
    best proven bound and ``witness`` the smallest dominating set found.
    """
    return _solve_domination(g, False, time_limit, node_budget)


def idom_exact(g: IncidenceGraph, time_limit: float | None = DEFAULT_TIME_LIMIT,
               node_budget: int | None = None, gamma: int | None = None) -> SolveResult:
    """Independent domination number; ``gamma``, if known, seeds the lower bound."""
    res = _solve_domination(g, True, time_limit, node_budget, lower_hint=gamma or 0)
    if gamma is not None and res.optimal and res.value < gamma:
        raise AssertionError(f"i={res.value} < gamma={gamma}")
    return res


# ---------------------------------------------------------------------------
# transversals and independent point sets


def _is_transversal(d: Design, pts: int) -> bool:
    return all(m & pts for m in d.masks)


def _is_independent_points(d: Design, pts: int) -> bool:
    return all(m & pts != m for m in d.masks)


def tau_exact(d: Design, time_limit: float | None = DEFAULT_TIME_LIMIT) -> SolveResult:
    """Smallest point set meeting every block, by branch and bound on the
    uncovered block with the fewest allowed points."""
    start = time.perf_counter()
    deadline = None if time_limit is None else start + time_limit
    masks = d.masks
    pblocks = [0] * d.v
    for j, m in enumerate(masks):
        for x in _bits(m):
            pblocks[x] |= 1 << j
    all_blocks = (1 << d.b) - 1
    r = d.r

    # greedy incumbent
    covered = chosen = 0
    while covered != all_blocks:
        x = max(range(d.v), key=lambda x: ((pblocks[x] & ~covered).bit_count(), -x))
        chosen |= 1 << x
        covered |= pblocks[x]
    best = [chosen.bit_count(), chosen]
    nodes = [0]
    lower_root = _cdiv(d.b, r)
    if d.b == d.v:
        lower_root = max(lower_root, 1)

    def lower(uncovered: int, forbidden: int) -> int:
        lb = _cdiv(uncovered.bit_count(), r)
        used = packing = 0
        allowed = ~forbidden
        for j in _bits(uncovered):
            a = masks[j] & allowed
            if not a & used:
                used |= a
                packing += 1
        return max(lb, packing)

    def rec(chosen: int, covered: int, forbidden: int) -> None:
        nodes[0] += 1
        if deadline is not None and nodes[0] & 1023 == 0 and time.perf_counter() > deadline:
            raise _Deadline
        uncovered = all_blocks & ~covered
        size = chosen.bit_count()
        if not uncovered:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        if size + lower(uncovered, forbidden) >= best[0]:
            return
        allowed = ~forbidden
        pick, cnt = 0, d.v + 1
        for j in _bits(uncovered):
            a = masks[j] & allowed
            c = a.bit_count()
            if c < cnt:
                pick, cnt = a, c
        for x in _bits(pick):
            rec(chosen | 1 << x, covered | pblocks[x], forbidden | 1 << x)
            forbidden |= 1 << x

    status = OPTIMAL
    try:
        if best[0] > lower_root:
            rec(0, 0, 0)
    except _Deadline:
        status = TIMEOUT
    size, mask = best
    if not _is_transversal(d, mask):
        raise AssertionError("tau witness is not a transversal")
    pts = frozenset(_bits(mask))
    return SolveResult("tau", size if status == OPTIMAL else None, pts, nodes[0], status,
                       size if status == OPTIMAL else lower_root, size,
                       time.perf_counter() - start)


def beta_exact(d: Design, time_limit: float | None = DEFAULT_TIME_LIMIT,
               check_tau: bool = True) -> SolveResult:
    """Largest point set containing no whole block.

    Searched directly (include/exclude over points in order), not derived from
    the transversal search; with ``check_tau`` the identity beta = v - tau is
    asserted on the way out.
    """
    start = time.perf_counter()
    deadline = None if time_limit is None else start + time_limit
    v = d.v
    masks = d.masks
    through = [[m for m in masks if m >> x & 1] for x in range(v)]
    best = [0, 0]
    nodes = [0]

    def rec(x: int, chosen: int, size: int) -> None:
        nodes[0] += 1
        if deadline is not None and nodes[0] & 1023 == 0 and time.perf_counter() > deadline:
            raise _Deadline
        if size + (v - x) <= best[0]:
            return
        if x == v:
            best[0], best[1] = size, chosen
            return
        bit = 1 << x
        # x may join unless it completes a block
        if all((m & ~chosen) != bit for m in through[x]):
            rec(x + 1, chosen | bit, size + 1)
        rec(x + 1, chosen, size)

    status = OPTIMAL
    try:
        rec(0, 0, 0)
    except _Deadline:
        status = TIMEOUT
    size, mask = best
    if not _is_independent_points(d, mask):
        raise AssertionError("beta witness contains a block")
    res = SolveResult("beta", size if status == OPTIMAL else None, frozenset(_bits(mask)),
                      nodes[0], status, size, None if status != OPTIMAL else size,
                      time.perf_counter() - start)
    if check_tau and status == OPTIMAL:
        t = tau_exact(d, time_limit=time_limit)
        if t.optimal and t.value != v - size:
            raise AssertionError(f"beta={size} but v - tau = {v - t.value}")
    return res


# ---------------------------------------------------------------------------
# enumeration


def enumerate_min_dominating(g: IncidenceGraph, gamma: int,
                             node_budget: int | None = 50_000_000) -> EnumerationResult:
    """Every dominating set of size exactly ``gamma``, in ascending-index
    (lexicographic) order of their sorted vertex lists."""
    nb = g.closed_nbhd
    full = g.full_mask
    n = g.n
    delta1 = g.max_degree + 1
    top = [max(_bits(nb[u])) for u in range(n)]
    found: list[int] = []
    nodes = [0]

    def rec(start: int, chosen: int, dominated: int, remaining: int) -> None:
        nodes[0] += 1
        if node_budget is not None and nodes[0] > node_budget:
            raise BudgetExceeded(f"minimum-set enumeration exceeded {node_budget} nodes")
        undominated = full & ~dominated
        if remaining == 0:
            if not undominated:
                found.append(chosen)
            return
        if undominated.bit_count() > remaining * delta1:
            return
        # the lowest undominated vertex must be dominated by a later pick
        limit = n - remaining
        if undominated:
            u = (undominated & -undominated).bit_length() - 1
            limit = min(limit, top[u])
        for c in range(start, limit + 1):
            rec(c + 1, chosen | 1 << c, dominated | nb[c], remaining - 1)

    rec(0, 0, 0, gamma)
    sets = [VertexSet.from_mask(m, g.v) for m in found]
    return EnumerationResult(gamma, sets, True, nodes[0])


def enumerate_minimal_dominating(g: IncidenceGraph, max_vertices: int = MINIMAL_ENUM_CAP,
                                 node_budget: int | None = 20_000_000) -> EnumerationResult:
    """Every inclusion-minimal dominating set.

    Vertices are decided include/exclude in index order.  A branch dies when
    some vertex can no longer be dominated, or when a chosen vertex has lost
    every private neighbour (adding vertices can never give one back).
    """
    if g.n > max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceeds the minimal-enumeration cap of {max_vertices}")
    nb = g.closed_nbhd
    full = g.full_mask
    n = g.n
    # highest index among each vertex's dominators
    top = [max(_bits(nb[u])) for u in range(n)]
    found: list[int] = []
    nodes = [0]

    def all_have_private(chosen: int) -> bool:
        members = list(_bits(chosen))
        for s in members:
            other = 0
            for t in members:
                if t != s:
                    other |= nb[t]
            if not nb[s] & ~other:
                return False
        return True

    def rec(i: int, chosen: int, dominated: int) -> None:
        nodes[0] += 1
        if node_budget is not None and nodes[0] > node_budget:
            raise BudgetExceeded(f"minimal-set enumeration exceeded {node_budget} nodes")
        undominated = full & ~dominated
        for u in _bits(undominated):
            if top[u] < i:
                return
        if i == n:
            found.append(chosen)
            return
        with_i = chosen | 1 << i
        if all_have_private(with_i):
            rec(i + 1, with_i, dominated | nb[i])
        rec(i + 1, chosen, dominated)

    rec(0, 0, 0)
    found.sort(key=lambda m: sorted(_bits(m)))
    sets = [VertexSet.from_mask(m, g.v) for m in found]
    return EnumerationResult(None, sets, True, nodes[0])


def is_minimal_dominating(g: IncidenceGraph, s: VertexSet) -> bool:
    mask = s.mask(g.v)
    if not g.is_dominating_mask(mask):
        return False
    return all(not g.is_dominating_mask(mask & ~(1 << u)) for u in _bits(mask))


def has_epn_property(g: IncidenceGraph, s: VertexSet) -> bool:
    """Every member of ``s`` has an external private neighbour."""
    mask = s.mask(g.v)
    nb = g.closed_nbhd
    for u in _bits(mask):
        outside = nb[u] & ~mask
        if not any((nb[w] & mask) == 1 << u for w in _bits(outside)):
            return False
    return True


def epn_certificate(g: IncidenceGraph, sets: EnumerationResult) -> bool:
    """True iff some enumerated minimum dominating set has the EPN property."""
    return any(has_epn_property(g, s) for s in sets.sets)
