"""Finding one front-door adjustment set under interval constraints.

Given a causal diagram, treatment ``x`` and outcome ``y``, the finder
returns a set ``z`` with ``i ⊆ z ⊆ r`` satisfying the front-door
criterion, or ``None`` when no such set exists.  It narrows the candidate
pool in three stages:

1. drop every candidate with an open back-door path from ``x``,
2. drop every candidate that no admissible set can contain because some
   back-door path it starts can never be blocked by ``x``,
3. accept the surviving pool iff it intercepts all causal paths from
   ``x`` to ``y``.

Stage 2 rests on a breadth-first walk over iteratively re-moralized
ancestral graphs (``find_blocking_extension``); the walk doubles as a
constructive search for the helpers a given seed set needs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import OverlappingSetsError, PreconditionError, RemovedNodeError
from .graph import ADMG, MoralGraph, VarSet
from .separation import (
    causal_path_graph,
    connecting_path,
    format_path,
    is_separated,
)

EMPTY: VarSet = frozenset()


@dataclass(frozen=True)
class AdjustmentQuery:
    """A validated (graph, x, y, i, r) problem instance.

    ``i`` collects variables the answer must include, ``r`` the variables
    it may include.  ``r`` defaults to every observed variable outside
    ``x`` and ``y``.
    """

    graph: ADMG
    x: VarSet
    y: VarSet
    i: VarSet = EMPTY
    r: VarSet | None = None

    def __post_init__(self):
        g = self.graph
        x = g.check_vars(self.x)
        y = g.check_vars(self.y)
        i = g.check_vars(self.i)
        r = g.observed_nodes - x - y if self.r is None else g.check_vars(self.r)
        if not x or not y:
            raise PreconditionError("x and y must be nonempty")
        if x & y:
            raise PreconditionError("x and y must be disjoint")
        if r & (x | y):
            raise PreconditionError("r may not overlap x or y")
        if not i <= r:
            raise PreconditionError("i must be a subset of r")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "r", r)


@dataclass(frozen=True)
class CriterionReport:
    """Per-condition verdicts of the front-door criterion for one set.

    ``condition1``: the set intercepts every directed path from x to y.
    ``condition2``: no open back-door path from x to the set.
    ``condition3``: x blocks every back-door path from the set to y.
    ``witness`` describes an offending path for the first failed
    condition.
    """

    condition1: bool
    condition2: bool
    condition3: bool
    witness: str | None = None

    @property
    def satisfied(self) -> bool:
        return self.condition1 and self.condition2 and self.condition3


def _directed_witness(cpg: ADMG, x: VarSet, y: VarSet, z: VarSet) -> str | None:
    """A directed path from x to y avoiding z in the causal path graph."""
    pred = {}
    queue = deque(sorted(x))
    for s in x:
        pred[s] = None
    while queue:
        v = queue.popleft()
        for w in sorted(cpg.children_of(v)):
            if w in pred or w in z:
                continue
            pred[w] = v
            if w in y:
                nodes = [w]
                while pred[nodes[-1]] is not None:
                    nodes.append(pred[nodes[-1]])
                nodes.reverse()
                return " -> ".join(cpg.names[u] for u in nodes)
            queue.append(w)
    return None


def check_criterion(g: ADMG, x: Iterable[int], y: Iterable[int], z: Iterable[int]) -> CriterionReport:
    """Evaluate the three front-door conditions for ``z`` relative to
    ``(x, y)`` and report a witness path for the first failure."""
    x = g.check_vars(x)
    y = g.check_vars(y)
    z = g.check_vars(z)
    if not x or not y:
        raise PreconditionError("x and y must be nonempty")
    if x & y or x & z or y & z:
        raise OverlappingSetsError("x, y and z must be pairwise disjoint")

    cpg = causal_path_graph(g, x, y)
    cond1 = is_separated(cpg, x, y, z)

    cond2 = True
    witness2 = None
    gx = g.remove_outgoing(x)
    for v in sorted(z):
        path = connecting_path(gx, x, frozenset((v,)), EMPTY)
        if path is not None:
            cond2 = False
            witness2 = format_path(gx, path)
            break

    if z:
        gz = g.remove_outgoing(z)
        path3 = connecting_path(gz, z, y, x)
        cond3 = path3 is None
        witness3 = None if cond3 else format_path(gz, path3)
    else:
        cond3 = True
        witness3 = None

    if not cond1:
        witness = _directed_witness(cpg, x, y, z)
    elif not cond2:
        witness = witness2
    elif not cond3:
        witness = witness3
    else:
        witness = None
    return CriterionReport(cond1, cond2, cond3, witness)


def second_condition_candidates(g: ADMG, x: VarSet, i: VarSet, r: VarSet) -> VarSet | None:
    """Members of ``r`` with no open back-door path from ``x``; None as
    soon as a required member of ``i`` has one.

    Every subset of the result meets the second front-door condition, and
    every set within ``[i, r]`` meeting it lies inside the result.
    """
    gx = g.remove_outgoing(x)
    kept = set()
    for v in sorted(r):
        if is_separated(gx, x, frozenset((v,)), EMPTY):
            kept.add(v)
        elif v in i:
            return None
    return frozenset(kept)


def observed_neighbors(moral: MoralGraph, v: int) -> VarSet:
    """Observed nodes adjacent to ``v`` in the moral graph, where latent
    nodes act as pass-through hops."""
    if v in moral.removed:
        raise RemovedNodeError(f"node {v} was removed from the moral graph")
    if moral.latent[v]:
        raise PreconditionError("neighbor expansion starts from an observed node")
    cached = moral._hop_cache.get(v)
    if cached is not None:
        return cached
    out = set()
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in moral.neighbors_of(u):
            if w in seen:
                continue
            seen.add(w)
            if moral.latent[w]:
                stack.append(w)
            else:
                out.add(w)
    result = frozenset(out)
    moral._hop_cache[v] = result
    return result


class BlockingSearch:
    """The stage-2 walker bound to one ``(graph, x, y)`` query.

    The walk only ever consults pure functions of the seed set and the
    accumulated cut set (the ancestral core and its cut moral graphs), so
    a searcher caches them and may be reused across candidate pools; the
    enumerator leans on this to keep its delay flat.
    """

    def __init__(self, g: ADMG, x: VarSet, y: VarSet):
        self.g = g
        self.x = x
        self.y = y
        self._cores: dict[VarSet, ADMG] = {}
        self._morals: dict[tuple[VarSet, VarSet], MoralGraph] = {}

    def _core(self, t: VarSet) -> ADMG:
        core = self._cores.get(t)
        if core is None:
            g = self.g
            core = g.induced_subgraph(g.ancestors(t | self.x | self.y)).expand_latents()
            self._cores[t] = core
        return core

    def _moral(self, t: VarSet, cut: VarSet) -> MoralGraph:
        key = (t, cut)
        moral = self._morals.get(key)
        if moral is None:
            moral = self._core(t).moral_after_cut(cut, self.x)
            self._morals[key] = moral
        return moral

    def prepare(self, t: VarSet) -> None:
        """Build the seed set's core and starting moral graph up front."""
        self._moral(t, t)

    def extension(self, t: VarSet, pool: VarSet) -> VarSet | None:
        if not t <= pool:
            raise PreconditionError("t must be a subset of the candidate pool")
        if t & self.x or t & self.y or self.x & self.y:
            raise PreconditionError("x, y and t must be pairwise disjoint")
        g = self.g
        y = self.y
        cut = frozenset(t)
        moral = self._moral(t, cut)
        grown: set[int] = set()
        visited = set(t)
        queue = deque(sorted(t))
        while queue:
            u = queue.popleft()
            if u in y:
                return None
            fresh = (observed_neighbors(moral, u) & pool) - visited
            if fresh:
                cut |= fresh
                grown |= fresh
                moral = self._moral(t, cut)
            spread = observed_neighbors(moral, u) - visited
            arrowed = {w for w in fresh if g.has_incoming_arrow(w)}
            step = spread | arrowed
            visited |= step
            queue.extend(sorted(step))
        return frozenset(grown)


def find_blocking_extension(
    g: ADMG, x: VarSet, y: VarSet, t: VarSet, pool: VarSet
) -> VarSet | None:
    """Helpers from ``pool`` that make ``t`` meet the third front-door
    condition, or None when no superset of ``t`` inside ``pool`` can.

    The moral graph of the ancestral, latent-expanded subgraph is wired so
    that its paths from ``t`` to ``y`` are exactly the back-door paths
    that ``x`` fails to block.  The walk cuts the outgoing edges of every
    pool member it meets (recruiting it) and re-moralizes; reaching ``y``
    anyway means some offending path survives all available cuts.
    """
    return BlockingSearch(g, x, y).extension(frozenset(t), frozenset(pool))


def third_condition_candidates(
    g: ADMG, x: VarSet, y: VarSet, i: VarSet, pool: VarSet
) -> VarSet | None:
    """Members of ``pool`` that some set within ``[i, pool]`` containing
    them can satisfy the third condition with; None as soon as a member of
    ``i`` cannot be accommodated."""
    kept = set()
    for v in sorted(pool):
        if find_blocking_extension(g, x, y, frozenset((v,)), pool) is not None:
            kept.add(v)
        elif v in i:
            return None
    return frozenset(kept)


def find_adjustment_set(
    g: ADMG,
    x: Iterable[int],
    y: Iterable[int],
    i: Iterable[int] = EMPTY,
    r: Iterable[int] | None = None,
) -> VarSet | None:
    """One front-door adjustment set ``z`` with ``i ⊆ z ⊆ r`` relative to
    ``(x, y)``, or None when none exists.

    The answer, when one exists, is the full surviving candidate pool: if
    that pool fails to intercept every causal path, no subset of it can.
    Runs in polynomial time; the empty set is a legal answer exactly when
    the graph has no causal path from ``x`` to ``y``.
    """
    query = AdjustmentQuery(g, frozenset(x), frozenset(y), frozenset(i),
                            None if r is None else frozenset(r))
    pool = second_condition_candidates(g, query.x, query.i, query.r)
    if pool is None:
        return None
    final = third_condition_candidates(g, query.x, query.y, query.i, pool)
    if final is None:
        return None
    cpg = causal_path_graph(g, query.x, query.y)
    if is_separated(cpg, query.x, query.y, final):
        return final
    return None
