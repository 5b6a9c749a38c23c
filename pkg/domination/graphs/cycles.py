"""
Girth and cycle-length queries.

``girth`` and ``shortest_cycle`` run one BFS per root. Length queries
enumerate simple paths whose smallest vertex is the start, so each cycle
is found from exactly one root; the enumeration is bounded by a node
budget and raises instead of answering when the budget runs out.
"""
import logging
import math
from collections import deque
from dataclasses import dataclass, field

from django.conf import settings

from ..exceptions import CycleSearchBudgetExceeded
from .marked_graph import MarkedGraph


logger = logging.getLogger(__name__)

INFINITE = math.inf


@dataclass(frozen=True)
class CycleReport:
    girth: float
    present_lengths: frozenset = field(default_factory=frozenset)
    queried_lengths: frozenset = field(default_factory=frozenset)

    def to_dict(self) -> dict:
        return {
            "girth": None if self.girth == INFINITE else int(self.girth),
            "present_lengths": sorted(self.present_lengths),
            "queried_lengths": sorted(self.queried_lengths),
        }


def _bfs_shortest_from(g: MarkedGraph, root: int, bound: float):
    """Shortest cycle through ``root`` found by one BFS; returns (length, u, w, parent)."""
    dist = {root: 0}
    parent = {root: None}
    queue = deque([root])
    best = (bound, None, None)
    while queue:
        u = queue.popleft()
        if 2 * dist[u] + 1 >= best[0]:
            break
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
            elif parent[u] != w:
                length = dist[u] + dist[w] + 1
                if length < best[0]:
                    best = (length, u, w)
    return best[0], best[1], best[2], parent


def girth(g: MarkedGraph) -> float:
    """Exact girth; ``INFINITE`` for a forest."""
    best = INFINITE
    for root in g.vertices():
        length, _, _, _ = _bfs_shortest_from(g, root, best)
        best = min(best, length)
    return best


def shortest_cycle(g: MarkedGraph) -> list:
    """Vertices of one shortest cycle in traversal order, or [] for a forest."""
    best_len, best_cycle = INFINITE, []
    for root in g.vertices():
        length, u, w, parent = _bfs_shortest_from(g, root, best_len)
        if u is None or length >= best_len:
            continue
        left = _path_to_root(parent, u)
        right = _path_to_root(parent, w)
        shared = set(left) & set(right)
        if len(shared) != 1:
            # odd-length closure through a non-root ancestor; found again from that root
            continue
        best_len = length
        best_cycle = list(reversed(left)) + right[:-1]
    return best_cycle


def _path_to_root(parent, v):
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def _budget(budget):
    return settings.DOMINATION_CYCLE_BUDGET if budget is None else budget


def has_cycle_of_length(g: MarkedGraph, k: int, budget: int = None) -> bool:
    """True iff G contains a simple cycle of length exactly k."""
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    if k > g.n:
        return False
    for _ in _enumerate_cycles(g, k, _budget(budget), first_only=True):
        return True
    return False


def cycles_of_length(g: MarkedGraph, k: int, budget: int = None) -> list:
    """
    Every simple k-cycle once, as a vertex tuple starting at its smallest
    vertex and continuing towards the smaller of its two neighbours.
    """
    if k < 3 or k > g.n:
        return []
    return list(_enumerate_cycles(g, k, _budget(budget), first_only=False))


def _enumerate_cycles(g, k, budget, first_only):
    nodes = 0
    for start in g.vertices():
        path = [start]
        on_path = {start}
        stack = [iter(w for w in g.neighbors(start) if w > start)]
        while stack:
            nodes += 1
            if nodes > budget:
                logger.warning("Cycle search for length %d exceeded budget %d", k, budget)
                raise CycleSearchBudgetExceeded(
                    f"cycle search for length {k} exceeded {budget} nodes", length=k, budget=budget
                )
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if len(path) == k - 1:
                if start in g.neighbors(nxt) and path[1] < nxt:
                    yield tuple(path + [nxt])
                    if first_only:
                        return
                continue
            path.append(nxt)
            on_path.add(nxt)
            stack.append(iter(w for w in g.neighbors(nxt) if w > start and w not in on_path))


def cycle_report(g: MarkedGraph, lengths, budget: int = None) -> CycleReport:
    lengths = frozenset(lengths)
    present = frozenset(k for k in lengths if k >= 3 and has_cycle_of_length(g, k, budget))
    return CycleReport(girth=girth(g), present_lengths=present, queried_lengths=lengths)
