"""
Exact minimum marked-dominating-set solver.

Branch and bound over bitsets: branch on the undominated unmarked vertex
with the fewest remaining candidate dominators (ties by smallest id), try
its candidates by residual coverage, skip candidates whose coverage is
contained in a sibling's, and prune with ceil(undominated / 4) since a
closed neighbourhood in a subcubic graph has at most four vertices.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from .exceptions import MarkedInput
from .graphs.graph6 import encode
from .graphs.marked_graph import MarkedGraph
from .utils import get_cache, set_cache


logger = logging.getLogger(__name__)

CLOSED_NEIGHBORHOOD_MAX = 4


@dataclass(frozen=True)
class DominatingWitness:
    size: int
    vertices: frozenset
    optimal: bool
    nodes: int = 0

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "set": sorted(self.vertices),
            "optimal": self.optimal,
            "nodes": self.nodes,
        }


def is_md_set(g: MarkedGraph, s) -> bool:
    """True iff every unmarked vertex is in ``s`` or adjacent to it."""
    s = frozenset(s)
    if any(not 0 <= v < g.n for v in s):
        raise ValueError("set contains vertices outside the graph")
    for v in g.vertices():
        if g.is_marked(v) or v in s:
            continue
        if not any(w in s for w in g.neighbors(v)):
            return False
    return True


def _bits(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _members(mask: int) -> list:
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return result


class _Search:
    def __init__(self, g: MarkedGraph, budget: int):
        self.g = g
        self.budget = budget
        self.cover = [_bits(g.closed_neighborhood(v)) for v in g.vertices()]
        self.nodes = 0
        self.exhausted = False
        self.best = None

    def greedy(self, undominated: int) -> list:
        chosen = []
        while undominated:
            best_v, best_gain = None, -1
            for v in self.g.vertices():
                gain = bin(self.cover[v] & undominated).count("1")
                if gain > best_gain:
                    best_v, best_gain = v, gain
            chosen.append(best_v)
            undominated &= ~self.cover[best_v]
        return chosen

    def run(self, undominated: int):
        self.best = self.greedy(undominated)
        self._branch(undominated, [], 0)

    def _branch(self, undominated: int, chosen: list, excluded: int):
        if self.exhausted:
            return
        self.nodes += 1
        if self.nodes > self.budget:
            self.exhausted = True
            return
        if not undominated:
            if len(chosen) < len(self.best):
                self.best = list(chosen)
            return
        remaining = bin(undominated).count("1")
        lower = -(-remaining // CLOSED_NEIGHBORHOOD_MAX)
        if len(chosen) + lower >= len(self.best):
            return

        target, candidates = None, None
        for v in _members(undominated):
            options = [c for c in self.g.closed_neighborhood(v) if not excluded >> c & 1]
            if not options:
                return
            if candidates is None or len(options) < len(candidates):
                target, candidates = v, options
        coverage = {c: self.cover[c] & undominated for c in candidates}
        ordered = sorted(candidates, key=lambda c: (-bin(coverage[c]).count("1"), c))

        tried = []
        for c in ordered:
            if any(coverage[c] & ~coverage[t] == 0 for t in tried):
                continue
            chosen.append(c)
            self._branch(undominated & ~self.cover[c], chosen, excluded)
            chosen.pop()
            tried.append(c)
            excluded |= 1 << c
            if self.exhausted:
                return


def mdom_exact(g: MarkedGraph, budget: int = None) -> DominatingWitness:
    """
    Minimum marked dominating set of ``g``.

    On budget exhaustion the best incumbent comes back with optimal=False.
    """
    budget = settings.DOMINATION_SOLVER_BUDGET if budget is None else budget
    undominated = _bits(v for v in g.vertices() if not g.is_marked(v))
    search = _Search(g, budget)
    search.run(undominated)
    if search.exhausted:
        logger.warning("Solver budget %d exhausted on n=%d; returning incumbent of size %d",
                       budget, g.n, len(search.best))
    return DominatingWitness(
        size=len(search.best),
        vertices=frozenset(search.best),
        optimal=not search.exhausted,
        nodes=search.nodes,
    )


def cache_key(g: MarkedGraph) -> str:
    mask = _bits(g.marked_vertices())
    return f"mdom:{encode(g)}:{mask:x}"


def cached_mdom(g: MarkedGraph, budget: int = None) -> DominatingWitness:
    """``mdom_exact`` memoised in the Django cache; only optimal results are stored."""
    key = cache_key(g)
    hit = get_cache(key)
    if hit is not None:
        return DominatingWitness(size=hit["size"], vertices=frozenset(hit["set"]),
                                 optimal=True, nodes=0)
    witness = mdom_exact(g, budget)
    if witness.optimal:
        set_cache(key, {"size": witness.size, "set": sorted(witness.vertices)})
    return witness


@dataclass(frozen=True)
class BoundVerdict:
    holds: bool
    gamma: int
    n: int
    optimal: bool
    witness: frozenset = frozenset()

    def to_dict(self) -> dict:
        return {"holds": self.holds, "gamma": self.gamma, "n": self.n, "optimal": self.optimal}


def verify_third_bound(g: MarkedGraph, budget: int = None, bound: Fraction = Fraction(1, 3)) -> BoundVerdict:
    """holds iff gamma(g) <= bound * n; the default bound is 1/3."""
    if g.marked_vertices():
        raise MarkedInput("the domination bound is stated for unmarked graphs")
    witness = cached_mdom(g, budget)
    return BoundVerdict(
        holds=witness.size <= Fraction(bound) * g.n,
        gamma=witness.size,
        n=g.n,
        optimal=witness.optimal,
        witness=witness.vertices,
    )
