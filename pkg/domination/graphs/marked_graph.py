"""
Marked subcubic graphs.

A ``MarkedGraph`` is an immutable value: adjacency is a tuple of sorted
neighbour tuples and marks a tuple of booleans. Every transformation
returns a new graph.
"""
from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from ..exceptions import InvalidGraph


MAX_DEGREE = 3


@dataclass(frozen=True)
class MarkedGraph:
    adjacency: tuple
    marked: tuple

    def __post_init__(self):
        if len(self.adjacency) != len(self.marked):
            raise InvalidGraph("adjacency and marks have different lengths")
        n = len(self.adjacency)
        for v, nbrs in enumerate(self.adjacency):
            if len(nbrs) > MAX_DEGREE:
                raise InvalidGraph(f"vertex {v} has degree {len(nbrs)}", vertex=v)
            if list(nbrs) != sorted(set(nbrs)):
                raise InvalidGraph(f"neighbours of {v} are not sorted and distinct", vertex=v)
            for w in nbrs:
                if w == v:
                    raise InvalidGraph(f"self-loop at {v}", vertex=v)
                if not 0 <= w < n or v not in self.adjacency[w]:
                    raise InvalidGraph(f"edge {v}-{w} is not symmetric", vertex=v)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, marked: Iterable = ()) -> "MarkedGraph":
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidGraph(f"self-loop at {u}", vertex=u)
            if v in nbrs[u]:
                raise InvalidGraph(f"parallel edge {u}-{v}", vertex=u)
            nbrs[u].add(v)
            nbrs[v].add(u)
        marks = [False] * n
        for v in marked:
            marks[v] = True
        return cls(tuple(tuple(sorted(s)) for s in nbrs), tuple(marks))

    @classmethod
    def empty(cls) -> "MarkedGraph":
        return cls((), ())

    @classmethod
    def from_networkx(cls, graph: nx.Graph, marked: Iterable = ()) -> "MarkedGraph":
        """Relabel nodes in sorted order to 0..n-1."""
        order = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(order)}
        edges = [(index[a], index[b]) for a, b in graph.edges()]
        return cls.from_edges(len(order), edges, [index[v] for v in marked])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        nx.set_node_attributes(graph, dict(enumerate(self.marked)), "marked")
        return graph

    # -- queries ----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_marked(self, v: int) -> bool:
        return self.marked[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def marked_vertices(self) -> frozenset:
        return frozenset(v for v in range(self.n) if self.marked[v])

    def closed_neighborhood(self, v: int) -> frozenset:
        return frozenset(self.adjacency[v]) | {v}

    def is_cubic(self) -> bool:
        return all(len(nbrs) == 3 for nbrs in self.adjacency)

    def components(self) -> list:
        """Vertex lists of connected components, ordered by smallest vertex."""
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            result.append(sorted(comp))
        return result

    # -- transformations --------------------------------------------------

    def with_marks(self, vertices: Iterable) -> "MarkedGraph":
        marks = list(self.marked)
        for v in vertices:
            marks[v] = True
        return MarkedGraph(self.adjacency, tuple(marks))

    def without_marks(self, vertices: Iterable) -> "MarkedGraph":
        marks = list(self.marked)
        for v in vertices:
            marks[v] = False
        return MarkedGraph(self.adjacency, tuple(marks))

    def without_edges(self, edges: Iterable) -> "MarkedGraph":
        nbrs = [set(a) for a in self.adjacency]
        for u, v in edges:
            if v not in nbrs[u]:
                raise InvalidGraph(f"edge {u}-{v} does not exist", vertex=u)
            nbrs[u].discard(v)
            nbrs[v].discard(u)
        return MarkedGraph(tuple(tuple(sorted(s)) for s in nbrs), self.marked)


@dataclass(frozen=True)
class DegreeProfile:
    """Counts of unmarked vertices per degree plus the marked count."""
    n0: int = 0
    n1: int = 0
    n2: int = 0
    n3: int = 0
    markn: int = 0

    @property
    def n(self) -> int:
        return self.n0 + self.n1 + self.n2 + self.n3 + self.markn


def degree_profile(g: MarkedGraph) -> DegreeProfile:
    counts = [0, 0, 0, 0]
    markn = 0
    for v in g.vertices():
        if g.is_marked(v):
            markn += 1
        else:
            counts[g.degree(v)] += 1
    return DegreeProfile(n0=counts[0], n1=counts[1], n2=counts[2], n3=counts[3], markn=markn)


@dataclass(frozen=True)
class TwoPath:
    """
    A maximal run of degree-2 vertices.

    ``end_attachments`` holds the off-path neighbours of the first and last
    vertex, in that order (empty for a cycle component).
    """
    vertices: tuple
    maximal: bool = True
    end_attachments: tuple = ()
    is_cycle: bool = False

    @property
    def order(self) -> int:
        return len(self.vertices)


def maximal_two_paths(g: MarkedGraph) -> list:
    """
    Every degree-2 vertex in exactly one returned ``TwoPath``.

    Components in which every vertex has degree 2 come back with
    ``is_cycle=True``, listed in cyclic order from their smallest vertex.
    Paths are oriented so that the first vertex id is not larger than the
    last one.
    """
    seen = set()
    result = []
    for start in g.vertices():
        if g.degree(start) != 2 or start in seen:
            continue
        left, right = g.neighbors(start)
        forward = _walk(g, start, right)
        if forward and forward[-1] == start:
            cycle = _walk_cycle(g, start)
            seen.update(cycle)
            result.append(TwoPath(vertices=tuple(cycle), maximal=True, is_cycle=True))
            continue
        backward = _walk(g, start, left)
        run = list(reversed(backward)) + [start] + forward
        seen.update(run)
        if len(run) == 1:
            head_attach, tail_attach = g.neighbors(start)
        else:
            head_attach = _attachment(g, run, 0)
            tail_attach = _attachment(g, run, len(run) - 1)
        if run[0] > run[-1]:
            run.reverse()
            head_attach, tail_attach = tail_attach, head_attach
        result.append(TwoPath(vertices=tuple(run), maximal=True,
                              end_attachments=(head_attach, tail_attach)))
    result.sort(key=lambda p: min(p.vertices))
    return result


def _walk(g, start, first):
    """Degree-2 vertices met walking from ``start`` towards ``first``."""
    run = []
    prev, cur = start, first
    while g.degree(cur) == 2:
        run.append(cur)
        if cur == start:
            return run
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    return run


def _walk_cycle(g, start):
    cycle = [start]
    prev, cur = start, g.neighbors(start)[0]
    if g.neighbors(start)[1] < cur:
        cur = g.neighbors(start)[1]
    while cur != start:
        cycle.append(cur)
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    return cycle


def _attachment(g, run, index):
    v = run[index]
    inner = set()
    if index > 0:
        inner.add(run[index - 1])
    if index < len(run) - 1:
        inner.add(run[index + 1])
    return next(w for w in g.neighbors(v) if w not in inner)


def excise(g: MarkedGraph, remove: Iterable, mark: Iterable = ()) -> tuple:
    """
    Remove ``remove``, mark ``mark`` and relabel the survivors densely.

    Returns:
        (H, remap) where remap maps surviving old ids to new ids.
    """
    remove = frozenset(remove)
    mark = frozenset(mark)
    if mark & remove:
        raise InvalidGraph("cannot mark a removed vertex")
    survivors = [v for v in g.vertices() if v not in remove]
    remap = {old: new for new, old in enumerate(survivors)}
    adjacency = tuple(
        tuple(sorted(remap[w] for w in g.neighbors(v) if w in remap)) for v in survivors
    )
    marked = tuple(g.is_marked(v) or v in mark for v in survivors)
    return MarkedGraph(adjacency, marked), remap
