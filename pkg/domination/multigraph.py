"""
The colored multigraph of a marked graph.

Nodes are the degree-3 vertices of G. Every edge of G between two nodes is
a black edge; every maximal 2-path becomes an edge between its two end
attachments, red for order 2 or 5 and green for order 1 or 4 (short for
orders 1 and 2, long for 4 and 5). Edges remember their underlying G-path,
oriented from ``u`` to ``v``.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .exceptions import BadDegrees, BadTwoPathOrder, DegreeTwoCycleComponent, MarkedPathViolation, MultigraphError
from .graphs.marked_graph import MarkedGraph, maximal_two_paths


logger = logging.getLogger(__name__)


class Color(str, Enum):
    BLACK = "black"
    RED = "red"
    GREEN = "green"


class Length(str, Enum):
    SHORT = "short"
    LONG = "long"
    NA = "na"


ORDER_KIND = {
    1: (Color.GREEN, Length.SHORT),
    2: (Color.RED, Length.SHORT),
    4: (Color.GREEN, Length.LONG),
    5: (Color.RED, Length.LONG),
}


@dataclass(frozen=True)
class ColoredEdge:
    id: int
    u: int
    v: int
    color: Color
    length: Length
    path: tuple = ()
    marked_interior: int = None

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def is_long(self) -> bool:
        return self.length is Length.LONG

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"node {x} is not an end of edge {self.id}")

    def path_from(self, x: int) -> tuple:
        """Interior G-vertices listed from end ``x``; for a loop, from the ``u`` side."""
        if x == self.u:
            return self.path
        if x == self.v:
            return tuple(reversed(self.path))
        raise ValueError(f"node {x} is not an end of edge {self.id}")

    def nth_from(self, x: int, i: int) -> int:
        """(xy)_i, 1-based."""
        return self.path_from(x)[i - 1]

    def first_vertex_from(self, x: int) -> int:
        """The G-neighbour of ``x`` along this edge."""
        return self.path_from(x)[0] if self.path else self.other(x)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "u": self.u,
            "v": self.v,
            "color": self.color.value,
            "length": self.length.value,
            "path": list(self.path),
            "marked_interior": self.marked_interior,
        }


@dataclass(frozen=True)
class ColoredMultigraph:
    nodes: tuple
    edges: tuple
    n: int
    marked: frozenset = frozenset()
    incidence: dict = field(default_factory=dict, compare=False, hash=False)

    def edges_at(self, x: int) -> tuple:
        """Incident edges of node x; a loop appears twice."""
        return self.incidence.get(x, ())

    def colors_at(self, x: int) -> list:
        return [e.color for e in self.edges_at(x)]

    def count_at(self, x: int, color: Color) -> int:
        return sum(1 for e in self.edges_at(x) if e.color is color)

    def neighbors(self, x: int) -> list:
        return [e.other(x) for e in self.edges_at(x)]

    def is_black_star(self, x: int) -> bool:
        """All three edges at x are black."""
        return len(self.edges_at(x)) == 3 and all(e.color is Color.BLACK for e in self.edges_at(x))

    def edge(self, edge_id: int) -> ColoredEdge:
        return self.edges[edge_id]

    def to_dict(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "edges": [e.to_dict() for e in self.edges],
        }


def build(g: MarkedGraph) -> ColoredMultigraph:
    bad = [v for v in g.vertices() if g.degree(v) not in (2, 3)]
    if bad:
        raise BadDegrees(f"{len(bad)} vertices have degree other than 2 or 3", vertices=bad[:10])
    nodes = tuple(v for v in g.vertices() if g.degree(v) == 3)
    raw = []
    for u, v in g.edges():
        if g.degree(u) == 3 and g.degree(v) == 3:
            raw.append((u, v, Color.BLACK, Length.NA, (), None))
    for two_path in maximal_two_paths(g):
        if two_path.is_cycle:
            raise DegreeTwoCycleComponent("graph has a cycle component",
                                          vertices=list(two_path.vertices))
        if two_path.order not in ORDER_KIND:
            raise BadTwoPathOrder(f"maximal 2-path of order {two_path.order}",
                                  vertices=list(two_path.vertices))
        color, length = ORDER_KIND[two_path.order]
        marks = [w for w in two_path.vertices if g.is_marked(w)]
        if len(marks) > (1 if length is Length.LONG else 0):
            raise MarkedPathViolation(f"{color.value} {length.value} path carries {len(marks)} marks",
                                      vertices=list(two_path.vertices))
        a, b = two_path.end_attachments
        path = two_path.vertices
        if a > b:
            a, b, path = b, a, tuple(reversed(path))
        raw.append((a, b, color, length, tuple(path), marks[0] if marks else None))

    raw.sort(key=lambda r: (r[0], r[1], r[4][:1] or (-1,)))
    edges = tuple(ColoredEdge(i, *r) for i, r in enumerate(raw))
    incidence = defaultdict(list)
    for e in edges:
        incidence[e.u].append(e)
        incidence[e.v].append(e)
    return ColoredMultigraph(
        nodes=nodes,
        edges=edges,
        n=g.n,
        marked=g.marked_vertices(),
        incidence={x: tuple(es) for x, es in incidence.items()},
    )


@lru_cache(maxsize=256)
def build_or_none(g: MarkedGraph):
    """``build`` for detectors: None when G does not admit a colored multigraph."""
    try:
        return build(g)
    except MultigraphError:
        return None


def expand(m: ColoredMultigraph) -> MarkedGraph:
    """Rebuild G from the multigraph."""
    edges = []
    for e in m.edges:
        chain = [e.u, *e.path, e.v]
        edges.extend(zip(chain, chain[1:]))
    return MarkedGraph.from_edges(m.n, edges, m.marked)


# ---------------------------------------------------------------------------
# Findings
# ---------------------------------------------------------------------------

SIMPLICITY_CASES = {
    frozenset([Color.BLACK, Color.RED]): 2,
    frozenset([Color.BLACK, Color.GREEN]): 3,
    frozenset([Color.GREEN]): 4,
    frozenset([Color.RED]): 5,
    frozenset([Color.RED, Color.GREEN]): 6,
}


def simplicity_findings(m: ColoredMultigraph) -> list:
    """Every loop (case 1) and every parallel pair (cases 2-6)."""
    findings = []
    by_pair = defaultdict(list)
    for e in m.edges:
        if e.is_loop:
            findings.append({"case": 1, "nodes": [e.u], "edges": [e.id]})
        else:
            by_pair[(e.u, e.v)].append(e)
    for (u, v), group in sorted(by_pair.items()):
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                a, b = group[i], group[j]
                case = SIMPLICITY_CASES.get(frozenset([a.color, b.color]))
                if case is not None:
                    findings.append({"case": case, "nodes": [u, v], "edges": [a.id, b.id]})
    findings.sort(key=lambda f: (f["case"], f["nodes"], f["edges"]))
    return findings


def green_red_green_paths(m: ColoredMultigraph) -> list:
    """Node sequences u1 u2 u3 u4 joined by green, red, green edges on four distinct nodes."""
    witnesses = []
    for red in m.edges:
        if red.color is not Color.RED or red.is_loop:
            continue
        for u2, u3 in ((red.u, red.v), (red.v, red.u)):
            for g1 in m.edges_at(u2):
                if g1.color is not Color.GREEN or g1.is_loop:
                    continue
                u1 = g1.other(u2)
                for g2 in m.edges_at(u3):
                    if g2.color is not Color.GREEN or g2.is_loop or g2.id == g1.id:
                        continue
                    u4 = g2.other(u3)
                    if len({u1, u2, u3, u4}) == 4 and (u1, u2, u3, u4) < (u4, u3, u2, u1):
                        witnesses.append({"nodes": [u1, u2, u3, u4], "edges": [g1.id, red.id, g2.id]})
    witnesses.sort(key=lambda w: w["nodes"])
    return witnesses


def matching_findings(m: ColoredMultigraph) -> dict:
    green = [x for x in m.nodes if m.count_at(x, Color.GREEN) >= 2]
    red = [x for x in m.nodes if m.count_at(x, Color.RED) >= 2]
    return {
        "green_violations": green,
        "red_violations": red,
        "green_red_green": green_red_green_paths(m),
    }


def long_edge_findings(m: ColoredMultigraph) -> list:
    findings = []
    for e in m.edges:
        if e.is_long:
            position = e.path.index(e.marked_interior) + 1 if e.marked_interior is not None else None
            findings.append({"edge": e.id, "u": e.u, "v": e.v, "color": e.color.value,
                             "marked_position": position})
    return findings
