"""
Extremity types of maximal alternating green-black paths and the two
counting strategies applied to them.

Strategy 1 removes the extremity but keeps the interior vertex of its
green edge, to be dominated from the path; Strategy 2 also removes that
interior vertex and keeps the far end of the green edge. Neither counts
the weight change of the vertex it keeps.
"""
from dataclasses import dataclass
from enum import Enum

from ..exceptions import Unclassifiable
from ..graphs.marked_graph import MarkedGraph, excise
from ..multigraph import Color, ColoredMultigraph
from ..rational import Rational12, r12
from ..reductions.patterns import colored_at, off_edges
from ..weights import DOMINATOR_COST, graph_weight, vertex_weight


class ExtremityType(str, Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"


class Strategy(str, Enum):
    S1 = "S1"
    S2 = "S2"


STRATEGY_DELTAS = {
    (ExtremityType.T1, Strategy.S1): 2,
    (ExtremityType.T2, Strategy.S1): 1,
    (ExtremityType.T3, Strategy.S1): 1,
    (ExtremityType.T1, Strategy.S2): -1,
    (ExtremityType.T2, Strategy.S2): 0,
    (ExtremityType.T3, Strategy.S2): 0,
}


def strategy_delta(t: ExtremityType, s: Strategy) -> Rational12:
    return r12(STRATEGY_DELTAS[(ExtremityType(t), Strategy(s))])


def _red_to_green(m: ColoredMultigraph, x: int):
    """The red edge at x whose far end carries a green edge, or None."""
    for red in colored_at(m, x, Color.RED):
        if not red.is_loop and m.count_at(red.other(x), Color.GREEN):
            return red
    return None


def classify_extremity(m: ColoredMultigraph, path, end: int) -> ExtremityType:
    """
    Type of the extremity ``end`` (the first or last node of ``path``).

    Raises:
        Unclassifiable: when the neighbourhood of ``end`` fits none of the
            three structures.
    """
    if end == path.start:
        green_id = path.edges[0]
    elif end == path.end:
        green_id = path.edges[-1]
    else:
        raise ValueError(f"node {end} is not an extremity of the path")

    off = off_edges(m, end, [green_id])
    if len(off) != 2 or any(e.is_loop for e in off):
        raise Unclassifiable("extremity is not a simple degree-3 node", node=end)
    colors = sorted(e.color.value for e in off)
    if Color.GREEN.value in colors:
        raise Unclassifiable("extremity carries a second green edge", node=end)

    if colors == [Color.BLACK.value, Color.BLACK.value]:
        ends = [e.other(end) for e in off]
        with_red = [x for x in ends if colored_at(m, x, Color.RED)]
        if any(m.count_at(x, Color.GREEN) for x in ends):
            raise Unclassifiable("path is not maximal at this extremity", node=end)
        if any(_red_to_green(m, x) is None for x in with_red):
            raise Unclassifiable("red edge ends at a node without a green edge", node=end)
        if len(with_red) == 2:
            return ExtremityType.T1
        if len(with_red) == 1:
            return ExtremityType.T2
        raise Unclassifiable("star with two black edges and one green edge", node=end)

    if colors == [Color.BLACK.value, Color.RED.value]:
        black = next(e for e in off if e.color is Color.BLACK)
        v = black.other(end)
        if m.count_at(v, Color.GREEN):
            raise Unclassifiable("path is not maximal at this extremity", node=end)
        if not colored_at(m, v, Color.RED):
            raise Unclassifiable("black neighbour of a red-carrying extremity has no red edge", node=end)
        return ExtremityType.T3

    raise Unclassifiable("extremity carries two red edges", node=end)


# ---------------------------------------------------------------------------
# Gadgets
# ---------------------------------------------------------------------------

class _Builder:
    """Named vertices and edges; ``anchor`` hangs a K4-minus-an-edge off a vertex."""

    def __init__(self):
        self.ids = {}
        self.edges = []
        self.anchors = {}

    def vertex(self, name: str) -> int:
        if name not in self.ids:
            self.ids[name] = len(self.ids)
        return self.ids[name]

    def edge(self, a: str, b: str):
        self.edges.append((self.vertex(a), self.vertex(b)))

    def chain(self, *names):
        for a, b in zip(names, names[1:]):
            self.edge(a, b)

    def anchor(self, at: str):
        count = self.anchors.get(at, 0)
        self.anchors[at] = count + 1
        tag = f"{at}~{count}"
        a, b, c, d = (f"{tag}.{part}" for part in "abcd")
        self.chain(at, a, b, c, a)
        self.chain(b, d, c)
        return a

    def graph(self) -> MarkedGraph:
        return MarkedGraph.from_edges(len(self.ids), self.edges)


@dataclass(frozen=True)
class StrategyGadget:
    """A G-level extremity of the given type; ``roles`` names its vertices."""
    type: ExtremityType
    graph: MarkedGraph
    roles: dict

    def __getitem__(self, role: str) -> int:
        return self.roles[role]


def strategy_gadget(t: ExtremityType) -> StrategyGadget:
    """
    Build extremity u of a one-green path u, x (green interior v1).

    Every dangling edge ends at a degree-3 anchor, so the boundary vertices
    are unmarked and cubic.
    """
    t = ExtremityType(t)
    b = _Builder()
    b.chain("u", "v1", "x")
    b.anchor("x")
    b.anchor("x")
    b.chain("u", "v")
    b.chain("v", "vy1", "vy2", "y")
    b.anchor("v")
    b.chain("y", "gy", "yp")
    b.anchor("y")
    b.anchor("yp")
    b.anchor("yp")
    if t is ExtremityType.T1:
        b.chain("u", "w")
        b.chain("w", "wz1", "wz2", "z")
        b.anchor("w")
        b.chain("z", "gz", "zp")
        b.anchor("z")
        b.anchor("zp")
        b.anchor("zp")
    elif t is ExtremityType.T2:
        b.chain("u", "w")
        b.anchor("w")
        b.anchor("w")
    else:
        b.chain("u", "uw1", "uw2", "w")
        b.anchor("w")
        b.anchor("w")
    roles = {name: vid for name, vid in b.ids.items() if "~" not in name}
    roles.update({f"{name.split('~')[0]}'": vid for name, vid in b.ids.items()
                  if name.endswith("~0.a") and name.split("~")[0] in ("v", "w", "y")})
    return StrategyGadget(type=t, graph=b.graph(), roles=roles)


@dataclass(frozen=True)
class Excision:
    remove: frozenset
    mark: frozenset
    dominators: frozenset
    excluded: int

    @property
    def alpha(self) -> int:
        return len(self.dominators)


def _third_neighbors(g: MarkedGraph, x: int, removed) -> set:
    return {w for w in g.neighbors(x) if w not in removed}


def strategy_excision(gadget: StrategyGadget, s: Strategy) -> Excision:
    s = Strategy(s)
    r = gadget.roles
    g = gadget.graph
    t = gadget.type
    if s is Strategy.S1:
        if t is ExtremityType.T1:
            remove = {r["u"], r["v"], r["w"], r["y"], r["vy1"], r["vy2"], r["gy"], r["wz1"], r["wz2"]}
            mark = (_third_neighbors(g, r["v"], remove) | _third_neighbors(g, r["y"], remove))
            dominators = {r["v"], r["y"], r["wz1"]}
        elif t is ExtremityType.T2:
            remove = {r["u"], r["v"], r["y"], r["vy1"], r["vy2"], r["gy"]}
            mark = (_third_neighbors(g, r["v"], remove) | _third_neighbors(g, r["y"], remove))
            dominators = {r["v"], r["y"]}
        else:
            remove = {r["u"], r["v"], r["vy1"], r["vy2"], r["uw1"], r["uw2"]}
            mark = set()
            dominators = {r["uw1"], r["vy1"]}
        return Excision(frozenset(remove), frozenset(mark), frozenset(dominators), excluded=r["v1"])

    if t is ExtremityType.T1:
        remove = {r["u"], r["v"], r["v1"], r["w"], r["vy1"], r["vy2"], r["wz1"], r["wz2"]}
        mark = {r["y"], r["z"]}
        dominators = {r["u"], r["vy2"], r["wz2"]}
    elif t is ExtremityType.T2:
        remove = {r["u"], r["v1"], r["v"], r["w"], r["vy1"], r["vy2"]}
        mark = {r["y"]}
        dominators = {r["u"], r["vy2"]}
    else:
        remove = {r["u"], r["v1"], r["uw1"], r["v"], r["vy1"], r["vy2"]}
        mark = {r["y"]}
        dominators = {r["u"], r["vy2"]}
    return Excision(frozenset(remove), frozenset(mark), frozenset(dominators), excluded=r["x"])


def excision_delta(gadget: StrategyGadget, s: Strategy) -> Rational12:
    """Weight drop minus 12 alpha, leaving out the kept vertex's weight change."""
    excision = strategy_excision(gadget, s)
    g = gadget.graph
    h, remap = excise(g, excision.remove, excision.mark)
    drop = graph_weight(g).total - graph_weight(h).total
    kept = excision.excluded
    drop -= vertex_weight(g, kept) - vertex_weight(h, remap[kept])
    return r12(drop - DOMINATOR_COST * excision.alpha)


def undominated_by_excision(gadget: StrategyGadget, s: Strategy) -> set:
    """Removed or newly marked vertices outside N[dominators]."""
    excision = strategy_excision(gadget, s)
    g = gadget.graph
    covered = set()
    for d in excision.dominators:
        covered |= g.closed_neighborhood(d)
    return (set(excision.remove) | set(excision.mark)) - covered
