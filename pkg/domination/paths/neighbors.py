"""
Neighbour edges of a green-black path and their weight shares.

A neighbour edge leaves an internal node of the path. Upper nodes are
u_i' (i < k), lower nodes u_i (i >= 2). Each kind carries the share
f_upper / f_lower it contributes when the path is removed, and the set S
of extra G-vertices removed with it.
"""
from dataclasses import dataclass
from enum import Enum

from ..exceptions import Unclassifiable
from ..multigraph import Color, ColoredMultigraph
from ..rational import Rational12, r12


class NeighborKind(str, Enum):
    RED_ISLAND = "red_island"
    GREEN_ISLAND = "green_island"
    GREEN_ISTHMUS = "green_isthmus"
    RED_ISTHMUS = "red_isthmus"
    BLACK_DETOUR = "black_detour"
    SPECIAL_RED = "special_red"
    SPECIAL_BLACK = "special_black"
    WELL_BEHAVED = "well_behaved"


SPECIAL_KINDS = frozenset({NeighborKind.SPECIAL_RED, NeighborKind.SPECIAL_BLACK})
ISTHMUS_KINDS = frozenset({NeighborKind.GREEN_ISTHMUS, NeighborKind.RED_ISTHMUS})


@dataclass(frozen=True)
class NeighborEdge:
    edge: int
    kind: NeighborKind
    at: int
    upper: bool
    far: int
    # Node or edge identifying the structure the edge belongs to (island, isthmus end).
    group: tuple = ()
    removal: frozenset = frozenset()

    def to_dict(self) -> dict:
        return {
            "edge": self.edge,
            "kind": self.kind.value,
            "at": self.at,
            "side": "upper" if self.upper else "lower",
            "far": self.far,
            "removal": sorted(self.removal),
        }


@dataclass(frozen=True)
class Share:
    f_upper: Rational12 = None
    f_lower: Rational12 = None
    s_upper: frozenset = frozenset()
    s_lower: frozenset = frozenset()

    def to_dict(self) -> dict:
        return {
            "f_upper": None if self.f_upper is None else str(self.f_upper),
            "f_lower": None if self.f_lower is None else str(self.f_lower),
            "s_upper": sorted(self.s_upper),
            "s_lower": sorted(self.s_lower),
        }


def _attachments(m: ColoredMultigraph, x: int, on_path: set) -> int:
    return sum(1 for e in m.edges_at(x) if not e.is_loop and e.other(x) in on_path)


def classify_neighbor_edge(m: ColoredMultigraph, path, edge_id: int) -> NeighborEdge:
    """
    Raises:
        Unclassifiable: for an edge that cannot leave an internal node of an
            admissible path (a loop, or a second green edge).
    """
    e = m.edge(edge_id)
    on_path = set(path.nodes)
    internal = set(path.internal_nodes())
    ends = [x for x in (e.u, e.v) if x in internal]
    if not ends:
        raise ValueError(f"edge {edge_id} is not incident with an internal node of the path")
    if e.id in path.edges:
        raise ValueError(f"edge {edge_id} lies on the path")
    at = ends[0]
    upper = path.is_upper(at)
    if e.is_loop or e.color is Color.GREEN:
        raise Unclassifiable("internal node carries a loop or a second green edge", edge=edge_id)
    q = e.other(at)

    def make(kind, group=(), removal=()):
        return NeighborEdge(edge=e.id, kind=kind, at=at, upper=upper, far=q,
                            group=group, removal=frozenset(removal))

    if q in on_path:
        return make(NeighborKind.WELL_BEHAVED)

    if e.color is Color.RED:
        if _attachments(m, q, on_path) == 3:
            return make(NeighborKind.RED_ISLAND, group=("red_island", q), removal=(q, *e.path))
        return make(NeighborKind.SPECIAL_RED)

    if m.is_black_star(q):
        return make(NeighborKind.SPECIAL_BLACK)

    reds = [x for x in m.edges_at(q) if x.color is Color.RED and not x.is_loop]
    greens = [x for x in m.edges_at(q) if x.color is Color.GREEN and not x.is_loop]
    attached = _attachments(m, q, on_path)

    for red in reds:
        if red.other(q) in on_path:
            if attached == 3:
                return make(NeighborKind.RED_ISLAND, group=("red_island", q), removal=(q, *red.path))
            # The black edge sits beside a special red edge at the same far node.
            return make(NeighborKind.SPECIAL_RED)

    if greens:
        green = greens[0]
        r = green.other(q)
        if attached >= 2 and _attachments(m, r, on_path) >= 2:
            return make(NeighborKind.GREEN_ISLAND, group=("green_island", green.id),
                        removal=(q, r, *green.path))
        if attached >= 2:
            return make(NeighborKind.GREEN_ISTHMUS, group=("isthmus", q),
                        removal=(q, green.nth_from(q, 1)))
        return make(NeighborKind.BLACK_DETOUR)

    if reds:
        if attached >= 2:
            return make(NeighborKind.RED_ISTHMUS, group=("isthmus", q),
                        removal=(q, reds[0].nth_from(q, 1)))
        return make(NeighborKind.BLACK_DETOUR)

    raise Unclassifiable("far node of a black neighbour edge has no recognised structure", edge=edge_id)


def neighbor_edges(m: ColoredMultigraph, path) -> list:
    """Every neighbour edge of the path, in path order then edge id."""
    result = []
    seen = set()
    for node in path.internal_nodes():
        for e in sorted(m.edges_at(node), key=lambda x: x.id):
            if e.id in path.edges or e.id in seen:
                continue
            seen.add(e.id)
            result.append(classify_neighbor_edge(m, path, e.id))
    return result


def edge_share(kind: NeighborKind, upper_incidences: int = 1, removal=frozenset(), center: int = None) -> Share:
    """
    f_upper / f_lower and the S-sets for one neighbour edge.

    ``upper_incidences`` counts the upper edges among the two edges of an
    isthmus, and ``center`` is its doubly attached end; both are ignored
    for the other kinds.
    """
    kind = NeighborKind(kind)
    removal = frozenset(removal)
    if kind is NeighborKind.RED_ISLAND:
        return Share(r12("2/3"), r12("2/3"), removal, removal)
    if kind is NeighborKind.GREEN_ISLAND:
        return Share(r12("1/4"), r12("1/4"), removal, removal)
    if kind in ISTHMUS_KINDS:
        hub = frozenset() if center is None else frozenset({center})
        if upper_incidences >= 1:
            return Share(r12("1/2"), r12("1/2"), hub, hub)
        return Share(None, r12("-3/2"), frozenset(), removal)
    if kind is NeighborKind.BLACK_DETOUR:
        return Share(r12(0), r12(-1))
    raise ValueError(f"{kind.value} edges carry no share")
