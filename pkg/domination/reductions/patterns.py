"""Small graph lookups shared by the rule families."""
from ..graphs.marked_graph import MarkedGraph
from ..multigraph import Color, ColoredEdge, ColoredMultigraph


def others(g: MarkedGraph, v: int, exclude=()) -> tuple:
    exclude = set(exclude)
    return tuple(w for w in g.neighbors(v) if w not in exclude)


def third(g: MarkedGraph, v: int, exclude=()):
    """The single neighbour of v outside ``exclude``, or None."""
    rest = others(g, v, exclude)
    return rest[0] if len(rest) == 1 else None


def step_along(g: MarkedGraph, prev: int, cur: int):
    """Next vertex after ``cur`` on a 2-path entered from ``prev``; None unless cur has degree 2."""
    if cur is None or g.degree(cur) != 2:
        return None
    a, b = g.neighbors(cur)
    return b if a == prev else a


def unmarked_of_degree(g: MarkedGraph, v: int, degree: int) -> bool:
    return v is not None and not g.is_marked(v) and g.degree(v) == degree


def colored_at(m: ColoredMultigraph, x: int, color: Color) -> list:
    return [e for e in m.edges_at(x) if e.color is color]


def off_edges(m: ColoredMultigraph, x: int, used) -> list:
    """Edges at node x other than the edges in ``used`` (ids or edges)."""
    ids = {e.id if isinstance(e, ColoredEdge) else e for e in used}
    return [e for e in m.edges_at(x) if e.id not in ids]


def outer_vertex(m: ColoredMultigraph, x: int, used):
    """G-neighbour of node x along its one edge not in ``used``."""
    rest = off_edges(m, x, used)
    return rest[0].first_vertex_from(x) if len(rest) == 1 else None


def long_count(*edges) -> int:
    return sum(1 for e in edges if e.is_long)


def middle_if_long(e: ColoredEdge, x: int) -> list:
    """[(xy)_3] for a long edge, [] for a short one."""
    return [e.nth_from(x, 3)] if e.is_long else []


def is_black_star(m: ColoredMultigraph, x: int) -> bool:
    return m.is_black_star(x)
