"""
Local rules: marked-vertex degrees, leaves, short 2-paths near marks,
long 2-paths and cycle components.
"""
from math import ceil

from ...graphs.marked_graph import maximal_two_paths
from ..base import Contract, Match, Recipe, ReductionRule
from ..patterns import step_along, unmarked_of_degree


FAMILY = "local"


# -- marked and isolated vertices ---------------------------------------------

def _marked_isolated_candidates(g):
    for v in g.vertices():
        if g.is_marked(v) and g.degree(v) == 0:
            yield Match.of("R-marked-isolated", v=v)


def _marked_isolated_plan(g, match):
    return Recipe.build(remove=[match["v"]])


def _unmarked_isolated_candidates(g):
    for v in g.vertices():
        if not g.is_marked(v) and g.degree(v) == 0:
            yield Match.of("R-unmarked-isolated", v=v)


def _unmarked_isolated_plan(g, match):
    v = match["v"]
    return Recipe.build(remove=[v], dominators=[v])


def _unmark_deg3_candidates(g):
    for v in g.vertices():
        if g.is_marked(v) and g.degree(v) == 3:
            yield Match.of("R-unmark-deg3", v=v)


def _unmark_deg3_plan(g, match):
    return Recipe.build(unmark=[match["v"]])


def _unmarked_leaf_candidates(g):
    for u in g.vertices():
        if unmarked_of_degree(g, u, 1):
            yield Match.of("R-unmarked-leaf", u=u, v=g.neighbors(u)[0])


def _unmarked_leaf_plan(g, match):
    u, v = match["u"], match["v"]
    if not g.has_edge(u, v):
        return None
    return Recipe.build(remove=[u, v], mark=[w for w in g.neighbors(v) if w != u], dominators=[v])


def _marked_marked_edge_candidates(g):
    for u, v in g.edges():
        if g.is_marked(u) and g.is_marked(v):
            yield Match.of("R-marked-marked-edge", u=u, v=v)


def _marked_marked_edge_plan(g, match):
    return Recipe.build(delete_edges=[(match["u"], match["v"])])


def _marked_leaf_candidates(g):
    for u in g.vertices():
        if g.is_marked(u) and g.degree(u) == 1:
            yield Match.of("R-marked-leaf", u=u)


def _marked_leaf_plan(g, match):
    return Recipe.build(remove=[match["u"]])


def _marked_beside_deg3_candidates(g):
    for u in g.vertices():
        if not (g.is_marked(u) and g.degree(u) == 2):
            continue
        for v in g.neighbors(u):
            if g.degree(v) == 3:
                yield Match.of("R-marked-beside-deg3", u=u, v=v)


def _marked_beside_deg3_plan(g, match):
    return Recipe.build(remove=[match["u"]])


# -- 2-paths near marked vertices ---------------------------------------------

def _two_path_from_marked_candidates(g):
    for u1 in g.vertices():
        if not (g.is_marked(u1) and g.degree(u1) == 2):
            continue
        for u2 in g.neighbors(u1):
            u3 = step_along(g, u1, u2)
            u4 = step_along(g, u2, u3)
            if u4 is None or len({u1, u2, u3, u4}) < 4:
                continue
            if all(unmarked_of_degree(g, x, 2) for x in (u2, u3, u4)):
                yield Match.of("R-2path-from-marked", u1=u1, u2=u2, u3=u3, u4=u4)


def _two_path_from_marked_plan(g, match):
    path = [match[r] for r in ("u1", "u2", "u3", "u4")]
    return Recipe.build(remove=path, dominators=[match["u3"]])


def _close_pairs(g, gap):
    """
    Runs u1..u(gap+3) of degree-2 vertices where u2 and u(gap+2) are
    marked and the vertices between them are unmarked.
    """
    for u2 in g.vertices():
        if not (g.is_marked(u2) and g.degree(u2) == 2):
            continue
        for first in g.neighbors(u2):
            run = [u2]
            prev, cur = u2, first
            for _ in range(gap):
                if not unmarked_of_degree(g, cur, 2):
                    break
                run.append(cur)
                prev, cur = cur, step_along(g, prev, cur)
            else:
                if cur is None or not (g.is_marked(cur) and g.degree(cur) == 2):
                    continue
                run.append(cur)
                u1 = next(w for w in g.neighbors(u2) if w != first)
                tail = step_along(g, run[-2], cur)
                run = [u1] + run + [tail]
                if len(set(run)) == len(run):
                    yield run


def _extend(g, run, count):
    """Extend a run past its last vertex by ``count`` steps along degree-2 vertices."""
    run = list(run)
    for _ in range(count):
        nxt = step_along(g, run[-2], run[-1])
        if nxt is None or nxt in run:
            return None
        run.append(nxt)
    return run


def _marked_close_2a_candidates(g):
    for run in _close_pairs(g, 1):
        yield Match.of("R-marked-close-2a", path=tuple(run))


def _marked_close_2a_plan(g, match):
    u1, u2, u3 = match["path"][:3]
    return Recipe.build(remove=[u1, u2, u3], dominators=[u2])


def _marked_close_2b_candidates(g):
    for run in _close_pairs(g, 1):
        longer = _extend(g, run, 2)
        if longer is not None:
            yield Match.of("R-marked-close-2b", path=tuple(longer))


def _marked_close_2b_plan(g, match):
    path = match["path"]
    return Recipe.build(remove=path[:6], mark=[path[6]], dominators=[path[1], path[5]])


def _marked_close_3a_candidates(g):
    for run in _close_pairs(g, 2):
        longer = _extend(g, run, 2)
        if longer is not None:
            yield Match.of("R-marked-close-3a", path=tuple(longer))


def _marked_close_3a_plan(g, match):
    path = match["path"]
    return Recipe.build(remove=path[1:7], mark=[path[7]], dominators=[path[2], path[6]])


def _marked_close_3b_candidates(g):
    for run in _close_pairs(g, 2):
        yield Match.of("R-marked-close-3b", path=tuple(run))


def _marked_close_3b_plan(g, match):
    path = match["path"]
    return Recipe.build(remove=path[:6], dominators=[path[1], path[4]])


# -- cycles and long 2-paths --------------------------------------------------

def cycle_dominators(cycle) -> list:
    """Every third vertex from position 1, the last one clipped to the end."""
    n = len(cycle)
    return [cycle[min(3 * i + 1, n - 1)] for i in range(ceil(n / 3))]


def _cycle_component_candidates(g):
    for two_path in maximal_two_paths(g):
        if two_path.is_cycle and not any(g.is_marked(v) for v in two_path.vertices):
            cycle = two_path.vertices
            yield Match.of("R-cycle-component", ell=ceil(len(cycle) / 3), cycle=cycle)


def _cycle_component_plan(g, match):
    cycle = match["cycle"]
    return Recipe.build(remove=cycle, dominators=cycle_dominators(cycle))


def _two_path_6_candidates(g):
    for two_path in maximal_two_paths(g):
        if two_path.is_cycle:
            continue
        vertices = two_path.vertices
        for start in range(len(vertices) - 5):
            yield Match.of("R-2path-6", path=vertices[start:start + 6])


def _two_path_6_plan(g, match):
    path = match["path"]
    return Recipe.build(remove=path, dominators=[path[1], path[4]])


def _two_path_3_candidates(g):
    for two_path in maximal_two_paths(g):
        if not two_path.is_cycle and two_path.order == 3:
            yield Match.of("R-2path-3", path=two_path.vertices)


def _two_path_3_plan(g, match):
    path = match["path"]
    return Recipe.build(remove=path, dominators=[path[1]])


RULES = [
    ReductionRule("R-marked-isolated", "isolated marked vertex", FAMILY, Contract(0, 4),
                  _marked_isolated_candidates, _marked_isolated_plan),
    ReductionRule("R-unmarked-isolated", "isolated unmarked vertex", FAMILY, Contract(1, 12),
                  _unmarked_isolated_candidates, _unmarked_isolated_plan),
    ReductionRule("R-unmark-deg3", "marked vertex of degree 3 is unmarked", FAMILY, Contract(0, 0),
                  _unmark_deg3_candidates, _unmark_deg3_plan),
    ReductionRule("R-unmarked-leaf", "unmarked vertex of degree 1", FAMILY, Contract(1, 12),
                  _unmarked_leaf_candidates, _unmarked_leaf_plan),
    ReductionRule("R-marked-marked-edge", "edge joining two marked vertices", FAMILY, Contract(0, 0),
                  _marked_marked_edge_candidates, _marked_marked_edge_plan),
    ReductionRule("R-marked-leaf", "marked vertex of degree 1", FAMILY, Contract(0, 1),
                  _marked_leaf_candidates, _marked_leaf_plan),
    ReductionRule("R-marked-beside-deg3", "marked vertex of degree 2 next to a vertex of degree 3",
                  FAMILY, Contract(0, 0), _marked_beside_deg3_candidates, _marked_beside_deg3_plan),
    ReductionRule("R-2path-from-marked", "2-path of length 3 starting at a marked vertex", FAMILY,
                  Contract(1, 13), _two_path_from_marked_candidates, _two_path_from_marked_plan),
    ReductionRule("R-marked-close-2a", "marked vertices at distance 2, closed side", FAMILY,
                  Contract(1, 13), _marked_close_2a_candidates, _marked_close_2a_plan),
    ReductionRule("R-marked-close-2b", "marked vertices at distance 2, open side", FAMILY,
                  Contract(2, 25), _marked_close_2b_candidates, _marked_close_2b_plan),
    ReductionRule("R-marked-close-3a", "marked vertices at distance 3 on a long run", FAMILY,
                  Contract(2, 25), _marked_close_3a_candidates, _marked_close_3a_plan),
    ReductionRule("R-marked-close-3b", "marked vertices at distance 3", FAMILY,
                  Contract(2, 26), _marked_close_3b_candidates, _marked_close_3b_plan),
    ReductionRule("R-cycle-component", "component that is an unmarked cycle", FAMILY,
                  Contract(0, 0, alpha_per=1, beta_per=12),
                  _cycle_component_candidates, _cycle_component_plan),
    ReductionRule("R-2path-6", "2-path of order at least 6", FAMILY, Contract(2, 25),
                  _two_path_6_candidates, _two_path_6_plan),
    ReductionRule("R-2path-3", "maximal 2-path of order 3", FAMILY, Contract(1, 12),
                  _two_path_3_candidates, _two_path_3_plan),
]
