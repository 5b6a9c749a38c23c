"""
Endgame rules: red edges once the colored structure is tame, then the
cubic unmarked graph with no 6-cycle and its shortest cycle by length
modulo 3.

Cycle roles follow one convention: ``cycle`` lists v1..vg in order and
u_i is the neighbour of v_i off the cycle.
"""
from ...graphs.cycles import INFINITE, cycles_of_length, girth
from ...multigraph import Color, build_or_none
from ..base import Contract, Match, Recipe, ReductionRule
from ..patterns import colored_at, others, third


FAMILY = "endgame"
COLORED = {"min_girth": 6, "forbidden_cycles": frozenset({7, 8})}
CUBIC = {"min_girth": 6, "forbidden_cycles": frozenset({7, 8}), "requires_cubic": True,
         "requires_unmarked": True}


# -- red edges ----------------------------------------------------------------

def _short_reds(m):
    return [e for e in m.edges if e.color is Color.RED and not e.is_long and not e.is_loop]


def _red_adjacent_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for black in m.edges:
        if black.color is not Color.BLACK or black.is_loop:
            continue
        for v, w in ((black.u, black.v), (black.v, black.u)):
            for red_v in colored_at(m, v, Color.RED):
                for red_w in colored_at(m, w, Color.RED):
                    if red_v.id == red_w.id or red_v.is_long or red_w.is_long \
                            or red_v.is_loop or red_w.is_loop:
                        continue
                    yield Match.of("R-red-adjacent", v=v, w=w, red_v=red_v.id, red_w=red_w.id)


def _red_adjacent_plan(g, match):
    m = build_or_none(g)
    red_v, red_w = m.edge(match["red_v"]), m.edge(match["red_w"])
    v, w = match["v"], match["w"]
    return Recipe.build(remove=[v, w, *red_v.path, *red_w.path],
                        dominators=[red_v.nth_from(v, 1), red_w.nth_from(w, 1)])


def _red_edge_sides(g):
    """(u, v, red, (u1, u2), (v1, v2)) with every ordering of the outer neighbours."""
    m = build_or_none(g)
    if m is None:
        return
    for red in _short_reds(m):
        for u, v in ((red.u, red.v), (red.v, red.u)):
            outer_u = others(g, u, red.path)
            outer_v = others(g, v, red.path)
            if len(outer_u) != 2 or len(outer_v) != 2:
                continue
            for u1, u2 in (outer_u, outer_u[::-1]):
                for v1, v2 in (outer_v, outer_v[::-1]):
                    if len({u, v, u1, u2, v1, v2}) == 6:
                        yield u, v, red, (u1, u2), (v1, v2)


def _red_edge_a_candidates(g):
    for u, v, red, (u1, u2), (v1, v2) in _red_edge_sides(g):
        if g.has_edge(u1, v1):
            yield Match.of("R-red-edge-a", u=u, v=v, u1=u1, u2=u2, v1=v1, v2=v2, red=red.id)


def _red_edge_a_plan(g, match):
    m = build_or_none(g)
    red = m.edge(match["red"])
    u, v, u1, u2, v1, v2 = (match[r] for r in ("u", "v", "u1", "u2", "v1", "v2"))
    return Recipe.build(remove=[u, v, u1, v1, *red.path], mark=[u2, v2], dominators=[u, v])


def _red_edge_b_candidates(g):
    for u, v, red, (u1, u2), (v1, v2) in _red_edge_sides(g):
        yield Match.of("R-red-edge-b", u=u, v=v, u1=u1, u2=u2, v1=v1, v2=v2, red=red.id)


def _red_edge_b_plan(g, match):
    m = build_or_none(g)
    red = m.edge(match["red"])
    u, v, u1, u2, v1, v2 = (match[r] for r in ("u", "v", "u1", "u2", "v1", "v2"))
    return Recipe.build(remove=[u, v, u1, u2, v1, *red.path], mark=[v2], dominators=[u, v])


# -- cubic endgame ------------------------------------------------------------

def outer_neighbors(g, cycle) -> list:
    """u_i for each v_i, or None when v_i has no single off-cycle neighbour."""
    k = len(cycle)
    return [third(g, cycle[i], (cycle[i - 1], cycle[(i + 1) % k])) for i in range(k)]


def _rotations(cycle, both_directions):
    k = len(cycle)
    sequences = [cycle, cycle[:1] + cycle[1:][::-1]] if both_directions else [cycle]
    for seq in sequences:
        for r in range(k):
            yield tuple(seq[r:] + seq[:r])


def _six_cycle_candidates(rule_id, adjacent):
    def candidates(g):
        for cycle in cycles_of_length(g, 6):
            outer = outer_neighbors(g, cycle)
            for i in range(3):
                a, b = outer[i], outer[i + 3]
                if a is None or b is None or a == b:
                    continue
                if g.has_edge(a, b) == adjacent:
                    yield Match.of(rule_id, cycle=tuple(cycle), i=i)
    return candidates


def _six_cycle_plan(g, match):
    cycle, i = match["cycle"], match["i"]
    outer = outer_neighbors(g, cycle)
    return Recipe.build(remove=[*cycle, outer[i], outer[i + 3]], dominators=[cycle[i], cycle[i + 3]])


def _shortest_cycles(g, residue):
    length = girth(g)
    if length == INFINITE or length % 3 != residue or length < 9:
        return length, []
    return length, cycles_of_length(g, int(length))


def _girth_0_candidates(g):
    length, cycles = _shortest_cycles(g, 0)
    for cycle in cycles:
        for rotated in list(_rotations(cycle, False))[:3]:
            yield Match.of("R-girth-0mod3", ell=int(length) // 3, cycle=rotated)


def _girth_0_plan(g, match):
    cycle = match["cycle"]
    outer = outer_neighbors(g, cycle)
    positions = range(1, len(cycle), 3)
    if any(outer[p] is None for p in positions):
        return None
    return Recipe.build(remove=[*cycle, *(outer[p] for p in positions)],
                        dominators=[cycle[p] for p in positions])


def _girth_2_candidates(g):
    length, cycles = _shortest_cycles(g, 2)
    for cycle in cycles:
        for rotated in _rotations(cycle, True):
            yield Match.of("R-girth-2mod3", ell=int(length) // 3 + 2, cycle=rotated)


def _girth_2_plan(g, match):
    cycle = match["cycle"]
    outer = outer_neighbors(g, cycle)
    positions = range(3, len(cycle), 3)
    u1, u2 = outer[0], outer[1]
    if u1 is None or u2 is None or any(outer[p] is None for p in positions):
        return None
    second_ring = set(others(g, u1, [cycle[0]])) | set(others(g, u2, [cycle[1]]))
    return Recipe.build(
        remove={*cycle, *(outer[p] for p in positions), u1, u2, *second_ring},
        dominators=[u1, u2, *(cycle[p] for p in positions)],
    )


def _girth_1_candidates(g):
    length, cycles = _shortest_cycles(g, 1)
    # length 10 belongs to R-girth-10-final
    if length < 13:
        return
    for cycle in cycles:
        for rotated in _rotations(cycle, False):
            yield Match.of("R-girth-1mod3", ell=int(length) // 3 + 1, cycle=rotated)


def _girth_1_plan(g, match):
    cycle = match["cycle"]
    outer = outer_neighbors(g, cycle)
    positions = range(2, len(cycle), 3)
    u1 = outer[0]
    if u1 is None or any(outer[p] is None for p in positions):
        return None
    return Recipe.build(
        remove={*cycle, *(outer[p] for p in positions), u1, *others(g, u1, [cycle[0]])},
        dominators=[u1, *(cycle[p] for p in positions)],
    )


def _ten_cycle_bridges(g, outer, cycle, i, j):
    """(w_i, w_j) with w_i a neighbour of u_i, w_j one of u_j, and w_i w_j an edge."""
    for wi in others(g, outer[i], [cycle[i]]):
        for wj in others(g, outer[j], [cycle[j]]):
            if g.has_edge(wi, wj):
                yield wi, wj


def _girth_10_candidates(g):
    if girth(g) != 10:
        return
    for cycle in cycles_of_length(g, 10):
        for rotated in _rotations(cycle, True):
            outer = outer_neighbors(g, rotated)
            if None in outer:
                continue
            for w1, w6 in _ten_cycle_bridges(g, outer, rotated, 0, 5):
                for w2, w7 in _ten_cycle_bridges(g, outer, rotated, 1, 6):
                    yield Match.of("R-girth-10-final", cycle=rotated, bridges=(w1, w6, w2, w7))


def _girth_10_plan(g, match):
    cycle = match["cycle"]
    w1, w6, w2, w7 = match["bridges"]
    outer = outer_neighbors(g, cycle)
    extra = {}
    for index, w in ((0, w1), (5, w6), (1, w2), (6, w7)):
        rest = others(g, outer[index], [cycle[index], w])
        if len(rest) != 1:
            return None
        extra[index] = rest[0]
    remove = {*cycle, w1, w6, w2, w7, outer[3], outer[8], *extra.values(),
              *(outer[i] for i in (0, 1, 5, 6))}
    return Recipe.build(remove=remove, dominators=[outer[0], outer[1], outer[5], outer[6],
                                                   cycle[3], cycle[8]])


RULES = [
    ReductionRule("R-red-adjacent", "adjacent nodes carrying distinct red edges", FAMILY, Contract(2, 24),
                  _red_adjacent_candidates, _red_adjacent_plan, **COLORED),
    ReductionRule("R-red-edge-a", "red edge with adjacent outer neighbours", FAMILY, Contract(2, 24),
                  _red_edge_a_candidates, _red_edge_a_plan, **COLORED),
    ReductionRule("R-red-edge-b", "red edge with independent outer neighbours", FAMILY, Contract(2, 24),
                  _red_edge_b_candidates, _red_edge_b_plan, **COLORED),
    ReductionRule("R-6cycle-a", "6-cycle whose opposite outer neighbours are non-adjacent", FAMILY,
                  Contract(2, 24), _six_cycle_candidates("R-6cycle-a", False), _six_cycle_plan, **CUBIC),
    ReductionRule("R-6cycle-b", "6-cycle whose opposite outer neighbours are adjacent", FAMILY,
                  Contract(2, 26), _six_cycle_candidates("R-6cycle-b", True), _six_cycle_plan, **CUBIC),
    ReductionRule("R-girth-0mod3", "shortest cycle of length 3k", FAMILY,
                  Contract(0, 0, alpha_per=1, beta_per=12), _girth_0_candidates, _girth_0_plan, **CUBIC),
    ReductionRule("R-girth-2mod3", "shortest cycle of length 3k+2", FAMILY,
                  Contract(0, 0, alpha_per=1, beta_per=12), _girth_2_candidates, _girth_2_plan, **CUBIC),
    ReductionRule("R-girth-1mod3", "shortest cycle of length 3k+1", FAMILY,
                  Contract(0, 0, alpha_per=1, beta_per=12), _girth_1_candidates, _girth_1_plan, **CUBIC),
    ReductionRule("R-girth-10-final", "10-cycle with two bridged pairs of outer neighbours", FAMILY,
                  Contract(6, 72), _girth_10_candidates, _girth_10_plan, **CUBIC),
]
