"""
Rules read off the colored multigraph: loops and parallel edges, green and
red matching violations, and long colored edges.

Matches bind multigraph nodes and edge ids; edge ids are stable because the
multigraph of a given graph is built deterministically.
"""
from itertools import combinations, permutations

from ...multigraph import Color, build_or_none, green_red_green_paths
from ..base import Contract, Match, Recipe, ReductionRule
from ..patterns import colored_at, long_count, middle_if_long, off_edges, outer_vertex


FAMILY = "multigraph"
PRECONDITIONS = {"min_girth": 6, "forbidden_cycles": frozenset({7, 8})}


def _rule(rule_id, description, contract, candidates, plan):
    return ReductionRule(rule_id, description, FAMILY, contract, candidates, plan, **PRECONDITIONS)


def _edges(m, match, *roles):
    return [m.edge(match[role]) for role in roles]


def _parallel_pairs(m, colors):
    """(u, v, e, f) for distinct non-loop edges e, f joining u and v with colours ``colors``."""
    for e, f in combinations(m.edges, 2):
        if e.is_loop or f.is_loop or {e.u, e.v} != {f.u, f.v}:
            continue
        for first, second in ((e, f), (f, e)):
            if (first.color, second.color) == colors:
                yield first, second


# -- loops and parallel edges -------------------------------------------------

def _loop_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for e in m.edges:
        if e.is_loop and e.color is Color.RED and e.is_long:
            yield Match.of("R-mg-loop", u=e.u, loop=e.id)


def _loop_plan(g, match):
    m = build_or_none(g)
    (loop,) = _edges(m, match, "loop")
    u = match["u"]
    v = outer_vertex(m, u, [loop])
    if v is None:
        return None
    return Recipe.build(remove=[u, *loop.path], mark=[v], dominators=[u, loop.path[2]])


def _black_green_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for black, green in _parallel_pairs(m, (Color.BLACK, Color.GREEN)):
        if green.is_long:
            for u in (green.u, green.v):
                yield Match.of("R-mg-black-green", u=u, v=green.other(u), black=black.id, green=green.id)


def _black_green_plan(g, match):
    m = build_or_none(g)
    black, green = _edges(m, match, "black", "green")
    u, v = match["u"], match["v"]
    x = green.path_from(u)
    v_out = outer_vertex(m, v, [black, green])
    if v_out is None:
        return None
    return Recipe.build(remove=[u, v, *x], mark=[v_out], dominators=[v, x[1]])


def _green_green_parallel_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for p, q in _parallel_pairs(m, (Color.GREEN, Color.GREEN)):
        if p.id < q.id and p.is_long and q.is_long:
            for u in (p.u, p.v):
                yield Match.of("R-mg-green-green", u=u, v=p.other(u), p=p.id, q=q.id)


def _green_green_parallel_plan(g, match):
    m = build_or_none(g)
    p, q = _edges(m, match, "p", "q")
    u = match["u"]
    x = outer_vertex(m, u, [p, q])
    if x is None:
        return None
    return Recipe.build(remove=[u, *p.path, *q.path], mark=[x],
                        dominators=[u, p.nth_from(u, 3), q.nth_from(u, 3)])


def _parallel_colored_candidates(rule_id, colors, ordered):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for p, q in _parallel_pairs(m, colors):
            if ordered and p.id > q.id:
                continue
            yield Match.of(rule_id, ell=long_count(p, q), u=min(p.u, p.v), v=max(p.u, p.v), p=p.id, q=q.id)
    return candidates


def _parallel_colored_plan(g, match):
    m = build_or_none(g)
    p, q = _edges(m, match, "p", "q")
    u, v = match["u"], match["v"]
    u_out = outer_vertex(m, u, [p, q])
    v_out = outer_vertex(m, v, [p, q])
    if u_out is None or v_out is None:
        return None
    return Recipe.build(
        remove=[u, v, *p.path, *q.path],
        mark=[u_out, v_out],
        dominators=[u, v, *middle_if_long(p, u), *middle_if_long(q, u)],
    )


# -- green and red matchings --------------------------------------------------

def _green_pair_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for u in m.nodes:
        greens = [e for e in colored_at(m, u, Color.GREEN) if not e.is_loop]
        for e, f in combinations(greens, 2):
            yield Match.of("R-green-green", ell=long_count(e, f), u=u, e=e.id, f=f.id)


def _green_pair_plan(g, match):
    m = build_or_none(g)
    e, f = _edges(m, match, "e", "f")
    u = match["u"]
    x = outer_vertex(m, u, [e, f])
    if x is None:
        return None
    return Recipe.build(remove=[u, *e.path, *f.path], mark=[x],
                        dominators=[u, *middle_if_long(e, u), *middle_if_long(f, u)])


def _green_red_green_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for witness in green_red_green_paths(m):
        edges = [m.edge(i) for i in witness["edges"]]
        yield Match.of("R-green-red-green", ell=long_count(*edges), nodes=tuple(witness["nodes"]),
                       edges=tuple(witness["edges"]))


def _green_red_green_plan(g, match):
    m = build_or_none(g)
    _, u2, u3, _ = match["nodes"]
    g1, red, g2 = (m.edge(i) for i in match["edges"])
    out2 = outer_vertex(m, u2, [g1, red])
    out3 = outer_vertex(m, u3, [red, g2])
    if out2 is None or out3 is None:
        return None
    return Recipe.build(
        remove=[u2, u3, *g1.path, *red.path, *g2.path],
        mark=[out2, out3],
        dominators=[u2, u3, *middle_if_long(g1, u2), *middle_if_long(red, u2), *middle_if_long(g2, u3)],
    )


def _longred_blackstar_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for u in m.nodes:
        reds = [e for e in colored_at(m, u, Color.RED) if e.is_long and not e.is_loop]
        if len(reds) == 1 and m.count_at(u, Color.BLACK) == 2:
            yield Match.of("R-longred-blackstar", u=u, red=reds[0].id)


def _longred_blackstar_plan(g, match):
    m = build_or_none(g)
    (red,) = _edges(m, match, "red")
    u = match["u"]
    x = red.path_from(u)
    return Recipe.build(remove=[u, *x], dominators=[x[0], x[3]])


def _red_chains(m, first_color):
    """(u1, u2, u3, u4, e1, e2, e3): a walk on four distinct nodes coloured first_color, red, red."""
    for e2 in m.edges:
        if e2.color is not Color.RED or e2.is_loop:
            continue
        for u2, u3 in ((e2.u, e2.v), (e2.v, e2.u)):
            for e1 in m.edges_at(u2):
                if e1.id == e2.id or e1.is_loop or e1.color is not first_color:
                    continue
                for e3 in m.edges_at(u3):
                    if e3.id == e2.id or e3.id == e1.id or e3.is_loop or e3.color is not Color.RED:
                        continue
                    u1, u4 = e1.other(u2), e3.other(u3)
                    if len({u1, u2, u3, u4}) == 4:
                        yield u1, u2, u3, u4, e1, e2, e3


def _green_red_red_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for u1, u2, u3, u4, e1, e2, e3 in _red_chains(m, Color.GREEN):
        yield Match.of("R-green-red-red", ell=long_count(e1, e2), nodes=(u1, u2, u3, u4),
                       edges=(e1.id, e2.id, e3.id))


def _green_red_red_plan(g, match):
    m = build_or_none(g)
    _, u2, u3, _ = match["nodes"]
    green, red, tail = (m.edge(i) for i in match["edges"])
    out2 = outer_vertex(m, u2, [green, red])
    out3 = outer_vertex(m, u3, [red, tail])
    if out2 is None or out3 is None:
        return None
    return Recipe.build(
        remove=[u2, u3, tail.first_vertex_from(u3), *green.path, *red.path],
        mark=[out2, out3],
        dominators=[u2, u3, *middle_if_long(green, u2), *middle_if_long(red, u2)],
    )


def _red_cycles(m):
    """Shortest red cycle through each red edge, as (nodes, edge ids) in canonical rotation."""
    found = set()
    for start in m.edges:
        if start.color is not Color.RED or start.is_loop:
            continue
        parent = {start.v: None}
        frontier = [start.v]
        while frontier and start.u not in parent:
            nxt = []
            for x in frontier:
                for e in colored_at(m, x, Color.RED):
                    if e.id == start.id or e.is_loop:
                        continue
                    y = e.other(x)
                    if y not in parent:
                        parent[y] = (x, e)
                        nxt.append(y)
            frontier = nxt
        if start.u not in parent:
            continue
        nodes, edges = [start.u], []
        cur = start.u
        while parent[cur] is not None:
            prev, e = parent[cur]
            nodes.append(prev)
            edges.append(e.id)
            cur = prev
        edges.append(start.id)
        if len(nodes) < 3:
            continue
        found.add(_canonical_cycle(nodes, edges))
    return sorted(found)


def _canonical_cycle(nodes, edges):
    """Rotate so the smallest node leads; edge i joins nodes i and i+1."""
    k = len(nodes)
    best = None
    for seq_nodes, seq_edges in ((nodes, edges), (nodes[::-1], edges[::-1][1:] + edges[::-1][:1])):
        for r in range(k):
            candidate = (tuple(seq_nodes[r:] + seq_nodes[:r]), tuple(seq_edges[r:] + seq_edges[:r]))
            if best is None or candidate < best:
                best = candidate
    return best


def _red_cycle_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for nodes, edge_ids in _red_cycles(m):
        edges = [m.edge(i) for i in edge_ids]
        yield Match.of("R-red-cycle", ell=len(nodes) + long_count(*edges), nodes=nodes, edges=edge_ids)


def _red_cycle_plan(g, match):
    m = build_or_none(g)
    nodes, edge_ids = match["nodes"], match["edges"]
    edges = [m.edge(i) for i in edge_ids]
    k = len(nodes)
    marks, dominators, remove = [], list(nodes), list(nodes)
    for i, x in enumerate(nodes):
        out = outer_vertex(m, x, [edges[i], edges[i - 1]])
        if out is None:
            return None
        marks.append(out)
        e = edges[i]
        remove.extend(e.path)
        dominators.extend(middle_if_long(e, x))
    if len(set(nodes)) != k:
        return None
    return Recipe.build(remove=remove, mark=marks, dominators=dominators)


def _red_path_4_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for u3 in m.nodes:
        reds = [e for e in colored_at(m, u3, Color.RED) if not e.is_loop]
        for r2, r3 in permutations(reds, 2):
            u2, u4 = r2.other(u3), r3.other(u3)
            if len({u2, u3, u4}) < 3:
                continue
            for r1 in colored_at(m, u2, Color.RED):
                for r4 in colored_at(m, u4, Color.RED):
                    if r1.is_loop or r4.is_loop or len({r1.id, r2.id, r3.id, r4.id}) < 4:
                        continue
                    u1, u5 = r1.other(u2), r4.other(u4)
                    if u1 in (u3, u4) or u5 in (u2, u3):
                        continue
                    yield Match.of("R-red-path-4", ell=long_count(r2, r3), nodes=(u1, u2, u3, u4, u5),
                                   edges=(r1.id, r2.id, r3.id, r4.id))


def _red_path_4_plan(g, match):
    m = build_or_none(g)
    _, u2, u3, u4, _ = match["nodes"]
    r1, r2, r3, r4 = (m.edge(i) for i in match["edges"])
    outs = [outer_vertex(m, u2, [r1, r2]), outer_vertex(m, u3, [r2, r3]), outer_vertex(m, u4, [r3, r4])]
    if None in outs:
        return None
    return Recipe.build(
        remove=[u2, u3, u4, r1.first_vertex_from(u2), r4.first_vertex_from(u4), *r2.path, *r3.path],
        mark=outs,
        dominators=[u2, u3, u4, *middle_if_long(r2, u2), *middle_if_long(r3, u3)],
    )


def _red_longred_red_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for u1, u2, u3, u4, e1, e2, e3 in _red_chains(m, Color.RED):
        if e2.is_long:
            yield Match.of("R-red-longred-red", nodes=(u1, u2, u3, u4), edges=(e1.id, e2.id, e3.id))


def _red_longred_red_plan(g, match):
    m = build_or_none(g)
    _, u2, u3, _ = match["nodes"]
    r1, long_red, r3 = (m.edge(i) for i in match["edges"])
    out2 = outer_vertex(m, u2, [r1, long_red])
    out3 = outer_vertex(m, u3, [long_red, r3])
    if out2 is None or out3 is None:
        return None
    return Recipe.build(
        remove=[u2, u3, r1.first_vertex_from(u2), r3.first_vertex_from(u3), *long_red.path],
        mark=[out2, out3],
        dominators=[u2, u3, long_red.nth_from(u2, 3)],
    )


def _double_stars(g):
    m = build_or_none(g)
    if m is None:
        return
    for center in m.edges:
        if center.color is not Color.RED or center.is_long or center.is_loop:
            continue
        for u3, u4 in ((center.u, center.v), (center.v, center.u)):
            rest3 = off_edges(m, u3, [center])
            rest4 = off_edges(m, u4, [center])
            colors3 = sorted(e.color.value for e in rest3)
            colors4 = [e.color for e in rest4]
            if all(c is Color.RED for c in colors4) and colors3 == ["red", "red"] and u3 < u4:
                yield Match.of("R-red-double-star", u3=u3, u4=u4, center=center.id)
            if all(c is Color.BLACK for c in colors4) and colors3 == ["black", "red"]:
                red = next(e for e in rest3 if e.color is Color.RED)
                if not red.is_long and not red.is_loop:
                    yield Match.of("R-red-double-star-2", u3=u3, u4=u4, center=center.id, red=red.id)


def _double_star_candidates(g):
    return (m for m in _double_stars(g) if m.rule_id == "R-red-double-star")


def _double_star_2_candidates(g):
    return (m for m in _double_stars(g) if m.rule_id == "R-red-double-star-2")


def _double_star_2_plan(g, match):
    m = build_or_none(g)
    center, red = _edges(m, match, "center", "red")
    u3 = match["u3"]
    return Recipe.build(remove=[u3, match["u4"], *red.path, *center.path],
                        dominators=[red.nth_from(u3, 1), center.nth_from(u3, 2)])


def _double_star_plan(g, match):
    u3, u4 = match["u3"], match["u4"]
    return Recipe.build(remove={u3, u4, *g.neighbors(u3), *g.neighbors(u4)}, dominators=[u3, u4])


def _red_star_leaves(m):
    for v in m.nodes:
        reds = colored_at(m, v, Color.RED)
        if len(reds) != 3 or any(e.is_loop or e.is_long for e in reds):
            continue
        if len({e.other(v) for e in reds}) == 3:
            yield v, reds


def _black_neighbors(m, x):
    return {e.other(x): e for e in colored_at(m, x, Color.BLACK) if not e.is_loop}


def _red_star_a_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for v, reds in _red_star_leaves(m):
        for e1, e2, e3 in permutations(reds):
            if e1.id < e2.id:
                yield Match.of("R-red-star-a", v=v, edges=(e1.id, e2.id, e3.id))


def _red_star_a_plan(g, match):
    m = build_or_none(g)
    e1, e2, e3 = (m.edge(i) for i in match["edges"])
    v = match["v"]
    return Recipe.build(
        remove=[v, e1.other(v), e2.other(v), *e1.path, *e2.path, *e3.path],
        dominators=[e1.nth_from(v, 2), e2.nth_from(v, 2), e3.nth_from(v, 1)],
    )


def _red_star_b_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for v, reds in _red_star_leaves(m):
        leaves = [e.other(v) for e in reds]
        shared = set(_black_neighbors(m, leaves[0]))
        for leaf in leaves[1:]:
            shared &= set(_black_neighbors(m, leaf))
        for w in sorted(shared - {v}):
            yield Match.of("R-red-star-b", v=v, w=w, edges=tuple(e.id for e in reds))


def _red_star_b_plan(g, match):
    m = build_or_none(g)
    reds = [m.edge(i) for i in match["edges"]]
    v, w = match["v"], match["w"]
    leaves = [e.other(v) for e in reds]
    marks = []
    for leaf, red in zip(leaves, reds):
        out = outer_vertex(m, leaf, [red, _black_neighbors(m, leaf)[w]])
        if out is None:
            return None
        marks.append(out)
    return Recipe.build(remove=[v, w, *leaves, *(x for e in reds for x in e.path)],
                        mark=marks, dominators=[v, *leaves])


def _red_star_c_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for v, reds in _red_star_leaves(m):
        v1, v2, v3 = (e.other(v) for e in reds)
        common = []
        for a, b in ((v1, v2), (v1, v3), (v2, v3)):
            shared = sorted(set(_black_neighbors(m, a)) & set(_black_neighbors(m, b)) - {v})
            if len(shared) != 1:
                break
            common.append(shared[0])
        else:
            if len(set(common)) == 3:
                yield Match.of("R-red-star-c", v=v, edges=tuple(e.id for e in reds), common=tuple(common))


def _red_star_c_plan(g, match):
    m = build_or_none(g)
    reds = [m.edge(i) for i in match["edges"]]
    v = match["v"]
    leaves = [e.other(v) for e in reds]
    return Recipe.build(remove=[v, *leaves, *match["common"], *(x for e in reds for x in e.path)],
                        dominators=[v, *leaves])


def _red_red_green_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for v in m.nodes:
        edges = m.edges_at(v)
        if any(e.is_loop for e in edges):
            continue
        if sorted(e.color.value for e in edges) == ["green", "red", "red"]:
            yield Match.of("R-red-red-green-star", v=v)


def _closed_star_plan(g, match):
    v = match["v"]
    return Recipe.build(remove=[v, *g.neighbors(v)], dominators=[v])


# -- long edges ---------------------------------------------------------------

def _triangle_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for red in m.edges:
        if red.color is not Color.RED or red.is_long or red.is_loop:
            continue
        for u, v in ((red.u, red.v), (red.v, red.u)):
            for green in colored_at(m, v, Color.GREEN):
                if green.is_loop:
                    continue
                w = green.other(v)
                if w in (u, v):
                    continue
                for black in colored_at(m, u, Color.BLACK):
                    if black.other(u) == w:
                        yield Match.of("R-gbr-triangle", ell=long_count(green), u=u, v=v, w=w,
                                       edges=(red.id, green.id, black.id))


def _triangle_plan(g, match):
    m = build_or_none(g)
    red, green, black = (m.edge(i) for i in match["edges"])
    u, v, w = match["u"], match["v"], match["w"]
    out_u = outer_vertex(m, u, [red, black])
    out_v = outer_vertex(m, v, [red, green])
    if out_u is None or out_v is None:
        return None
    return Recipe.build(remove=[u, v, w, *red.path, *green.path], mark=[out_u, out_v],
                        dominators=[u, v, *middle_if_long(green, v)])


def _red_long_green_pairs(m):
    """(u, v, w, red, green): red uv and long green vw meeting at v."""
    for green in m.edges:
        if green.color is not Color.GREEN or not green.is_long or green.is_loop:
            continue
        for v, w in ((green.u, green.v), (green.v, green.u)):
            for red in colored_at(m, v, Color.RED):
                if red.is_loop or red.is_long:
                    continue
                yield red.other(v), v, w, red, green


def _longgreen_red_candidates(rule_id, mark_position):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for u, v, w, red, green in _red_long_green_pairs(m):
            path = green.path_from(v)
            marked_at = path.index(green.marked_interior) + 1 if green.marked_interior is not None else None
            if marked_at == mark_position:
                yield Match.of(rule_id, u=u, v=v, w=w, red=red.id, green=green.id)
    return candidates


def _outer_pair(m, x, edge):
    return [e.first_vertex_from(x) for e in off_edges(m, x, [edge])]


def _longgreen_red_a_plan(g, match):
    m = build_or_none(g)
    red, green = _edges(m, match, "red", "green")
    v, w = match["v"], match["w"]
    return Recipe.build(remove=[v, w, *red.path, *green.path], mark=_outer_pair(m, w, green),
                        dominators=[red.nth_from(v, 1), green.nth_from(v, 2), w])


def _longgreen_red_b_plan(g, match):
    m = build_or_none(g)
    red, green = _edges(m, match, "red", "green")
    v, w = match["v"], match["w"]
    out = outer_vertex(m, v, [red, green])
    if out is None:
        return None
    return Recipe.build(remove=[v, w, red.nth_from(v, 1), *green.path], mark=[out],
                        dominators=[v, green.nth_from(v, 4)])


def _longgreen_red_c_plan(g, match):
    m = build_or_none(g)
    red, green = _edges(m, match, "red", "green")
    u, v, w = match["u"], match["v"], match["w"]
    return Recipe.build(remove=[u, v, w, *red.path, *green.path], mark=_outer_pair(m, w, green),
                        dominators=[red.nth_from(u, 1), green.nth_from(v, 1), w])


def _long_green_candidates(rule_id, marked):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for green in m.edges:
            if green.color is not Color.GREEN or not green.is_long or green.is_loop:
                continue
            for u, v in ((green.u, green.v), (green.v, green.u)):
                if not marked and green.marked_interior is None:
                    if all(e.color is Color.BLACK for e in off_edges(m, u, [green]) + off_edges(m, v, [green])):
                        if u < v:
                            yield Match.of(rule_id, u=u, v=v, green=green.id)
                elif marked and green.marked_interior == green.nth_from(u, 3):
                    yield Match.of(rule_id, u=u, v=v, green=green.id)
    return candidates


def _long_green_a_plan(g, match):
    m = build_or_none(g)
    (green,) = _edges(m, match, "green")
    u = match["u"]
    return Recipe.build(remove=[u, match["v"], *green.path],
                        dominators=[green.nth_from(u, 1), green.nth_from(u, 4)])


def _long_green_b_plan(g, match):
    m = build_or_none(g)
    (green,) = _edges(m, match, "green")
    u, v = match["u"], match["v"]
    return Recipe.build(remove=[u, v, *green.path], mark=_outer_pair(m, v, green),
                        dominators=[green.nth_from(u, 1), v])


RULES = [
    _rule("R-mg-loop", "long red loop", Contract(2, 28), _loop_candidates, _loop_plan),
    _rule("R-mg-black-green", "black edge parallel to a long green edge", Contract(2, 24),
          _black_green_candidates, _black_green_plan),
    _rule("R-mg-green-green", "two parallel long green edges", Contract(3, 38),
          _green_green_parallel_candidates, _green_green_parallel_plan),
    _rule("R-mg-red-red", "two parallel red edges", Contract(2, 28, alpha_per=1, beta_per=14),
          _parallel_colored_candidates("R-mg-red-red", (Color.RED, Color.RED), True),
          _parallel_colored_plan),
    _rule("R-mg-red-green", "parallel red and green edges", Contract(2, 25, alpha_per=1, beta_per=12),
          _parallel_colored_candidates("R-mg-red-green", (Color.RED, Color.GREEN), False),
          _parallel_colored_plan),
    _rule("R-green-green", "two green edges at one node", Contract(1, 12, alpha_per=1, beta_per=14),
          _green_pair_candidates, _green_pair_plan),
    _rule("R-green-red-green", "green-red-green path", Contract(2, 26, alpha_per=1, beta_per=14),
          _green_red_green_candidates, _green_red_green_plan),
    _rule("R-longred-blackstar", "long red edge at a node with two black edges", Contract(2, 25),
          _longred_blackstar_candidates, _longred_blackstar_plan),
    _rule("R-green-red-red", "green-red-red path", Contract(2, 24, alpha_per=1, beta_per=14),
          _green_red_red_candidates, _green_red_red_plan),
    _rule("R-red-cycle", "cycle of red edges", Contract(0, 0, alpha_per=1, beta_per=14),
          _red_cycle_candidates, _red_cycle_plan),
    _rule("R-red-path-4", "path of four red edges", Contract(3, 36, alpha_per=1, beta_per=14),
          _red_path_4_candidates, _red_path_4_plan),
    _rule("R-red-longred-red", "red, long red, red path", Contract(3, 36),
          _red_longred_red_candidates, _red_longred_red_plan),
    _rule("R-red-double-star-2", "double star with two short red edges", Contract(2, 24),
          _double_star_2_candidates, _double_star_2_plan),
    _rule("R-red-double-star", "double star with five red edges", Contract(2, 26),
          _double_star_candidates, _double_star_plan),
    _rule("R-red-star-a", "red star, two leaves without a common neighbour", Contract(3, 37),
          _red_star_a_candidates, _red_star_a_plan),
    _rule("R-red-star-b", "red star whose leaves share one neighbour", Contract(4, 50),
          _red_star_b_candidates, _red_star_b_plan),
    _rule("R-red-star-c", "red star whose leaf pairs have distinct common neighbours", Contract(4, 49),
          _red_star_c_candidates, _red_star_c_plan),
    _rule("R-red-red-green-star", "node with two red edges and a green edge", Contract(1, 12),
          _red_red_green_candidates, _closed_star_plan),
    _rule("R-gbr-triangle", "green-black-red triangle", Contract(2, 24, alpha_per=1, beta_per=14),
          _triangle_candidates, _triangle_plan),
    _rule("R-longgreen-red-a", "long green edge next to a red edge, unmarked",
          Contract(3, 36), _longgreen_red_candidates("R-longgreen-red-a", None), _longgreen_red_a_plan),
    _rule("R-longgreen-red-b", "long green edge next to a red edge, mark second",
          Contract(2, 25), _longgreen_red_candidates("R-longgreen-red-b", 2), _longgreen_red_b_plan),
    _rule("R-longgreen-red-c", "long green edge next to a red edge, mark third",
          Contract(3, 38), _longgreen_red_candidates("R-longgreen-red-c", 3), _longgreen_red_c_plan),
    _rule("R-long-green-a", "unmarked long green edge between black stars", Contract(2, 24),
          _long_green_candidates("R-long-green-a", False), _long_green_a_plan),
    _rule("R-long-green-b", "long green edge marked in third position", Contract(2, 25),
          _long_green_candidates("R-long-green-b", True), _long_green_b_plan),
]
