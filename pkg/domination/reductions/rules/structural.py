"""
Structural rules around short green edges: green-black-green paths next to
black stars, consecutive reds, 6-cycles of G through a green edge, the two
forbidden stars, the two allowable-structure violations, 10-cycles of G
through two or three short greens and the long alternating green-black
path.
"""
from ...multigraph import Color, build_or_none
from ..base import Contract, Match, Recipe, ReductionRule
from ..patterns import colored_at, off_edges, outer_vertex


FAMILY = "structural"
PRECONDITIONS = {"min_girth": 6, "forbidden_cycles": frozenset({7, 8})}


def _rule(rule_id, description, contract, candidates, plan):
    return ReductionRule(rule_id, description, FAMILY, contract, candidates, plan, **PRECONDITIONS)


def _short_green(m, x):
    """The single short green non-loop edge at x, or None."""
    greens = colored_at(m, x, Color.GREEN)
    if len(greens) != 1 or greens[0].is_long or greens[0].is_loop:
        return None
    return greens[0]


def _black_to(m, x, exclude=()):
    return [e for e in colored_at(m, x, Color.BLACK) if not e.is_loop and e.other(x) not in exclude]


def _edge_map(m, match, roles):
    return {role: m.edge(match[role]) for role in roles}


# -- green-black-green paths --------------------------------------------------

def _gbg_paths(m):
    """(u, u1, v, v1, g1, b, g2): short green u u1, black u1 v, short green v v1."""
    for b in m.edges:
        if b.color is not Color.BLACK or b.is_loop:
            continue
        for u1, v in ((b.u, b.v), (b.v, b.u)):
            g1, g2 = _short_green(m, u1), _short_green(m, v)
            if g1 is None or g2 is None:
                continue
            u, v1 = g1.other(u1), g2.other(v)
            if len({u, u1, v, v1}) == 4:
                yield u, u1, v, v1, g1, b, g2


def _gbg_blackstar_candidates(rule_id, third_color):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for u, u1, v, v1, g1, b, g2 in _gbg_paths(m):
            third_u1 = off_edges(m, u1, [g1, b])
            third_v = off_edges(m, v, [g2, b])
            if len(third_u1) != 1 or len(third_v) != 1:
                continue
            tail, v_star_edge = third_u1[0], third_v[0]
            if tail.color is not third_color or tail.is_loop or tail.is_long:
                continue
            if v_star_edge.color is not Color.BLACK or v_star_edge.is_loop:
                continue
            v_star = v_star_edge.other(v)
            if not m.is_black_star(v_star):
                continue
            for u_star_edge in _black_to(m, u, exclude=(u1, v, v1, v_star)):
                u_star = u_star_edge.other(u)
                if m.is_black_star(u_star):
                    yield Match.of(rule_id, u=u, u1=u1, v=v, v1=v1, u_star=u_star, v_star=v_star,
                                   g1=g1.id, b=b.id, g2=g2.id, u_star_edge=u_star_edge.id,
                                   v_star_edge=v_star_edge.id, tail=tail.id)
    return candidates


def _gbg_blackstar_a_plan(g, match):
    m = build_or_none(g)
    e = _edge_map(m, match, ("g1", "g2", "u_star_edge"))
    u, v = match["u"], match["v"]
    x = outer_vertex(m, u, [e["g1"], e["u_star_edge"]])
    if x is None:
        return None
    return Recipe.build(
        remove=[u, v, match["u_star"], match["v_star"], match["u1"], *e["g1"].path, *e["g2"].path],
        mark=[x],
        dominators=[u, v],
    )


def _gbg_blackstar_b_plan(g, match):
    m = build_or_none(g)
    e = _edge_map(m, match, ("g1", "g2", "u_star_edge", "tail"))
    u, v, u1 = match["u"], match["v"], match["u1"]
    red = e["tail"]
    x = outer_vertex(m, u, [e["g1"], e["u_star_edge"]])
    if x is None:
        return None
    return Recipe.build(
        remove=[u, v, match["u_star"], match["v_star"], u1, red.other(u1),
                *e["g1"].path, *e["g2"].path, *red.path],
        mark=[x],
        dominators=[u, v, red.nth_from(u1, 2)],
    )


def _consecutive_reds_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for u, u1, v, v1, g1, b, g2 in _gbg_paths(m):
        red1 = off_edges(m, u1, [g1, b])
        third_v = off_edges(m, v, [g2, b])
        red2 = [e for e in colored_at(m, v1, Color.RED) if not e.is_loop and not e.is_long]
        if len(red1) != 1 or red1[0].color is not Color.RED or red1[0].is_long or red1[0].is_loop:
            continue
        if len(third_v) != 1 or third_v[0].color is not Color.BLACK:
            continue
        for r2 in red2:
            yield Match.of("R-consecutive-reds", u=u, u1=u1, v=v, v1=v1,
                           g1=g1.id, b=b.id, g2=g2.id, r1=red1[0].id, r2=r2.id)


def _consecutive_reds_plan(g, match):
    m = build_or_none(g)
    e = _edge_map(m, match, ("g1", "g2", "r1", "r2"))
    u1, v, v1 = match["u1"], match["v"], match["v1"]
    out = outer_vertex(m, v1, [e["g2"], e["r2"]])
    if out is None:
        return None
    return Recipe.build(
        remove=[u1, v, v1, e["r1"].first_vertex_from(u1), e["r2"].first_vertex_from(v1),
                *e["g1"].path, *e["g2"].path],
        mark=[out],
        dominators=[u1, v1],
    )


# -- 6-cycles of G through a short green edge ---------------------------------

def _green_five_cycles(m):
    """
    (v, v1, a, b, c, edges): M-cycle v v1 a b c v whose edge v v1 is a short
    green and whose other four edges are black. In G this is a 6-cycle.
    """
    for green in m.edges:
        if green.color is not Color.GREEN or green.is_long or green.is_loop:
            continue
        for v, v1 in ((green.u, green.v), (green.v, green.u)):
            for e1 in _black_to(m, v1, exclude=(v,)):
                a = e1.other(v1)
                for e2 in _black_to(m, a, exclude=(v, v1)):
                    b = e2.other(a)
                    for e3 in _black_to(m, b, exclude=(v, v1, a)):
                        c = e3.other(b)
                        for e4 in _black_to(m, c, exclude=(v1, a, b)):
                            if e4.other(c) == v:
                                yield v, v1, a, b, c, (green, e1, e2, e3, e4)


def _six_cycle_candidates(rule_id, kind):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for v, v1, a, b, c, (green, e1, e2, e3, e4) in _green_five_cycles(m):
            third_a = off_edges(m, a, [e1, e2])
            third_b = off_edges(m, b, [e2, e3])
            if len(third_a) != 1 or len(third_b) != 1:
                continue
            ta, tb = third_a[0], third_b[0]
            ids = dict(green=green.id, e1=e1.id, e2=e2.id, e3=e3.id, e4=e4.id, ta=ta.id, tb=tb.id)
            if kind == "black":
                if ta.color is Color.BLACK and not ta.is_loop and m.is_black_star(ta.other(a)) \
                        and tb.color is Color.BLACK:
                    yield Match.of(rule_id, cycle=(v, v1, a, b, c), **ids)
            elif kind == "green":
                if tb.color is Color.GREEN and not tb.is_long and not tb.is_loop:
                    yield Match.of(rule_id, cycle=(v, v1, a, b, c), **ids)
            elif kind == "star":
                if ta.color is Color.GREEN and not ta.is_long and not ta.is_loop and m.is_black_star(b):
                    yield Match.of(rule_id, cycle=(v, v1, a, b, c), **ids)
    return candidates


def _six_cycle_black_plan(g, match):
    m = build_or_none(g)
    e = _edge_map(m, match, ("green", "e4", "ta"))
    v, v1, a, b, c = match["cycle"]
    out = outer_vertex(m, v, [e["green"], e["e4"]])
    if out is None:
        return None
    return Recipe.build(remove=[c, v, v1, a, b, e["ta"].other(a), *e["green"].path],
                        mark=[out], dominators=[v, a])


def _six_cycle_green_plan(g, match):
    m = build_or_none(g)
    e = _edge_map(m, match, ("green", "tb"))
    v, v1, a, b, c = match["cycle"]
    return Recipe.build(remove=[c, v, v1, a, b, *e["green"].path, *e["tb"].path],
                        dominators=[b, e["green"].path[0]])


def _six_cycle_star_plan(g, match):
    m = build_or_none(g)
    e = _edge_map(m, match, ("green", "e4", "ta"))
    v, v1, a, b, c = match["cycle"]
    out = outer_vertex(m, v, [e["green"], e["e4"]])
    if out is None:
        return None
    return Recipe.build(remove=[c, v, v1, a, b, *e["green"].path, *e["ta"].path],
                        mark=[out], dominators=[v, a])


# -- forbidden stars and allowable structures ---------------------------------

def _star_candidates(rule_id, colors):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for v in m.nodes:
            edges = m.edges_at(v)
            if any(e.is_loop for e in edges) or sorted(e.color.value for e in edges) != colors:
                continue
            leaves = [e.other(v) for e in edges if e.color is Color.BLACK]
            if all(m.is_black_star(x) for x in leaves):
                yield Match.of(rule_id, v=v)
    return candidates


def _closed_star_plan(g, match):
    v = match["v"]
    return Recipe.build(remove=[v, *g.neighbors(v)], dominators=[v])


def _allowable_stars(m):
    """(u, green, black_v, black_w) at nodes with one short green and two black edges."""
    for u in m.nodes:
        green = _short_green(m, u)
        blacks = _black_to(m, u)
        if green is None or len(blacks) != 2:
            continue
        for ev, ew in ((blacks[0], blacks[1]), (blacks[1], blacks[0])):
            v, w = ev.other(u), ew.other(u)
            if v != w and not colored_at(m, v, Color.GREEN) and not colored_at(m, w, Color.GREEN):
                yield u, green, v, w


def _short_red_to_two_blacks(m, x):
    """Short red edges at x whose far end carries two black edges."""
    result = []
    for red in colored_at(m, x, Color.RED):
        if red.is_loop or red.is_long:
            continue
        far = red.other(x)
        if len(_black_to(m, far)) == 2:
            result.append(red)
    return result


def _allowable_a_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for u, green, v, w in _allowable_stars(m):
        for red_v in _short_red_to_two_blacks(m, v):
            for red_w in colored_at(m, w, Color.RED):
                if red_w.is_loop or red_w.is_long:
                    continue
                y, z = red_v.other(v), red_w.other(w)
                if len({u, v, w, y, z, green.other(u)}) == 6:
                    yield Match.of("R-allowable-a", u=u, v=v, w=w, y=y, z=z,
                                   green=green.id, red_v=red_v.id, red_w=red_w.id)


def _allowable_a_plan(g, match):
    m = build_or_none(g)
    e = _edge_map(m, match, ("green", "red_v", "red_w"))
    u, v, w, y, z = (match[r] for r in ("u", "v", "w", "y", "z"))
    return Recipe.build(
        remove=[u, v, w, y, *e["green"].path, *e["red_v"].path, *e["red_w"].path],
        mark=[z],
        dominators=[u, e["red_v"].nth_from(v, 2), e["red_w"].nth_from(w, 2)],
    )


def _allowable_b_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for u, green, v, w in _allowable_stars(m):
        if not m.is_black_star(w):
            continue
        for red_v in _short_red_to_two_blacks(m, v):
            y = red_v.other(v)
            if len({u, v, w, y, green.other(u)}) == 5:
                yield Match.of("R-allowable-b", u=u, v=v, w=w, y=y,
                               green=green.id, red_v=red_v.id)


def _allowable_b_plan(g, match):
    m = build_or_none(g)
    e = _edge_map(m, match, ("green", "red_v"))
    u, v, w, y = (match[r] for r in ("u", "v", "w", "y"))
    return Recipe.build(remove=[u, v, w, y, *e["green"].path, *e["red_v"].path],
                        dominators=[u, e["red_v"].nth_from(v, 2)])


# -- 10-cycles of G through short green edges ---------------------------------

def _third(m, x, used):
    rest = off_edges(m, x, used)
    return rest[0] if len(rest) == 1 else None


def _is(e, color):
    """e is a non-loop edge of ``color``, short unless black."""
    return e is not None and e.color is color and not e.is_loop and not e.is_long


def _star_beyond(m, x, used):
    """Black star reached from x along its one edge outside ``used``, or None."""
    e = _third(m, x, used)
    if not _is(e, Color.BLACK) or not m.is_black_star(e.other(x)):
        return None
    return e.other(x)


def _black_between(m, x, y):
    return next((e for e in _black_to(m, x) if e.other(x) == y), None)


def _three_green_cycles(m):
    """
    M-cycle u u1 v v1 w w1 s u with short greens u u1, v v1, w w1 and a black
    star s. In G this is a 10-cycle.
    """
    for u, u1, v, v1, g1, b1, g2 in _gbg_paths(m):
        for b2 in _black_to(m, v1, exclude=(u, u1, v)):
            w = b2.other(v1)
            g3 = _short_green(m, w)
            if g3 is None or g3.other(w) in (u, u1, v, v1):
                continue
            w1 = g3.other(w)
            for b3 in _black_to(m, w1, exclude=(u, u1, v, v1, w)):
                s = b3.other(w1)
                b4 = _black_between(m, s, u)
                if m.is_black_star(s) and b4 is not None:
                    yield (u, u1, v, v1, w, w1, s), (g1, b1, g2, b2, g3, b3, b4)


def _three_green_candidates(rule_id, exit_color):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for nodes, edges in _three_green_cycles(m):
            u, u1, v, v1, w, w1, s = nodes
            g1, b1, g2, b2, g3, b3, b4 = edges
            if _star_beyond(m, u1, [g1, b1]) is None or _star_beyond(m, w, [b2, g3]) is None:
                continue
            to_x, exit_v1 = _third(m, w1, [g3, b3]), _third(m, v1, [g2, b2])
            if not _is(to_x, Color.BLACK) or not _is(exit_v1, exit_color):
                continue
            x = to_x.other(w1)
            if x in nodes or _short_green(m, x) is None:
                continue
            yield Match.of(rule_id, cycle=nodes, edges=tuple(e.id for e in edges),
                           x=x, to_x=to_x.id, exit=exit_v1.id)
    return candidates


def _three_green_plan(g, match):
    m = build_or_none(g)
    u, u1, v, v1, w, w1, s = match["cycle"]
    g1, b1, g2, b2, g3, b3, b4 = (m.edge(i) for i in match["edges"])
    x, to_x, exit_v1 = match["x"], m.edge(match["to_x"]), m.edge(match["exit"])
    green_x = _short_green(m, x)
    w_star = _star_beyond(m, w, [b2, g3])
    if green_x is None or w_star is None:
        return None
    marks = [outer_vertex(m, u, [g1, b4]), outer_vertex(m, v, [b1, g2]),
             outer_vertex(m, x, [to_x, green_x])]
    if None in marks:
        return None
    remove = [*match["cycle"], *g1.path, *g2.path, *g3.path, w_star, x, *green_x.path]
    dominators = [u, v, w, x]
    if exit_v1.color is Color.RED:
        remove += exit_v1.path
        marks.append(exit_v1.other(v1))
        dominators.append(exit_v1.nth_from(v1, 2))
    return Recipe.build(remove=remove, mark=marks, dominators=dominators)


def _two_green_cycles(m):
    """
    M-cycle u1 v v1 w w1 s y t u1 with short greens v v1 and w w1, black stars
    s and t, and a short green hanging off u1. In G this is a 10-cycle.
    """
    for v, v1, w, w1, g1, b1, g2 in _gbg_paths(m):
        for b2 in _black_to(m, w1, exclude=(v, v1, w)):
            s = b2.other(w1)
            if not m.is_black_star(s):
                continue
            for b3 in _black_to(m, s, exclude=(v, v1, w, w1)):
                y = b3.other(s)
                for b4 in _black_to(m, y, exclude=(v, v1, w, w1, s)):
                    t = b4.other(y)
                    if not m.is_black_star(t):
                        continue
                    for b5 in _black_to(m, t, exclude=(v, v1, w, w1, s, y)):
                        u1 = b5.other(t)
                        b6 = _black_between(m, u1, v)
                        green_u = _short_green(m, u1)
                        nodes = (u1, v, v1, w, w1, s, y, t)
                        if b6 is None or green_u is None or green_u.other(u1) in nodes:
                            continue
                        yield nodes, (b6, g1, b1, g2, b2, b3, b4, b5), green_u


def _two_green_frame(m, nodes, edges):
    """(w_star, to_x, x, exit_y) shared by the two-green 10-cycle rules, or None."""
    u1, v, v1, w, w1, s, y, t = nodes
    b6, g1, b1, g2, b2, b3, b4, b5 = edges
    w_star = _star_beyond(m, w, [b1, g2])
    to_x, exit_y = _third(m, w1, [g2, b2]), _third(m, y, [b3, b4])
    if w_star is None or not _is(to_x, Color.BLACK) or exit_y is None or exit_y.is_loop:
        return None
    x = to_x.other(w1)
    if x in nodes or _short_green(m, x) is None:
        return None
    return w_star, to_x, x, exit_y


def _two_green_exit_candidates(rule_id, exit_color):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for nodes, edges, green_u in _two_green_cycles(m):
            frame = _two_green_frame(m, nodes, edges)
            if frame is None:
                continue
            w_star, to_x, x, exit_y = frame
            if not _is(exit_y, exit_color):
                continue
            z = exit_y.other(nodes[6])
            if exit_color is Color.BLACK and (z in nodes or z == x or _short_green(m, z) is None):
                continue
            yield Match.of(rule_id, cycle=nodes, edges=tuple(e.id for e in edges),
                           green_u=green_u.id, x=x, exit=exit_y.id)
    return candidates


def _two_green_exit_plan(g, match):
    m = build_or_none(g)
    u1, v, v1, w, w1, s, y, t = match["cycle"]
    b6, g1, b1, g2, b2, b3, b4, b5 = (m.edge(i) for i in match["edges"])
    green_u, exit_y = m.edge(match["green_u"]), m.edge(match["exit"])
    out_v1 = outer_vertex(m, v1, [g1, b1])
    if out_v1 is None:
        return None
    remove = [*match["cycle"], *g1.path, *g2.path, *green_u.path]
    marks = [out_v1, match["x"]]
    if exit_y.color is Color.RED:
        remove += exit_y.path
        dominators = [u1, v1, w1, exit_y.nth_from(y, 1)]
    else:
        z = exit_y.other(y)
        green_z = _short_green(m, z)
        out_z = outer_vertex(m, z, [exit_y, green_z])
        if out_z is None:
            return None
        remove += [z, *green_z.path]
        marks.append(out_z)
        dominators = [u1, v1, w1, z]
    return Recipe.build(remove=remove, mark=marks, dominators=dominators)


def _single_short_red(m, x):
    reds = [e for e in colored_at(m, x, Color.RED) if _is(e, Color.RED)]
    return reds[0] if len(reds) == 1 else None


def _two_green_candidates(g):
    m = build_or_none(g)
    if m is None:
        return
    for nodes, edges, green_u in _two_green_cycles(m):
        frame = _two_green_frame(m, nodes, edges)
        if frame is None:
            continue
        w_star, to_x, x, exit_y = frame
        u1, v, v1, w, w1, s, y, t = nodes
        taken = {*nodes, x, w_star}
        z = exit_y.other(y)
        if _is(exit_y, Color.GREEN):
            z_red = ()
        elif _is(exit_y, Color.BLACK) and z not in taken and m.is_black_star(z):
            z_red = ()
        elif _is(exit_y, Color.BLACK) and z not in taken and len(_black_to(m, z)) == 2 \
                and _single_short_red(m, z) is not None:
            z_red = (_single_short_red(m, z).id,)
        else:
            continue
        ids = dict(cycle=nodes, edges=tuple(e.id for e in edges), green_u=green_u.id,
                   x=x, w_star=w_star, exit=exit_y.id, z_red=z_red)
        yield Match.of("R-10cycle-stars", ell=len(z_red), p_red=(), **ids)
        to_p = _third(m, s, [b for b in edges if s in (b.u, b.v)])
        if not _is(to_p, Color.BLACK):
            continue
        p = to_p.other(s)
        p_red = _single_short_red(m, p)
        if p in taken or p == z or _black_between(m, p, w_star) is None or p_red is None:
            continue
        yield Match.of("R-10cycle-stars", ell=len(z_red) + 1, p_red=(p, p_red.id), **ids)


def _two_green_plan(g, match):
    m = build_or_none(g)
    u1, v, v1, w, w1, s, y, t = match["cycle"]
    b6, g1, b1, g2, b2, b3, b4, b5 = (m.edge(i) for i in match["edges"])
    x, exit_y = match["x"], m.edge(match["exit"])
    green_x = _short_green(m, x)
    to_x = _black_between(m, w1, x)
    if green_x is None or to_x is None:
        return None
    marks = [outer_vertex(m, v, [b6, g1]), outer_vertex(m, x, [to_x, green_x])]
    if None in marks:
        return None
    remove = [*match["cycle"], *g1.path, *g2.path, x, *green_x.path, match["w_star"]]
    dominators = [v, w, x, y]
    if exit_y.color is Color.GREEN:
        remove += exit_y.path
    else:
        z = exit_y.other(y)
        remove.append(z)
        for red_id in match["z_red"]:
            red = m.edge(red_id)
            remove += [*red.path, red.other(z)]
            dominators.append(red.nth_from(z, 2))
    if match["p_red"]:
        p, red_id = match["p_red"]
        red = m.edge(red_id)
        remove += [p, *red.path]
        dominators.append(red.nth_from(p, 1))
    return Recipe.build(remove=remove, mark=marks, dominators=dominators)


# -- long alternating paths ---------------------------------------------------

def _alternating_paths(m):
    """
    Green-black-green-black-green-black-green path u u1 v v1 w w1 x x1 of
    short greens, with black stars beyond u1, w and w1.
    """
    for u, u1, v, v1, g1, b1, g2 in _gbg_paths(m):
        for b2 in _black_to(m, v1, exclude=(u, u1, v)):
            w = b2.other(v1)
            g3 = _short_green(m, w)
            if g3 is None:
                continue
            w1 = g3.other(w)
            for b3 in _black_to(m, w1, exclude=(u, u1, v, v1, w)):
                x = b3.other(w1)
                g4 = _short_green(m, x)
                if g4 is None:
                    continue
                nodes = (u, u1, v, v1, w, w1, x, g4.other(x))
                if len(set(nodes)) != 8:
                    continue
                t = _star_beyond(m, u1, [g1, b1])
                w_star = _star_beyond(m, w, [b2, g3])
                s = _star_beyond(m, w1, [g3, b3])
                if t is None or w_star is None or s is None or len({t, w_star, s, *nodes}) != 11:
                    continue
                yield nodes, (g1, b1, g2, b2, g3, b3, g4), t, s


def _alternating_candidates(rule_id, exit_color):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for nodes, edges, t, s in _alternating_paths(m):
            exit_v = _third(m, nodes[2], [edges[1], edges[2]])
            if _is(exit_v, exit_color):
                yield Match.of(rule_id, path=nodes, edges=tuple(e.id for e in edges),
                               t=t, s=s, exit=exit_v.id)
    return candidates


def _alternating_plan(g, match):
    m = build_or_none(g)
    u, u1, v, v1, w, w1, x, x1 = match["path"]
    g1, b1, g2, b2, g3, b3, g4 = (m.edge(i) for i in match["edges"])
    exit_v = m.edge(match["exit"])
    out_v1 = outer_vertex(m, v1, [g2, b2])
    if out_v1 is None:
        return None
    remove = [u1, v, v1, w, w1, match["t"], match["s"], *g1.path, *g2.path, *g3.path]
    marks = [out_v1]
    dominators = [u1, v1, w1]
    if exit_v.color is Color.RED:
        remove += [exit_v.other(v), *exit_v.path]
        marks.append(x)
        dominators.append(exit_v.nth_from(v, 2))
    return Recipe.build(remove=remove, mark=marks, dominators=dominators)


def _alternating_shared_candidates(rule_id, cyclic):
    def candidates(g):
        m = build_or_none(g)
        if m is None:
            return
        for nodes, edges, t, s in _alternating_paths(m):
            v, w1 = nodes[2], nodes[5]
            red = _third(m, v, [edges[1], edges[2]])
            if not _is(red, Color.RED):
                continue
            p = red.other(v)
            if p in nodes or p in (t, s):
                continue
            for pq in _black_to(m, p, exclude=(w1, s, t, *nodes)):
                q = pq.other(p)
                qs = _black_between(m, q, s)
                exit_q = _third(m, q, [pq, qs]) if qs is not None else None
                if exit_q is None or exit_q.is_loop:
                    continue
                if cyclic and not (_is(exit_q, Color.GREEN) or _is(exit_q, Color.RED)):
                    continue
                if not cyclic and not _is(exit_q, Color.BLACK):
                    continue
                yield Match.of(rule_id, path=nodes, edges=tuple(e.id for e in edges), t=t, s=s,
                               p=p, q=q, red=red.id, pq=pq.id, exit=exit_q.id)
    return candidates


def _alternating_shared_plan(g, match):
    m = build_or_none(g)
    u, u1, v, v1, w, w1, x, x1 = match["path"]
    g2 = m.edge(match["edges"][2])
    red, pq = m.edge(match["red"]), m.edge(match["pq"])
    p, q = match["p"], match["q"]
    out_p = outer_vertex(m, p, [red, pq])
    if out_p is None:
        return None
    return Recipe.build(remove=[v, p, q, *g2.path, *red.path], mark=[u1, out_p], dominators=[v, p])


def _alternating_cycle_plan(g, match):
    m = build_or_none(g)
    u, u1, v, v1, w, w1, x, x1 = match["path"]
    g1, b1, g2, b2, g3, b3, g4 = (m.edge(i) for i in match["edges"])
    red, exit_q = m.edge(match["red"]), m.edge(match["exit"])
    q = match["q"]
    out_v1 = outer_vertex(m, v1, [g2, b2])
    if out_v1 is None:
        return None
    q1 = exit_q.nth_from(q, 1)
    beyond = exit_q.nth_from(q, 2) if exit_q.color is Color.RED else exit_q.other(q)
    return Recipe.build(
        remove=[match["s"], q, match["p"], *red.path, v, v1, w, w1, u1, match["t"],
                *g1.path, *g2.path, *g3.path, q1],
        mark=[x, out_v1, beyond],
        dominators=[u1, v1, w1, q1, red.nth_from(v, 2)],
    )


RULES = [
    _rule("R-gbg-blackstars-a", "green-black-green path between black stars", Contract(2, 24),
          _gbg_blackstar_candidates("R-gbg-blackstars-a", Color.BLACK), _gbg_blackstar_a_plan),
    _rule("R-gbg-blackstars-b", "green-black-green path between black stars, red exit", Contract(3, 36),
          _gbg_blackstar_candidates("R-gbg-blackstars-b", Color.RED), _gbg_blackstar_b_plan),
    _rule("R-consecutive-reds", "green-black-green path with red edges at both inner ends",
          Contract(2, 24), _consecutive_reds_candidates, _consecutive_reds_plan),
    _rule("R-6cycle-star", "6-cycle through a green edge and a black star", Contract(2, 24),
          _six_cycle_candidates("R-6cycle-star", "star"), _six_cycle_star_plan),
    _rule("R-6cycle-black", "6-cycle through a green edge with a black exit", Contract(2, 24),
          _six_cycle_candidates("R-6cycle-black", "black"), _six_cycle_black_plan),
    _rule("R-6cycle-green", "6-cycle through a green edge with a green exit", Contract(2, 25),
          _six_cycle_candidates("R-6cycle-green", "green"), _six_cycle_green_plan),
    _rule("R-star-bbg", "star with two black edges to black stars and one green edge", Contract(1, 12),
          _star_candidates("R-star-bbg", ["black", "black", "green"]), _closed_star_plan),
    _rule("R-star-rbg", "star with one red, one black edge to a black star, and one green",
          Contract(1, 12), _star_candidates("R-star-rbg", ["black", "green", "red"]), _closed_star_plan),
    _rule("R-allowable-a", "two red edges beyond a green star, one far end without green",
          Contract(3, 36), _allowable_a_candidates, _allowable_a_plan),
    _rule("R-allowable-b", "one red edge beyond a green star, far end without green",
          Contract(2, 25), _allowable_b_candidates, _allowable_b_plan),
    _rule("R-10cycle-greens-black", "10-cycle through three greens with a black exit",
          Contract(4, 48), _three_green_candidates("R-10cycle-greens-black", Color.BLACK),
          _three_green_plan),
    _rule("R-10cycle-greens-red", "10-cycle through three greens with a red exit",
          Contract(5, 60), _three_green_candidates("R-10cycle-greens-red", Color.RED),
          _three_green_plan),
    _rule("R-10cycle-stars-green-exit", "10-cycle through two greens, green beyond the exit",
          Contract(4, 48), _two_green_exit_candidates("R-10cycle-stars-green-exit", Color.BLACK),
          _two_green_exit_plan),
    _rule("R-10cycle-stars-red-exit", "10-cycle through two greens with a red exit",
          Contract(4, 48), _two_green_exit_candidates("R-10cycle-stars-red-exit", Color.RED),
          _two_green_exit_plan),
    _rule("R-10cycle-stars", "10-cycle through two greens and two black stars",
          Contract(4, 48, alpha_per=1, beta_per=12), _two_green_candidates, _two_green_plan),
    _rule("R-gbgbgbg-black", "alternating path of four greens with a black exit", Contract(3, 36),
          _alternating_candidates("R-gbgbgbg-black", Color.BLACK), _alternating_plan),
    _rule("R-gbgbgbg-red", "alternating path of four greens with a red exit", Contract(4, 49),
          _alternating_candidates("R-gbgbgbg-red", Color.RED), _alternating_plan),
    _rule("R-gbgbgbg-red-shared", "alternating path whose red exit shares a black node",
          Contract(2, 24), _alternating_shared_candidates("R-gbgbgbg-red-shared", False),
          _alternating_shared_plan),
    _rule("R-gbgbgbg-red-cycle", "alternating path closing a cycle through its red exit",
          Contract(5, 60), _alternating_shared_candidates("R-gbgbgbg-red-cycle", True),
          _alternating_cycle_plan),
]
