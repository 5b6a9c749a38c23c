import random

from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from ..exceptions import BadDegrees, BadTwoPathOrder, DegreeTwoCycleComponent, MarkedPathViolation
from ..graphs import (
    MarkedGraph,
    complete_graph_k4,
    cycle_graph,
    maximal_two_paths,
    path_graph,
    random_cubic,
    subdivide_edge,
)
from ..multigraph import (
    Color,
    Length,
    build,
    build_or_none,
    expand,
    long_edge_findings,
    matching_findings,
    simplicity_findings,
)
from .factories import star_prism


def subdivided(base: MarkedGraph, plan: dict, marks=()) -> MarkedGraph:
    """Subdivide each original edge (u, v) of ``plan`` ``plan[(u, v)]`` times."""
    g = base
    for (u, v), times in sorted(plan.items()):
        g = subdivide_edge(g, u, v, times)
    return g.with_marks(marks)


class BuildTests(SimpleTestCase):
    def test_cubic_graph_is_all_black(self):
        m = build(complete_graph_k4())
        self.assertEqual(m.nodes, (0, 1, 2, 3))
        self.assertEqual(len(m.edges), 6)
        self.assertTrue(all(e.color is Color.BLACK and e.length is Length.NA for e in m.edges))
        self.assertTrue(all(m.is_black_star(x) for x in m.nodes))

    def test_orders_give_colors_and_lengths(self):
        g = subdivided(complete_graph_k4(), {(0, 1): 1, (0, 2): 2, (1, 3): 4, (2, 3): 5})
        kinds = {(e.u, e.v): (e.color, e.length, len(e.path)) for e in build(g).edges}
        self.assertEqual(kinds[(0, 1)], (Color.GREEN, Length.SHORT, 1))
        self.assertEqual(kinds[(0, 2)], (Color.RED, Length.SHORT, 2))
        self.assertEqual(kinds[(1, 3)], (Color.GREEN, Length.LONG, 4))
        self.assertEqual(kinds[(2, 3)], (Color.RED, Length.LONG, 5))
        self.assertEqual(kinds[(0, 3)][0], Color.BLACK)

    def test_paths_are_oriented_from_u(self):
        g = subdivided(complete_graph_k4(), {(0, 1): 2})
        edge = next(e for e in build(g).edges if e.color is Color.RED)
        self.assertTrue(g.has_edge(edge.u, edge.path[0]))
        self.assertTrue(g.has_edge(edge.path[-1], edge.v))

    def test_errors(self):
        with self.assertRaises(BadDegrees):
            build(path_graph(4))
        with self.assertRaises(BadTwoPathOrder):
            build(subdivided(complete_graph_k4(), {(0, 1): 3}))
        with self.assertRaises(DegreeTwoCycleComponent):
            build(MarkedGraph.from_edges(9, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                                             (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)]))
        with self.assertRaises(MarkedPathViolation):
            build(subdivided(complete_graph_k4(), {(0, 1): 1}, marks=[4]))
        self.assertIsNone(build_or_none(path_graph(4)))

    def test_long_edges_carry_one_mark(self):
        g = subdivided(complete_graph_k4(), {(0, 1): 5}, marks=[6])
        m = build(g)
        self.assertEqual(long_edge_findings(m), [
            {"edge": 0, "u": 0, "v": 1, "color": "red", "marked_position": 3},
        ])
        with self.assertRaises(MarkedPathViolation):
            build(g.with_marks([5]))

    @given(st.integers(min_value=0, max_value=10_000))
    @hsettings(max_examples=40, deadline=None)
    def test_expand_inverts_build(self, seed):
        rng = random.Random(seed)
        base = random_cubic(rng.choice((4, 6, 8, 10, 12)), seed=seed)
        plan = {e: rng.choice((1, 2, 4, 5)) for e in base.edges() if rng.random() < 0.5}
        g = subdivided(base, plan)
        long_interiors = [
            p.vertices[rng.randrange(p.order)]
            for p in maximal_two_paths(g)
            if p.order >= 4 and rng.random() < 0.5
        ]
        g = g.with_marks(long_interiors)
        self.assertEqual(expand(build(g)), g)


class FindingTests(SimpleTestCase):
    def test_simple_multigraph_has_no_findings(self):
        self.assertEqual(simplicity_findings(build(subdivided(complete_graph_k4(), {(0, 1): 1}))), [])

    def test_parallel_pairs(self):
        # black edge, green path 0-2-1 and red path 0-3-4-1 between nodes 0 and 1
        g = MarkedGraph.from_edges(5, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)])
        self.assertEqual(simplicity_findings(build(g)), [
            {"case": 2, "nodes": [0, 1], "edges": [0, 2]},
            {"case": 3, "nodes": [0, 1], "edges": [0, 1]},
            {"case": 6, "nodes": [0, 1], "edges": [1, 2]},
        ])

    def test_loops(self):
        # two red loops joined by a black edge
        g = MarkedGraph.from_edges(6, [(0, 1), (0, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 1)])
        m = build(g)
        self.assertEqual(simplicity_findings(m), [
            {"case": 1, "nodes": [0], "edges": [0]},
            {"case": 1, "nodes": [1], "edges": [2]},
        ])
        self.assertEqual(matching_findings(m)["red_violations"], [0, 1])
        self.assertEqual(expand(m), g)

    def test_matching_findings(self):
        m = build(star_prism())
        found = matching_findings(m)
        self.assertEqual(found["green_violations"], [])
        self.assertEqual(found["red_violations"], [])
        self.assertEqual(found["green_red_green"], [])
        self.assertEqual(sum(1 for e in m.edges if e.color is Color.GREEN), 3)

    def test_cycle_component_free_graph_only(self):
        self.assertIsNone(build_or_none(cycle_graph(6)))
