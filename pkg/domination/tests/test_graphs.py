import math
import tempfile
from pathlib import Path

import networkx as nx
from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from ..exceptions import (
    CycleSearchBudgetExceeded,
    Exhausted,
    InvalidGraph,
    MalformedHeader,
    NonCanonicalPadding,
    TruncatedBits,
)
from ..graphs import (
    INFINITE,
    MarkedGraph,
    complete_graph_k4,
    cube_graph,
    cycle_graph,
    cycle_report,
    cycles_of_length,
    degree_profile,
    excise,
    generalized_petersen,
    girth,
    graph6_decode,
    graph6_encode,
    has_cycle_of_length,
    heawood_graph,
    maximal_two_paths,
    path_graph,
    petersen_graph,
    random_cubic,
    random_subcubic_tree,
    read_graph6_file,
    shortest_cycle,
    subdivide_edge,
)
from .factories import random_marked_subcubic, write_graph6


class MarkedGraphTests(SimpleTestCase):
    def test_rejects_self_loop_parallel_edge_and_degree_four(self):
        with self.assertRaises(InvalidGraph):
            MarkedGraph.from_edges(2, [(0, 0)])
        with self.assertRaises(InvalidGraph):
            MarkedGraph.from_edges(2, [(0, 1), (1, 0)])
        with self.assertRaises(InvalidGraph):
            MarkedGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])

    def test_networkx_round_trip_keeps_marks(self):
        g = cycle_graph(5, marked=[1, 3])
        back = MarkedGraph.from_networkx(g.to_networkx(), marked=[1, 3])
        self.assertEqual(back, g)
        self.assertTrue(g.to_networkx().nodes[1]["marked"])

    def test_degree_profile(self):
        g = path_graph(4, marked=[0])
        profile = degree_profile(g)
        self.assertEqual((profile.markn, profile.n1, profile.n2, profile.n3, profile.n0), (1, 1, 2, 0, 0))
        self.assertEqual(profile.n, 4)

    def test_excise_relabels_and_marks(self):
        g = path_graph(5)
        h, remap = excise(g, remove=[1], mark=[2])
        self.assertEqual(remap, {0: 0, 2: 1, 3: 2, 4: 3})
        self.assertEqual(h.n, 4)
        self.assertTrue(h.is_marked(1))
        self.assertEqual(h.degree(0), 0)
        with self.assertRaises(InvalidGraph):
            excise(g, remove=[1], mark=[1])

    def test_maximal_two_paths(self):
        g = subdivide_edge(complete_graph_k4(), 0, 1, 3)
        paths = maximal_two_paths(g)
        self.assertEqual(len(paths), 1)
        self.assertEqual(paths[0].order, 3)
        self.assertEqual(set(paths[0].vertices), {4, 5, 6})
        self.assertEqual(set(paths[0].end_attachments), {0, 1})
        self.assertFalse(paths[0].is_cycle)

    def test_cycle_component_is_flagged(self):
        paths = maximal_two_paths(cycle_graph(5))
        self.assertEqual(len(paths), 1)
        self.assertTrue(paths[0].is_cycle)
        self.assertEqual(paths[0].vertices[0], 0)

    @given(st.integers(min_value=0, max_value=10_000))
    @hsettings(max_examples=40, deadline=None)
    def test_every_degree_two_vertex_is_on_exactly_one_two_path(self, seed):
        g = random_marked_subcubic(seed, subdivisions=3)
        seen = [v for p in maximal_two_paths(g) for v in p.vertices]
        self.assertEqual(sorted(seen), [v for v in g.vertices() if g.degree(v) == 2])


class Graph6Tests(SimpleTestCase):
    NAMED = (complete_graph_k4, cube_graph, petersen_graph, heawood_graph)

    def test_encode_matches_networkx(self):
        for make in self.NAMED:
            g = make()
            expected = nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()
            self.assertEqual(graph6_encode(g), expected, make.__name__)

    @given(st.integers(min_value=0, max_value=10_000))
    @hsettings(max_examples=50, deadline=None)
    def test_decode_agrees_with_networkx(self, seed):
        g = random_marked_subcubic(seed, mark_rate=0)
        text = nx.to_graph6_bytes(g.to_networkx()).decode("ascii")
        self.assertEqual(graph6_decode(text), g)
        self.assertEqual(MarkedGraph.from_networkx(nx.from_graph6_bytes(graph6_encode(g).encode())), g)

    def test_k3(self):
        self.assertEqual(graph6_decode("Bw"), cycle_graph(3))

    def test_marks_are_dropped(self):
        self.assertEqual(graph6_decode(graph6_encode(cycle_graph(6, marked=[0]))), cycle_graph(6))

    def test_errors(self):
        with self.assertRaises(MalformedHeader):
            graph6_decode("")
        with self.assertRaises(MalformedHeader):
            graph6_decode("C\x01")
        with self.assertRaises(TruncatedBits):
            graph6_decode("C")
        with self.assertRaises(NonCanonicalPadding):
            graph6_decode("C~~")
        with self.assertRaises(NonCanonicalPadding):
            graph6_decode("B@")

    def test_read_file_skips_blank_and_header_lines(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_graph6(tmp, "named.g6", [complete_graph_k4(), petersen_graph()])
            with path.open("a", encoding="ascii") as handle:
                handle.write("\n>>graph6<<\n")
            graphs = read_graph6_file(path)
        self.assertEqual(graphs, [complete_graph_k4(), petersen_graph()])

    def test_read_file_rejects_non_ascii_lines(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.g6"
            path.write_bytes(b"C~\n\xff\xfe\n")
            with self.assertRaises(MalformedHeader) as ctx:
                read_graph6_file(path)
        self.assertEqual(ctx.exception.details["line"], 2)

    def test_read_file_names_the_failing_line(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "short.g6"
            path.write_text("C~\nC~\nC\n", encoding="ascii")
            with self.assertRaises(TruncatedBits) as ctx:
                read_graph6_file(path)
        self.assertEqual(ctx.exception.details["line"], 3)


class CycleTests(SimpleTestCase):
    def test_girth_of_named_graphs(self):
        self.assertEqual(girth(complete_graph_k4()), 3)
        self.assertEqual(girth(cube_graph()), 4)
        self.assertEqual(girth(petersen_graph()), 5)
        self.assertEqual(girth(heawood_graph()), 6)
        self.assertEqual(girth(generalized_petersen(7, 2)), 5)

    def test_forest_has_infinite_girth(self):
        self.assertEqual(girth(random_subcubic_tree(15, seed=3)), INFINITE)
        self.assertTrue(math.isinf(girth(MarkedGraph.empty())))
        self.assertIsNone(cycle_report(path_graph(4), [4]).to_dict()["girth"])

    @given(st.integers(min_value=0, max_value=10_000))
    @hsettings(max_examples=50, deadline=None)
    def test_girth_matches_networkx(self, seed):
        g = random_marked_subcubic(seed, n_max=14)
        self.assertEqual(girth(g), nx.girth(g.to_networkx()))

    def test_shortest_cycle_is_a_cycle_of_girth_length(self):
        for make in (complete_graph_k4, cube_graph, petersen_graph, heawood_graph):
            g = make()
            cycle = shortest_cycle(g)
            self.assertEqual(len(cycle), girth(g))
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                self.assertTrue(g.has_edge(a, b))

    def test_cycle_counts(self):
        self.assertEqual(len(cycles_of_length(complete_graph_k4(), 3)), 4)
        self.assertEqual(len(cycles_of_length(complete_graph_k4(), 4)), 3)
        self.assertEqual(len(cycles_of_length(cube_graph(), 4)), 6)
        self.assertEqual(len(cycles_of_length(petersen_graph(), 5)), 12)
        self.assertEqual(len(cycles_of_length(heawood_graph(), 6)), 28)

    def test_cycles_are_canonical(self):
        for cycle in cycles_of_length(petersen_graph(), 5):
            self.assertEqual(cycle[0], min(cycle))
            self.assertLess(cycle[1], cycle[-1])

    def test_has_cycle_of_length(self):
        heawood = heawood_graph()
        self.assertFalse(has_cycle_of_length(heawood, 7))
        self.assertTrue(has_cycle_of_length(heawood, 8))
        self.assertFalse(has_cycle_of_length(complete_graph_k4(), 5))
        with self.assertRaises(ValueError):
            has_cycle_of_length(heawood, 2)

    def test_cycle_budget(self):
        with self.assertRaises(CycleSearchBudgetExceeded):
            cycles_of_length(heawood_graph(), 14, budget=10)

    def test_cycle_report(self):
        report = cycle_report(heawood_graph(), [4, 7, 8]).to_dict()
        self.assertEqual(report["girth"], 6)
        self.assertEqual(report["present_lengths"], [8])
        self.assertEqual(report["queried_lengths"], [4, 7, 8])


class GeneratorTests(SimpleTestCase):
    def test_random_cubic_is_deterministic_connected_and_cubic(self):
        a = random_cubic(16, seed=7)
        self.assertEqual(a, random_cubic(16, seed=7))
        self.assertTrue(a.is_cubic())
        self.assertEqual(len(a.components()), 1)

    def test_random_cubic_filters(self):
        g = random_cubic(12, seed=1, min_girth=4, forbidden={5})
        self.assertGreaterEqual(girth(g), 4)
        self.assertFalse(has_cycle_of_length(g, 5))

    def test_random_cubic_rejects_bad_orders(self):
        for n in (3, 7, 2):
            with self.assertRaises(ValueError):
                random_cubic(n, seed=0)

    def test_random_cubic_exhausts(self):
        # no cubic graph on 14 vertices has girth 7
        with self.assertRaises(Exhausted):
            random_cubic(14, seed=0, min_girth=7, max_attempts=5)

    def test_generalized_petersen(self):
        g = generalized_petersen(7, 2)
        self.assertEqual(g.n, 14)
        self.assertTrue(g.is_cubic())
        self.assertTrue(g.has_edge(7, 9))
        self.assertTrue(g.has_edge(0, 7))
        self.assertTrue(nx.is_isomorphic(generalized_petersen(5, 2).to_networkx(), nx.petersen_graph()))

    def test_random_subcubic_tree(self):
        tree = random_subcubic_tree(20, seed=4)
        self.assertEqual(tree.edge_count, 19)
        self.assertTrue(nx.is_tree(tree.to_networkx()))
        self.assertLessEqual(max(tree.degree(v) for v in tree.vertices()), 3)

    def test_subdivide_edge(self):
        g = subdivide_edge(complete_graph_k4(), 0, 1, 2)
        self.assertEqual(g.n, 6)
        self.assertFalse(g.has_edge(0, 1))
        self.assertTrue(g.has_edge(0, 4) and g.has_edge(4, 5) and g.has_edge(5, 1))
