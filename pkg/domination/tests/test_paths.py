from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from ..exceptions import GreenMatchingViolation, Unclassifiable
from ..graphs import MarkedGraph, complete_graph_k4, generalized_petersen, subdivide_edge
from ..multigraph import build
from ..paths import (
    ExtremityType,
    NeighborKind,
    PathAnnotation,
    Side,
    Strategy,
    Terminal,
    classify_extremity,
    classify_neighbor_edge,
    decompose,
    edge_share,
    excision_delta,
    find_max_paths,
    path_report,
    path_through,
    score_path,
    score_path_prose,
    score_reverse,
    score_reverse_prose,
    score_truncated,
    strategy_delta,
    strategy_excision,
    strategy_gadget,
)
from ..paths.extremity import undominated_by_excision
from ..rational import r12
from .factories import star_prism


@st.composite
def annotations(draw, lower_slack=0):
    """Annotations whose isthmus and detour counts fit in k-1 on both sides."""
    n_isthmus = draw(st.integers(0, 3))
    n_isthmus_p = draw(st.integers(0, 3))
    b_detour = draw(st.integers(0, 3))
    b_detour_p = draw(st.integers(0, 3))
    need = max(2 * n_isthmus + b_detour, 2 * n_isthmus_p + b_detour_p + lower_slack)
    return PathAnnotation(
        t1=draw(st.integers(0, 1)),
        t1p=draw(st.integers(0, 1)),
        k=1 + need + draw(st.integers(0, 4)),
        r_island=draw(st.integers(0, 3)),
        g_island=draw(st.integers(0, 3)),
        n_isthmus=n_isthmus,
        n_isthmus_p=n_isthmus_p,
        m_isthmus=draw(st.integers(0, 3)),
        b_detour=b_detour,
        b_detour_p=b_detour_p,
    )


def two_green_path() -> MarkedGraph:
    """Prism P(4, 1) with greens 0~1 and 2~6 joined by the black edge 1-2."""
    g = generalized_petersen(4, 1)
    g = subdivide_edge(g, 0, 1, 1)
    return subdivide_edge(g, 2, 6, 1)


class DecompositionTests(SimpleTestCase):
    def test_single_path(self):
        m = build(two_green_path())
        paths, cycles = find_max_paths(m)
        self.assertEqual(cycles, ())
        self.assertEqual(len(paths), 1)
        path = paths[0]
        self.assertEqual(path.nodes, (0, 1, 2, 6))
        self.assertEqual(path.k, 2)
        self.assertEqual(path.upper_nodes(), (1,))
        self.assertEqual(path.lower_nodes(), (2,))
        self.assertEqual(path_through(m, 6).nodes, (6, 2, 1, 0))
        self.assertIsNone(path_through(m, 3))

    def test_alternating_cycle(self):
        paths, cycles = find_max_paths(build(star_prism()))
        self.assertEqual(paths, ())
        self.assertEqual(len(cycles), 1)
        cycle = cycles[0]
        self.assertEqual(cycle.nodes, (0, 1, 2, 3, 4, 5))
        self.assertEqual((cycle.lower(1), cycle.upper(1)), (2, 3))

    def test_two_greens_at_a_node(self):
        g = subdivide_edge(subdivide_edge(complete_graph_k4(), 0, 1, 1), 0, 2, 1)
        with self.assertRaises(GreenMatchingViolation):
            decompose(build(g))

    def test_prefix(self):
        path = find_max_paths(build(two_green_path()))[0][0]
        prefix = path.prefix(3)
        self.assertEqual(prefix.nodes, (0, 1, 2))
        self.assertEqual(len(prefix.edges), 2)
        with self.assertRaises(ValueError):
            path.prefix(1)

    def test_report_shape(self):
        report = path_report(build(two_green_path()))
        self.assertEqual(len(report["paths"]), 1)
        self.assertEqual(report["paths"][0]["path"]["nodes"], [0, 1, 2, 6])
        self.assertEqual(report["cycles"], [])


def edge_between(m, u, v) -> int:
    return next(e.id for e in m.edges if {e.u, e.v} == {u, v})


class ClassificationTests(SimpleTestCase):
    def test_gadget_extremities(self):
        for t in ExtremityType:
            gadget = strategy_gadget(t)
            m = build(gadget.graph)
            path = path_through(m, gadget["u"])
            with self.subTest(t=t.value):
                self.assertEqual(path.nodes, (gadget["u"], gadget["x"]))
                self.assertIs(classify_extremity(m, path, gadget["u"]), t)

    def test_black_star_extremity_is_unclassifiable(self):
        m = build(two_green_path())
        path = path_through(m, 0)
        with self.assertRaises(Unclassifiable):
            classify_extremity(m, path, 0)
        with self.assertRaises(ValueError):
            classify_extremity(m, path, 1)

    def test_neighbor_edges_into_black_stars(self):
        m = build(two_green_path())
        path = path_through(m, 0)
        upper = classify_neighbor_edge(m, path, edge_between(m, 1, 5))
        self.assertEqual((upper.kind, upper.at, upper.upper, upper.far), (NeighborKind.SPECIAL_BLACK, 1, True, 5))
        lower = classify_neighbor_edge(m, path, edge_between(m, 2, 3))
        self.assertEqual((lower.kind, lower.at, lower.upper, lower.far), (NeighborKind.SPECIAL_BLACK, 2, False, 3))
        with self.assertRaises(ValueError):
            classify_neighbor_edge(m, path, path.edges[1])
        with self.assertRaises(ValueError):
            classify_neighbor_edge(m, path, edge_between(m, 0, 3))


class PathScoreTests(SimpleTestCase):
    def test_worked_example(self):
        self.assertEqual(score_path(PathAnnotation(t1p=1, k=3)), r12(2))

    def test_green_coefficient(self):
        a = PathAnnotation(k=2, g_island=1)
        self.assertEqual(score_path(a), r12(4))
        self.assertEqual(score_path_prose(a), r12(3))

    def test_reverse_swaps_sides(self):
        a = PathAnnotation(t1=1, k=4, n_isthmus=1, b_detour_p=2)
        self.assertEqual(score_reverse(a), score_path(a.reversed()))
        self.assertEqual(a.reversed().reversed(), a)

    @given(annotations())
    @hsettings(max_examples=10_000, deadline=None)
    def test_forward_and_reverse_sum_to_at_least_two(self, a):
        self.assertTrue(a.counting_holds())
        self.assertGreaterEqual(score_path(a) + score_reverse(a), r12(2))
        self.assertGreaterEqual(score_path_prose(a) + score_reverse_prose(a), r12(2))


class TruncatedScoreTests(SimpleTestCase):
    def test_special_red_at_upper_node(self):
        forward, _ = score_truncated(PathAnnotation(k=2), Terminal.SPECIAL_RED, Side.AT_UPPER)
        self.assertEqual(forward, r12(1))

    @given(annotations())
    @hsettings(max_examples=10_000, deadline=None)
    def test_upper_terminals(self, a):
        forward, reverse = score_truncated(a, Terminal.SPECIAL_RED, Side.AT_UPPER)
        self.assertGreaterEqual(forward + reverse, r12(0))
        forward, reverse = score_truncated(a, Terminal.SPECIAL_BLACK, Side.AT_UPPER)
        self.assertGreaterEqual(forward + reverse, r12(-1))

    @given(annotations(lower_slack=1))
    @hsettings(max_examples=10_000, deadline=None)
    def test_lower_terminals(self, a):
        self.assertTrue(a.counting_holds(lower_slack=1))
        for terminal in Terminal:
            forward, reverse = score_truncated(a, terminal, Side.AT_LOWER)
            self.assertGreaterEqual(forward + reverse, r12(1))


class StrategyTests(SimpleTestCase):
    def test_table(self):
        self.assertEqual(strategy_delta(ExtremityType.T1, Strategy.S1), r12(2))
        self.assertEqual(strategy_delta(ExtremityType.T1, Strategy.S2), r12(-1))
        self.assertEqual(strategy_delta("T3", "S2"), r12(0))

    def test_gadgets_reproduce_the_table(self):
        for t in ExtremityType:
            gadget = strategy_gadget(t)
            for s in Strategy:
                with self.subTest(t=t.value, s=s.value):
                    self.assertEqual(excision_delta(gadget, s), strategy_delta(t, s))
                    self.assertEqual(undominated_by_excision(gadget, s), set())

    def test_excisions_never_touch_the_kept_vertex(self):
        for t in ExtremityType:
            gadget = strategy_gadget(t)
            for s in Strategy:
                excision = strategy_excision(gadget, s)
                self.assertNotIn(excision.excluded, excision.remove | excision.mark)
                self.assertEqual(excision.alpha, len(excision.dominators))


class EdgeShareTests(SimpleTestCase):
    def test_island_shares_add_up(self):
        red = edge_share(NeighborKind.RED_ISLAND, removal={4, 5})
        self.assertEqual(red.f_upper * 3, r12(2))
        self.assertEqual(red.s_upper, frozenset({4, 5}))
        self.assertEqual(edge_share(NeighborKind.GREEN_ISLAND).f_lower * 4, r12(1))

    def test_isthmus(self):
        self.assertEqual(edge_share(NeighborKind.GREEN_ISTHMUS, upper_incidences=1, center=9).s_upper,
                         frozenset({9}))
        lower_only = edge_share(NeighborKind.RED_ISTHMUS, upper_incidences=0, removal={3})
        self.assertIsNone(lower_only.f_upper)
        self.assertEqual(lower_only.f_lower, r12("-3/2"))

    def test_black_detour(self):
        share = edge_share(NeighborKind.BLACK_DETOUR)
        self.assertEqual((share.f_upper, share.f_lower), (r12(0), r12(-1)))

    def test_special_edges_have_no_share(self):
        for kind in (NeighborKind.SPECIAL_RED, NeighborKind.SPECIAL_BLACK, NeighborKind.WELL_BEHAVED):
            with self.assertRaises(ValueError):
                edge_share(kind)
