from fractions import Fraction

from django.core.cache import cache
from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from ..exceptions import MarkedInput
from ..graphs import (
    MarkedGraph,
    complete_graph_k4,
    cube_graph,
    cycle_graph,
    generalized_petersen,
    heawood_graph,
    path_graph,
    petersen_graph,
)
from ..solver import cache_key, cached_mdom, is_md_set, mdom_exact, verify_third_bound
from .factories import brute_force_mdom, random_marked_subcubic


class IsMdSetTests(SimpleTestCase):
    def test_marked_vertices_need_no_domination(self):
        g = path_graph(3, marked=[0, 2])
        self.assertFalse(is_md_set(g, []))
        self.assertTrue(is_md_set(g, [0]))
        self.assertTrue(is_md_set(path_graph(3, marked=[0, 1, 2]), []))

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            is_md_set(path_graph(3), [3])


class MdomExactTests(SimpleTestCase):
    def test_cycles(self):
        for n in range(3, 25):
            witness = mdom_exact(cycle_graph(n))
            self.assertEqual(witness.size, -(-n // 3), n)
            self.assertTrue(witness.optimal)
            self.assertTrue(is_md_set(cycle_graph(n), witness.vertices))

    def test_named_graphs(self):
        self.assertEqual(mdom_exact(complete_graph_k4()).size, 1)
        self.assertEqual(mdom_exact(cube_graph()).size, 2)
        self.assertEqual(mdom_exact(petersen_graph()).size, 3)
        self.assertEqual(mdom_exact(heawood_graph()).size, 4)
        self.assertEqual(mdom_exact(generalized_petersen(7, 2)).size, 5)

    def test_all_marked_and_empty(self):
        self.assertEqual(mdom_exact(cycle_graph(6, marked=range(6))).size, 0)
        self.assertEqual(mdom_exact(MarkedGraph.empty()).size, 0)

    @given(st.integers(min_value=0, max_value=10_000))
    @hsettings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, seed):
        g = random_marked_subcubic(seed, n_max=10, mark_rate=0.3)
        witness = mdom_exact(g)
        self.assertTrue(witness.optimal)
        self.assertTrue(is_md_set(g, witness.vertices))
        self.assertEqual(witness.size, len(witness.vertices))
        self.assertEqual(witness.size, brute_force_mdom(g))

    def test_budget_exhaustion_returns_valid_incumbent(self):
        g = generalized_petersen(7, 2)
        witness = mdom_exact(g, budget=1)
        self.assertFalse(witness.optimal)
        self.assertTrue(is_md_set(g, witness.vertices))
        self.assertGreaterEqual(witness.size, 5)

    def test_witness_to_dict(self):
        data = mdom_exact(complete_graph_k4()).to_dict()
        self.assertEqual(data["size"], 1)
        self.assertEqual(len(data["set"]), 1)
        self.assertTrue(data["optimal"])


class CachedMdomTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_second_call_is_served_from_cache(self):
        g = petersen_graph()
        first = cached_mdom(g)
        self.assertGreater(first.nodes, 0)
        second = cached_mdom(g)
        self.assertEqual(second.nodes, 0)
        self.assertEqual(second.size, first.size)
        self.assertEqual(second.vertices, first.vertices)

    def test_key_depends_on_marks(self):
        self.assertNotEqual(cache_key(cycle_graph(6)), cache_key(cycle_graph(6, marked=[0])))

    def test_degraded_results_are_not_cached(self):
        g = generalized_petersen(7, 2)
        self.assertFalse(cached_mdom(g, budget=1).optimal)
        self.assertTrue(cached_mdom(g).optimal)


class ThirdBoundTests(SimpleTestCase):
    def setUp(self):
        cache.clear()

    def test_counterexample_and_cage(self):
        verdict = verify_third_bound(generalized_petersen(7, 2))
        self.assertFalse(verdict.holds)
        self.assertEqual((verdict.gamma, verdict.n), (5, 14))
        self.assertTrue(verify_third_bound(heawood_graph()).holds)

    def test_other_bounds(self):
        self.assertTrue(verify_third_bound(generalized_petersen(7, 2), bound=Fraction(5, 14)).holds)

    def test_marked_input_is_rejected(self):
        with self.assertRaises(MarkedInput):
            verify_third_bound(cycle_graph(6, marked=[0]))
