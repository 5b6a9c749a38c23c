from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from ..exceptions import InvalidMatch, LiftFailure
from ..graphs import (
    MarkedGraph,
    complete_graph_k4,
    cycle_graph,
    path_graph,
    random_subcubic_tree,
    subdivide_edge,
)
from ..reductions import (
    Contract,
    Match,
    Recipe,
    apply,
    catalog,
    detect,
    measure,
    reduce_fixpoint,
    replay,
    rule_by_id,
    rule_ids,
    trace_from_payload,
    trace_to_payload,
    verify_recipe,
)
from ..solver import is_md_set
from ..weights import DOMINATOR_COST, contract_check, graph_weight
from .factories import (
    RULE_GADGETS,
    random_marked_subcubic,
    rule_gadget,
    two_green_ten_cycle,
    whiskered_cycle,
)


class CatalogTests(SimpleTestCase):
    def test_ids_are_unique_and_contracts_sound(self):
        ids = rule_ids()
        self.assertEqual(len(ids), len(set(ids)))
        for rule in catalog():
            self.assertTrue(rule.contract.sound, rule.id)

    def test_families(self):
        families = {rule.family for rule in catalog()}
        self.assertEqual(families, {"local", "multigraph", "structural", "endgame"})
        self.assertEqual(catalog("local")[0].id, "R-marked-isolated")

    def test_rule_by_id(self):
        self.assertEqual(rule_by_id("R-unmarked-leaf").contract, Contract(1, 12))
        with self.assertRaises(KeyError):
            rule_by_id("R-nope")

    def test_contract_label(self):
        self.assertEqual(Contract(2, 25).label(), "alpha=2, beta=25")
        self.assertEqual(Contract(0, 0, alpha_per=1, beta_per=12).label(), "alpha=ell, beta=12ell")
        self.assertFalse(Contract(1, 11).sound)


class VerifyRecipeTests(SimpleTestCase):
    def test_leaf_recipe(self):
        g = path_graph(3)
        recipe = Recipe.build(remove=[0, 1], mark=[2], dominators=[1]).with_contract(1, 12)
        checked = verify_recipe(g, recipe)
        self.assertTrue(checked.ok)
        self.assertEqual(checked.beta_actual, 17)
        self.assertLess(measure(checked.h), measure(g))

    def test_problems_are_reported(self):
        g = path_graph(3)
        bad = Recipe.build(remove=[0, 1], mark=[2], dominators=[2]).with_contract(1, 12)
        self.assertIn("not dominated", " ".join(verify_recipe(g, bad).problems))
        short = Recipe.build(remove=[0, 1], mark=[2], dominators=[1]).with_contract(1, 30)
        self.assertFalse(verify_recipe(g, short).ok)
        outside = Recipe.build(remove=[7]).with_contract(0, 0)
        self.assertFalse(verify_recipe(g, outside).ok)
        miscount = Recipe.build(remove=[0, 1], mark=[2], dominators=[1]).with_contract(2, 24)
        self.assertFalse(verify_recipe(g, miscount).ok)

    def test_unmark_degree_three(self):
        g = complete_graph_k4().with_marks([0])
        rule = rule_by_id("R-unmark-deg3")
        match = detect(rule, g)
        self.assertEqual(match["v"], 0)
        h, step = apply(rule, g, match)
        self.assertFalse(h.marked_vertices())
        self.assertEqual(step.beta_actual, 0)


class DetectApplyTests(SimpleTestCase):
    def test_smallest_binding_is_detected(self):
        g = MarkedGraph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
        match = detect(rule_by_id("R-unmarked-leaf"), g)
        self.assertEqual((match["u"], match["v"]), (0, 1))

    def test_apply_rejects_a_foreign_binding(self):
        rule = rule_by_id("R-unmarked-leaf")
        with self.assertRaises(InvalidMatch):
            apply(rule, path_graph(4), Match.of("R-unmarked-leaf", u=0, v=2))

    def test_strict_detection_checks_preconditions(self):
        g = complete_graph_k4()
        for rule in catalog("multigraph") + catalog("structural"):
            self.assertIsNone(detect(rule, g, strict=True), rule.id)

    @given(st.integers(min_value=0, max_value=10_000))
    @hsettings(max_examples=25, deadline=None)
    def test_every_detected_match_honours_its_contract(self, seed):
        g = random_marked_subcubic(seed, n_max=12, subdivisions=3)
        for rule in catalog():
            match = detect(rule, g)
            if match is None:
                continue
            h, step = apply(rule, g, match)
            self.assertGreaterEqual(step.beta_actual, step.recipe.beta_claimed, rule.id)
            self.assertGreaterEqual(step.beta_actual, DOMINATOR_COST * step.recipe.alpha, rule.id)
            verdict = contract_check(g, h, step.recipe.alpha, step.recipe.dominators, remap=step.remap)
            self.assertTrue(verdict.valid, (rule.id, match.as_dict(), verdict.to_dict()))


class RuleGadgetTests(SimpleTestCase):
    """Every rule fires on its own configuration and the step survives the exact oracle."""

    def assert_fires(self, rule_id, g):
        rule = rule_by_id(rule_id)
        match = detect(rule, g)
        self.assertIsNotNone(match, rule_id)
        h, step = apply(rule, g, match)
        self.assertTrue(verify_recipe(g, step.recipe).ok, rule_id)
        self.assertGreaterEqual(step.beta_actual, step.recipe.beta_claimed, rule_id)
        verdict = contract_check(g, h, step.recipe.alpha, step.recipe.dominators, remap=step.remap)
        self.assertTrue(verdict.oracle_checked, rule_id)
        self.assertTrue(verdict.valid, (rule_id, match.as_dict(), verdict.to_dict()))

    def assert_family_fires(self, family, seed):
        for rule in catalog(family):
            self.assert_fires(rule.id, rule_gadget(rule.id, seed))

    def test_every_rule_has_a_gadget(self):
        self.assertEqual(set(RULE_GADGETS), set(rule_ids()))

    @given(st.integers(min_value=0, max_value=2**32 - 1))
    @hsettings(max_examples=50, deadline=None)
    def test_local_rules_fire(self, seed):
        self.assert_family_fires("local", seed)

    @given(st.integers(min_value=0, max_value=2**32 - 1))
    @hsettings(max_examples=50, deadline=None)
    def test_multigraph_rules_fire(self, seed):
        self.assert_family_fires("multigraph", seed)

    @given(st.integers(min_value=0, max_value=2**32 - 1))
    @hsettings(max_examples=50, deadline=None)
    def test_structural_rules_fire(self, seed):
        self.assert_family_fires("structural", seed)

    @given(st.integers(min_value=0, max_value=2**32 - 1))
    @hsettings(max_examples=50, deadline=None)
    def test_endgame_rules_fire(self, seed):
        self.assert_family_fires("endgame", seed)

    def test_subdivided_k4_loses_its_3_path(self):
        g = subdivide_edge(complete_graph_k4(), 0, 1, 3)
        rule = rule_by_id("R-2path-3")
        match = detect(rule, g)
        self.assertEqual(sorted(match["path"]), [4, 5, 6])
        h, step = apply(rule, g, match)
        self.assertEqual(step.recipe.dominators, frozenset({5}))
        self.assertEqual(step.beta_actual, 13)
        self.assertEqual((h.n, len(h.edges())), (4, 5))
        self.assertEqual(sorted(h.degree(v) for v in h.vertices()), [2, 2, 3, 3])

    def test_girth_ten_is_left_to_the_final_rule(self):
        rule = rule_by_id("R-girth-1mod3")
        for marked in (False, True):
            self.assertEqual(list(rule.candidates(whiskered_cycle(10, marked))), [])
            self.assertIsNotNone(detect(rule, whiskered_cycle(13, marked)))

    def test_absorbed_red_paths_raise_alpha(self):
        g = two_green_ten_cycle("red-beyond", with_p=True).graph()
        rule = rule_by_id("R-10cycle-stars")
        matches = list(rule.candidates(g))
        self.assertLessEqual({1, 2}, {match.ell for match in matches})
        for match in (match for match in matches if match.ell == 2):
            recipe = rule.recipe(g, match)
            self.assertEqual(recipe.alpha, 4 + match.ell)
            self.assertEqual(len(recipe.dominators), recipe.alpha)
            self.assertTrue(verify_recipe(g, recipe).ok, match.as_dict())

    def test_ten_cycle_rules_need_their_exit(self):
        black = rule_gadget("R-10cycle-greens-black", 0)
        self.assertIsNotNone(detect(rule_by_id("R-10cycle-greens-black"), black))
        self.assertIsNone(detect(rule_by_id("R-10cycle-greens-red"), black))
        red = rule_gadget("R-10cycle-greens-red", 0)
        self.assertIsNone(detect(rule_by_id("R-10cycle-greens-black"), red))
        self.assertIsNotNone(detect(rule_by_id("R-10cycle-greens-red"), red))


class FixpointTests(SimpleTestCase):
    def test_nine_cycle_is_emptied(self):
        g = cycle_graph(9)
        residual, trace = reduce_fixpoint(g)
        self.assertEqual(residual.n, 0)
        self.assertEqual([step.rule_id for step in trace.steps], ["R-cycle-component"])
        lifted = replay(g, trace)
        self.assertEqual(lifted.size, 3)
        self.assertLessEqual(DOMINATOR_COST * lifted.size, graph_weight(g).total)

    @given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=30))
    @hsettings(max_examples=40, deadline=None)
    def test_trees_reduce_to_nothing_with_a_weight_certificate(self, seed, n):
        g = random_subcubic_tree(n, seed)
        residual, trace = reduce_fixpoint(g)
        self.assertEqual(residual.n, 0)
        lifted = replay(g, trace)
        self.assertTrue(is_md_set(g, lifted.vertices))
        self.assertLessEqual(lifted.size, trace.total_alpha)
        self.assertLessEqual(DOMINATOR_COST * lifted.size, graph_weight(g).total)

    @given(st.integers(min_value=0, max_value=10_000))
    @hsettings(max_examples=25, deadline=None)
    def test_measure_decreases_along_the_trace(self, seed):
        g = random_marked_subcubic(seed, n_max=12, subdivisions=2)
        _, trace = reduce_fixpoint(g)
        current = g
        for step in trace.steps:
            nxt, _ = apply(rule_by_id(step.rule_id), current, step.match)
            self.assertLess(measure(nxt), measure(current))
            current = nxt

    def test_max_steps(self):
        _, trace = reduce_fixpoint(random_subcubic_tree(20, seed=1), max_steps=2)
        self.assertEqual(len(trace), 2)

    def test_custom_order(self):
        g = path_graph(5)
        residual, trace = reduce_fixpoint(g, order=["R-unmarked-isolated"])
        self.assertEqual(residual, g)
        self.assertEqual(len(trace), 0)


class ReplayTests(SimpleTestCase):
    def test_payload_rebuilds_the_same_trace(self):
        g = random_subcubic_tree(18, seed=11)
        residual, trace = reduce_fixpoint(g)
        rebuilt = trace_from_payload(trace_to_payload(trace))
        self.assertEqual(rebuilt.original, g)
        self.assertEqual([s.recipe for s in rebuilt.steps], [s.recipe for s in trace.steps])
        self.assertEqual(replay(g, rebuilt).vertices, replay(g, trace).vertices)

    def test_lift_failure(self):
        g = path_graph(5)
        _, trace = reduce_fixpoint(g, order=["R-unmarked-isolated"])
        with self.assertRaises(LiftFailure):
            replay(g, trace)

    def test_tampered_payload_is_rejected(self):
        _, trace = reduce_fixpoint(path_graph(3))
        payload = trace_to_payload(trace)
        payload["steps"][0]["dominators"] = []
        with self.assertRaises(InvalidMatch):
            trace_from_payload(payload)
