from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from ..discharge import (
    Artifact,
    ArtifactKind,
    CutStats,
    RuleId,
    ScorePair,
    Shade,
    StructureKind,
    Tiebreak,
    abstract_cycle,
    all_amber,
    apply_rules_fixpoint,
    attach_artifacts,
    baseline,
    black_ends,
    broad_link,
    choose_side,
    cut_family,
    cut_greens,
    cut_stats,
    derive_sets,
    discharge_report,
    fiber,
    find_cycles,
    fixpoint_lemmas,
    link_average,
    narrow_link,
    rule_lhs,
    structure_score,
    total_score,
)
from ..discharge.artifacts import Origin
from ..exceptions import InvalidCutEnds, NonTermination, UnknownCase
from ..multigraph import build
from ..rational import r12
from ..serializers import DischargeLogEntrySerializer
from .factories import random_cycle_config, star_prism


class ColoringTests(SimpleTestCase):
    def test_all_amber(self):
        coloring = all_amber(abstract_cycle(4))
        self.assertEqual(coloring.set_a, frozenset({0, 2, 4, 6}))
        self.assertEqual(coloring.changes, ())
        self.assertEqual(coloring.dotted, frozenset())

    def test_switching_a_green_creates_two_changes(self):
        cycle = abstract_cycle(4)
        coloring = all_amber(cycle).switched([1])
        self.assertEqual(coloring.shades[1], Shade.BLUE)
        self.assertEqual(coloring.changes, (0, 1))
        self.assertEqual(coloring.dotted, frozenset(black_ends(cycle, 0) + black_ends(cycle, 1)))
        self.assertEqual(coloring.dotted, frozenset({1, 2, 3, 4}))

    def test_shade_count_must_match(self):
        with self.assertRaises(ValueError):
            derive_sets(abstract_cycle(3), [Shade.AMBER])

    def test_black_ends_wrap(self):
        self.assertEqual(black_ends(abstract_cycle(5), 4), (9, 0))


class ScheduleTests(SimpleTestCase):
    def test_link_averages(self):
        self.assertEqual(link_average(True, True, 0), r12(5))
        self.assertEqual(link_average(True, False, 0), r12(-1))
        self.assertEqual(link_average(False, True, 0), r12(4))
        self.assertEqual(link_average(False, False, 0), r12("-1/2"))
        self.assertEqual(link_average(True, False, 1), r12("1/2"))
        self.assertEqual(link_average(True, True, 2), r12(1))
        self.assertEqual(link_average(False, True, 1), r12(0))

    def test_total_charges_color_changes(self):
        cycle = abstract_cycle(4)
        artifacts = [narrow_link(0, 5), fiber(2)]
        start = all_amber(cycle)
        self.assertEqual(total_score(start, artifacts), r12(4))
        self.assertEqual(baseline(start, artifacts), r12(4))
        switched = start.switched([1])
        # the fiber is dotted now and the link stays well colored
        self.assertEqual(total_score(switched, artifacts), r12("-9/2"))

    def test_artifact_validation(self):
        with self.assertRaises(ValueError):
            Artifact(ArtifactKind.FIBER, (1, 2))


class RuleFormTests(SimpleTestCase):
    CASES = [
        (RuleId.R1S, CutStats(bc_N=2), "9", True),
        (RuleId.R1S, CutStats(bc_N=2, f=1), "17/2", True),
        (RuleId.R3S, CutStats(bchd_N=1, fd=1), "9/2", True),
        (RuleId.R3S, CutStats(whd_N=1, fd=1), "9/2", True),
        (RuleId.R3S, CutStats(fd=2), "1", True),
        (RuleId.R3S, CutStats(bhd_N=1, bchd_N=1), "5/2", True),
        (RuleId.R3S, CutStats(whd_N=1, bchd_N=1), "8", True),
        (RuleId.R3S, CutStats(whd_N=1, ohd_B=1), "7/2", True),
        (RuleId.R3, CutStats(ohd_B=1, fd=1), "0", True),
        (RuleId.R2, CutStats(ohd_B=1, fd=1), "0", True),
        (RuleId.R2REFS, CutStats(cc_B=2), "-2", True),
        (RuleId.R2REF, CutStats(wc_B=1, cc_B=2), "-8", False),
        (RuleId.R3, CutStats(fd=1), "1/2", True),
    ]

    def test_tabulated_censuses(self):
        for rule, stats, lhs, applies in self.CASES:
            with self.subTest(rule=rule.value, stats=stats.to_dict()):
                verdict = rule_lhs(rule, stats)
                self.assertEqual(verdict.lhs, r12(lhs))
                self.assertEqual(verdict.applies, applies)

    def test_tiebreaks(self):
        self.assertEqual(rule_lhs(RuleId.R3, CutStats(ohd_B=1, fd=1)).tiebreak_reason, Tiebreak.DOTTED_FIBERS)
        self.assertEqual(rule_lhs(RuleId.R2, CutStats(wc_B=1, bhd_B=1, fd=1, ohd_B=1)).tiebreak_reason,
                         Tiebreak.SCORE)
        self.assertEqual(rule_lhs(RuleId.R2S, CutStats(wc_N=1, bhd_N=2)).tiebreak_reason,
                         Tiebreak.NONE)
        at_threshold = rule_lhs(RuleId.R2REFS, CutStats(wc_N=1, bc_N=0, cc_B=1))
        self.assertEqual(at_threshold.lhs, r12(-7))
        self.assertEqual(at_threshold.tiebreak_reason, Tiebreak.COLOR_CHANGES)

    def test_families(self):
        self.assertIs(RuleId.R2REFS.family, RuleId.R2)
        self.assertIs(RuleId.R1S.family, RuleId.R1)

    def test_negative_counts_are_rejected(self):
        with self.assertRaises(ValueError):
            CutStats(f=-1)


class CutTests(SimpleTestCase):
    def test_cut_greens_wrap(self):
        self.assertEqual(cut_greens(5, (3, 1)), (4, 0, 1))
        self.assertEqual(cut_greens(5, (0, 4)), (1, 2, 3, 4))

    def test_family_follows_changes(self):
        coloring = all_amber(abstract_cycle(6)).switched([1])
        self.assertIs(cut_family(coloring, (2, 4)), RuleId.R1)
        self.assertIs(cut_family(coloring, (0, 3)), RuleId.R3)
        self.assertIs(cut_family(coloring, (0, 1)), RuleId.R2)

    def test_invalid_ends(self):
        coloring = all_amber(abstract_cycle(4))
        for cut in ((1, 1), (0, 4), (-1, 2), "ab", None):
            with self.assertRaises(InvalidCutEnds):
                cut_stats(coloring, [], cut)
        with self.assertRaises(InvalidCutEnds):
            cut_stats(coloring, [], (0, 2), rule=RuleId.R2)

    def test_census_of_a_bad_narrow_pair(self):
        coloring = all_amber(abstract_cycle(8))
        artifacts = [narrow_link(6, 14), narrow_link(8, 0)]
        stats = cut_stats(coloring, artifacts, (0, 4), rule=RuleId.R1)
        self.assertEqual(stats.to_dict(), {"bc_N": 2})

    def test_hit_links_and_fibers(self):
        cycle = abstract_cycle(6)
        coloring = all_amber(cycle)
        # black 0 ends at 1 and 2; black 3 ends at 7 and 8
        artifacts = [broad_link(2, 9), fiber(7), narrow_link(10, 11)]
        stats = cut_stats(coloring, artifacts, (0, 3))
        self.assertEqual(stats.bh_B, 0)
        self.assertEqual(stats.bch_B, 0)
        self.assertEqual(stats.wch_B, 1)
        self.assertEqual(stats.f, 1)
        self.assertEqual(stats.total("wc"), 0)


class StructureScoreTests(SimpleTestCase):
    def test_isolated_3star(self):
        self.assertEqual(structure_score("isolated_3star", v1="A", v2="B", v3="A"), ScorePair.of(5, 6))
        self.assertEqual(structure_score("isolated_3star", v1="A", v2="B", v3="A*"), ScorePair.of(5, 2))
        self.assertEqual(structure_score("isolated_3star", v1="A", v2="A", v3="A"), ScorePair.of(4, -5))
        self.assertEqual(structure_score("isolated_3star", v1="B", v2="B", v3="B"), ScorePair.of(-5, 4))

    def test_red_island_is_mirrored(self):
        self.assertEqual(structure_score("red_island", u="A", v1="A", v2="A"), ScorePair.of(2, -1))
        self.assertEqual(structure_score("red_island", u="B", v1="B", v2="B"), ScorePair.of(-1, 2))
        self.assertEqual(structure_score("red_island", u="A*", v1="A", v2="A"), ScorePair.of(2, 0))

    def test_green_structures(self):
        self.assertEqual(structure_score(StructureKind.GREEN_ISLAND, u1="A", u2="B", v3="A", v4="B"),
                         ScorePair.of(1, 1))
        self.assertEqual(structure_score("green_isthmus", u1="A", u2="B"), ScorePair.of(1, 1))
        self.assertEqual(structure_score("green_isthmus", u1="A", u2="A"), ScorePair.of(1, -1))

    def test_links(self):
        self.assertEqual(structure_score("broad_link", x="A", y="B"), ScorePair.even(5))
        self.assertEqual(structure_score("narrow_link", x="A*", y="A"), ScorePair.even(0))
        self.assertEqual(structure_score("fiber", x="B*"), ScorePair.even("-1/2"))

    def test_unknown_cases(self):
        with self.assertRaises(UnknownCase):
            structure_score("hexagon", x="A")
        with self.assertRaises(UnknownCase):
            structure_score("fiber", y="A")
        with self.assertRaises(UnknownCase):
            structure_score("fiber", x="C")

    def test_score_pair_helpers(self):
        pair = ScorePair.of(5, 6)
        self.assertEqual(pair.average, r12("11/2"))
        self.assertEqual(str(pair), "[5 | 6]")
        self.assertTrue(pair.at_least(ScorePair.of(5, 5)))
        self.assertEqual(pair.swapped(), ScorePair.of(6, 5))


class ArtifactTests(SimpleTestCase):
    def test_isolated_3stars_on_a_prism(self):
        m = build(star_prism())
        (cycle,) = find_cycles(m)
        artifacts = attach_artifacts(m, cycle)
        self.assertEqual([(x.kind.value, x.extremities) for x in artifacts], [
            ("narrow_link", (0, 2)),
            ("fiber", (4,)),
            ("narrow_link", (1, 3)),
            ("fiber", (5,)),
        ])
        self.assertTrue(all(x.origin is Origin.ISOLATED_3STAR for x in artifacts))
        self.assertEqual(artifacts[0].group, (6,))

    def test_report(self):
        report = discharge_report(build(star_prism()))
        (entry,) = report["cycles"]
        self.assertEqual(len(entry["artifacts"]), 4)
        self.assertIn("fixpoint", entry)
        self.assertEqual([s["kind"] for s in entry["structures"]], ["isolated_3star", "isolated_3star"])


class FixpointTests(SimpleTestCase):
    def test_bad_narrow_pair_is_fixed_by_one_cut(self):
        cycle = abstract_cycle(8)
        artifacts = [narrow_link(6, 14), narrow_link(8, 0)]
        self.assertEqual(total_score(all_amber(cycle), artifacts), r12(-1))
        result = apply_rules_fixpoint(cycle, artifacts)
        first = result.log[0]
        self.assertEqual((first["rule"], first["cut"], first["lhs"]), ("R1", [0, 4], "9"))
        self.assertTrue(first["formula_applies"])
        self.assertEqual(total_score(result.coloring, artifacts), r12(0))

    def test_no_artifacts_means_no_switch(self):
        result = apply_rules_fixpoint(abstract_cycle(5), [])
        self.assertEqual(result.log, ())
        self.assertEqual(result.coloring.changes, ())

    def test_step_budget(self):
        with self.assertRaises(NonTermination):
            apply_rules_fixpoint(abstract_cycle(8), [narrow_link(6, 14), narrow_link(8, 0)], max_steps=0)

    @given(st.integers(min_value=0, max_value=100_000))
    @hsettings(max_examples=200, deadline=None)
    def test_fixpoint_properties(self, seed):
        cycle, artifacts = random_cycle_config(seed)
        start = all_amber(cycle)
        initial = total_score(start, artifacts)
        self.assertEqual(initial, baseline(start, artifacts))

        result = apply_rules_fixpoint(cycle, artifacts)
        for entry in result.log:
            checked = DischargeLogEntrySerializer(data=entry)
            self.assertTrue(checked.is_valid(), checked.errors)
        for before, after in zip(result.log, result.log[1:]):
            self.assertEqual(before["measure_after"], after["measure_before"])

        lemmas = fixpoint_lemmas(result.coloring, artifacts)
        self.assertTrue(lemmas["no_double_bad_links"], lemmas["witnesses"])
        self.assertTrue(lemmas["no_consecutive_changes"], lemmas["witnesses"])
        self.assertTrue(lemmas["no_change_hits_fiber"], lemmas["witnesses"])

        final = total_score(result.coloring, artifacts)
        self.assertGreaterEqual(final, initial)
        side = choose_side(result.coloring, artifacts)
        self.assertEqual(side["total"], final)
        if initial >= 0:
            self.assertGreaterEqual(side["total"], r12(0))
