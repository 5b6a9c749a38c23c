import csv
import json
import tempfile
from fractions import Fraction
from io import StringIO
from pathlib import Path

from django.core.cache import cache
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from rest_framework import serializers

from ..campaigns import Filters, load_source, recheck_violation, run_campaign
from ..graphs import complete_graph_k4, cycle_graph, graph6_encode, heawood_graph, petersen_graph
from ..reductions import trace_from_payload
from ..serializers import GenSpecSerializer
from ..solver import cache_key
from ..utils import set_cache
from .factories import p72, star_prism, write_graph6


def run(name, **options):
    """call_command with captured streams; returns (stdout, stderr, returncode)."""
    out, err = StringIO(), StringIO()
    try:
        call_command(name, stdout=out, stderr=err, **options)
        code = 0
    except CommandError as exc:
        code = exc.returncode
    return out.getvalue(), err.getvalue(), code


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        cache.clear()
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.dir = Path(self.tmp.name)


class SolveCommandTests(CommandTestCase):
    def test_k4(self):
        out, _, code = run("solve", graph6=graph6_encode(complete_graph_k4()))
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertTrue(payload["success"])
        self.assertEqual(payload["message"], "gamma = 1")
        self.assertEqual(payload["data"]["n"], 4)
        self.assertEqual(payload["data"]["size"], 1)
        self.assertTrue(payload["data"]["optimal"])

    def test_bad_graph6(self):
        _, err, code = run("solve", graph6="C")
        self.assertEqual(code, 3)
        self.assertEqual(json.loads(err)["error"], "truncated_bits")


class VerifyCommandTests(CommandTestCase):
    def test_violation_exits_one_and_writes_reports(self):
        source = write_graph6(self.dir, "p72.g6", [p72()])
        report = self.dir / "out" / "p72.json"
        out, _, code = run("verify", input=str(source), report=str(report))
        self.assertEqual(code, 1)
        summary = json.loads(out)["data"]["summary"]
        self.assertEqual(summary["violations"], ["p72.g6:1"])
        self.assertEqual(summary["max_gamma_ratio"], "5/14")

        written = json.loads(report.read_text())
        record = written["data"]["records"][0]
        self.assertEqual(record["id"], "p72.g6:1")
        self.assertEqual((record["gamma"], record["n"]), (5, 14))
        self.assertIs(record["bound_holds"], False)
        self.assertIsNone(record["runtime_ms"])
        self.assertIn(7, record["forbidden_hits"])
        with report.with_suffix(".csv").open() as handle:
            rows = list(csv.DictReader(handle))
        self.assertEqual(rows[0]["id"], "p72.g6:1")
        self.assertIn("7", rows[0]["forbidden_hits"].split(";"))

    def test_bipartite_filter(self):
        source = write_graph6(self.dir, "mixed.g6", [petersen_graph(), heawood_graph()])
        out, _, code = run("verify", input=str(source), bipartite=True)
        self.assertEqual(code, 0)
        summary = json.loads(out)["data"]["summary"]
        self.assertEqual((summary["count"], summary["filtered"]), (1, 1))

    def test_budget_only_exits_two(self):
        source = write_graph6(self.dir, "p72.g6", [p72()])
        out, _, code = run("verify", input=str(source), budget=1)
        self.assertEqual(code, 2)
        self.assertEqual(json.loads(out)["data"]["summary"]["budget_flagged"], ["p72.g6:1"])

    def test_bound_option(self):
        source = write_graph6(self.dir, "p72.g6", [p72()])
        self.assertEqual(run("verify", input=str(source), bound="5/14")[2], 0)
        _, err, code = run("verify", input=str(source), bound="abc")
        self.assertEqual(code, 3)
        self.assertEqual(json.loads(err)["message"], "Invalid options")

    def test_generated_corpus(self):
        out, _, code = run("verify", gen="n=6,count=3,seed=5", timings=True)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["data"]["summary"]["count"], 3)

    def test_source_errors(self):
        self.assertEqual(run("verify")[2], 3)
        _, err, code = run("verify", input=str(self.dir / "missing.g6"))
        self.assertEqual(code, 3)
        self.assertEqual(json.loads(err)["error"], "empty_source")
        empty = self.dir / "empty.g6"
        empty.write_text("\n")
        self.assertEqual(run("verify", input=str(empty))[2], 3)
        self.assertEqual(run("verify", gen="n=7,count=1")[2], 3)

    def test_non_ascii_input_exits_three(self):
        source = self.dir / "bad.g6"
        source.write_bytes(b"C~\n\xff\xfe\n")
        _, err, code = run("verify", input=str(source))
        self.assertEqual(code, 3)
        self.assertEqual(json.loads(err)["error"], "malformed_header")


class CampaignTests(CommandTestCase):
    def test_gen_spec(self):
        self.assertEqual(GenSpecSerializer.parse("n=10, count=2"), {"n": 10, "count": 2, "seed": 0})
        for text in ("n=7,count=1", "n=2,count=1", "n=10,count=0", "n10"):
            with self.subTest(text=text), self.assertRaises(serializers.ValidationError):
                GenSpecSerializer.parse(text)

    def test_generated_ids_follow_the_seed(self):
        sources = load_source(gen={"n": 8, "count": 2, "seed": 4})
        self.assertEqual([s.id for s in sources], ["gen-n8-s4", "gen-n8-s5"])
        self.assertEqual([s.index for s in sources], [0, 1])

    def test_campaign_is_deterministic_across_job_counts(self):
        gen = {"n": 10, "count": 4, "seed": 3}
        serial = run_campaign(load_source(gen=gen), jobs=1)
        again = run_campaign(load_source(gen=gen), jobs=1)
        parallel = run_campaign(load_source(gen=gen), jobs=2)
        self.assertEqual(serial.to_dict(), again.to_dict())
        self.assertEqual(serial.records, parallel.records)

    def test_generated_batch_stays_under_the_minimum_degree_bound(self):
        sources = load_source(gen={"n": 16, "count": 150, "seed": 7})
        report = run_campaign(sources, bound=Fraction(3, 8), jobs=1)
        self.assertEqual(len(report.records), 150)
        self.assertTrue(all(r["optimal"] for r in report.records))
        self.assertEqual(report.violations, [])
        self.assertEqual(report.budget_flagged, [])
        self.assertEqual(report.exit_code, 0)
        self.assertLessEqual(Fraction(report.summary["max_gamma_ratio"]), Fraction(3, 8))

    def test_filters_record_reasons(self):
        source = write_graph6(self.dir, "mixed.g6", [complete_graph_k4(), heawood_graph()])
        report = run_campaign(load_source(source), filters=Filters(min_girth=5), jobs=1)
        self.assertEqual([r["id"] for r in report.records], ["mixed.g6:2"])
        self.assertEqual(report.filtered[0]["filtered"], "girth below 5")

    def test_recheck_violation(self):
        source = write_graph6(self.dir, "p72.g6", [p72()])
        report = run_campaign(load_source(source), jobs=1)
        (record,) = report.violations
        self.assertTrue(recheck_violation(record, p72()))
        self.assertFalse(recheck_violation(record, p72(), bound=Fraction(5, 14)))
        self.assertFalse(recheck_violation({**record, "witness": record["witness"][1:]}, p72()))
        self.assertIs(record["rechecked"], True)

    def test_stale_cached_violation_is_flagged_not_reported(self):
        k4 = complete_graph_k4()
        set_cache(cache_key(k4), {"size": 2, "set": [0, 1]})
        source = write_graph6(self.dir, "k4.g6", [k4])
        report = run_campaign(load_source(source), jobs=1)
        (record,) = report.records
        self.assertEqual(record["gamma"], 2)
        self.assertIs(record["rechecked"], False)
        self.assertIsNone(record["bound_holds"])
        self.assertEqual(report.violations, [])
        self.assertEqual(report.summary["unconfirmed"], ["k4.g6:1"])
        self.assertEqual(report.exit_code, 2)

    def test_stale_cached_violation_exits_two(self):
        k4 = complete_graph_k4()
        set_cache(cache_key(k4), {"size": 2, "set": [0, 1]})
        source = write_graph6(self.dir, "k4.g6", [k4])
        out, _, code = run("verify", input=str(source))
        self.assertEqual(code, 2)
        self.assertEqual(json.loads(out)["data"]["summary"]["violations"], [])


class ReduceCommandTests(CommandTestCase):
    def test_cycle_is_emptied_with_a_trace(self):
        source = write_graph6(self.dir, "c9.g6", [cycle_graph(9)])
        traces = self.dir / "traces"
        out, _, code = run("reduce", input=str(source), trace_dir=str(traces))
        self.assertEqual(code, 0)
        (record,) = json.loads(out)["data"]["records"]
        self.assertEqual(record["id"], "c9.g6:1")
        self.assertTrue(record["emptied"])
        self.assertEqual(record["residual_graph6"], "")
        self.assertEqual(record["certificate"]["size"], 3)
        self.assertEqual(record["certificate"]["weight"], 45)
        self.assertTrue(record["certificate"]["holds"])

        trace_path = Path(record["trace_path"])
        self.assertEqual(trace_path, traces / "00000.json")
        trace = trace_from_payload(json.loads(trace_path.read_text())["data"])
        self.assertEqual(len(trace), record["steps"])

    def test_residual_is_reported(self):
        source = write_graph6(self.dir, "k4.g6", [complete_graph_k4()])
        out, _, code = run("reduce", input=str(source), order="R-unmarked-leaf")
        self.assertEqual(code, 0)
        (record,) = json.loads(out)["data"]["records"]
        self.assertFalse(record["emptied"])
        self.assertEqual(record["residual_n"], 4)
        self.assertIsNone(record["certificate"])

    def test_unknown_rule(self):
        source = write_graph6(self.dir, "c9.g6", [cycle_graph(9)])
        self.assertEqual(run("reduce", input=str(source), order="R-nope")[2], 3)


class AnalyzeCommandTests(CommandTestCase):
    def test_full_analysis(self):
        source = write_graph6(self.dir, "prism.g6", [star_prism()])
        out, _, code = run("analyze", input=str(source), dump_multigraph=True, score_paths=True, discharge=True)
        self.assertEqual(code, 0)
        (entry,) = json.loads(out)["data"]["graphs"]
        self.assertEqual(entry["n"], 11)
        self.assertIn("multigraph", entry)
        self.assertEqual(entry["findings"]["simplicity"], [])
        self.assertEqual(entry["paths"]["paths"], [])
        (cycle,) = entry["discharge"]["cycles"]
        self.assertEqual(len(cycle["artifacts"]), 4)

    def test_multigraph_errors_stay_in_the_entry(self):
        source = write_graph6(self.dir, "c6.g6", [cycle_graph(6)])
        out, _, code = run("analyze", input=str(source), dump_multigraph=True)
        self.assertEqual(code, 0)
        (entry,) = json.loads(out)["data"]["graphs"]
        self.assertEqual(entry["multigraph_error"]["code"], "degree_two_cycle_component")

    def test_plain_entry(self):
        source = write_graph6(self.dir, "k4.g6", [complete_graph_k4()])
        (entry,) = json.loads(run("analyze", input=str(source))[0])["data"]["graphs"]
        self.assertEqual(entry["weight"]["total"], 16)
        self.assertNotIn("multigraph", entry)

    def test_requires_input(self):
        self.assertEqual(run("analyze")[2], 3)
