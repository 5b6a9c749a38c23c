"""
Verify gamma(G) <= bound * n over a corpus of cubic graphs.

    python manage.py verify --input cubic14.g6 --bound 1/3 --report out/c14.json
    python manage.py verify --gen n=20,count=100,seed=1 --min-girth 5 --jobs 4

Exit status: 0 when every record holds and none hit the solver budget,
1 when a violation survives its recheck, 2 when only budget-degraded or
unconfirmed records remain.
"""
from django.core.management.base import CommandError

from ...campaigns import EXIT_OK, Filters, load_source, run_campaign, write_campaign_report
from ...serializers import GenSpecSerializer, VerifyOptionsSerializer
from ...utils import dumps, success_payload
from ..base import DominationCommand


class Command(DominationCommand):
    help = "Run a domination bound campaign over graph6 input or seeded random cubic graphs."

    def add_arguments(self, parser):
        self.add_source_arguments(parser)
        parser.add_argument("--min-girth", type=int, default=3)
        parser.add_argument("--forbid", default="", help="comma separated forbidden cycle lengths")
        parser.add_argument("--bipartite", action="store_true")
        parser.add_argument("--any-degree", action="store_true", help="do not require cubic input")
        parser.add_argument("--bound", default="1/3")
        parser.add_argument("--budget", type=int, default=None, help="solver node budget per graph")
        parser.add_argument("--report", default=None, help="JSON report path; a CSV is written next to it")
        parser.add_argument("--timings", action="store_true", help="record runtime_ms per graph")

    def run(self, **options):
        if not options["input"] and not options["gen"]:
            raise CommandError("Pass --input or --gen", returncode=self.error_returncode)
        checked = VerifyOptionsSerializer(data={
            "min_girth": options["min_girth"],
            "forbid": options["forbid"],
            "bipartite": options["bipartite"],
            "cubic": not options["any_degree"],
            "bound": options["bound"],
            "budget": options["budget"],
            "jobs": options["jobs"],
        })
        checked.is_valid(raise_exception=True)
        values = checked.validated_data
        filters = Filters(min_girth=values["min_girth"], forbidden=values["forbid"],
                          bipartite=values["bipartite"], cubic=values["cubic"])
        gen = GenSpecSerializer.parse(options["gen"]) if options["gen"] else None
        sources = load_source(options["input"], gen=gen, filters=filters)
        report = run_campaign(sources, filters=filters, bound=values["bound"], budget=values["budget"],
                              jobs=values["jobs"], timings=options["timings"])
        if options["report"]:
            json_path, csv_path = write_campaign_report(report, options["report"])
            self.stderr.write(f"Wrote {json_path} and {csv_path}")
        self.stdout.write(dumps(success_payload("Campaign finished", data={"summary": report.summary})),
                          ending="")
        if report.exit_code != EXIT_OK:
            raise CommandError(
                f"{len(report.violations)} violations, {len(report.budget_flagged)} budget-degraded records, "
                f"{len(report.unconfirmed)} unconfirmed",
                returncode=report.exit_code,
            )
