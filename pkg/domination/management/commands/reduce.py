"""
Reduce every graph of a graph6 file to its fixpoint.

    python manage.py reduce --input trees.g6 --order default --trace-dir traces/
"""
from django.core.management.base import CommandError

from ...campaigns import load_source, run_reduce
from ...reductions.engine import resolve_order
from ...utils import dumps, success_payload
from ..base import DominationCommand


class Command(DominationCommand):
    help = "Apply the reduction catalog to each input graph and write one trace per graph."

    def add_arguments(self, parser):
        self.add_source_arguments(parser, gen=False)
        parser.add_argument("--order", default="default",
                            help="'default' or comma separated rule ids in priority order")
        parser.add_argument("--trace-dir", default=None)
        parser.add_argument("--strict", action="store_true", help="enforce each rule's claim preconditions")

    def run(self, **options):
        if not options["input"]:
            raise CommandError("Pass --input", returncode=self.error_returncode)
        order = None if options["order"] == "default" else [r.strip() for r in options["order"].split(",") if r.strip()]
        try:
            resolve_order(order)
        except KeyError as exc:
            raise CommandError(f"Unknown rule id {exc.args[0]}", returncode=self.error_returncode)
        sources = load_source(options["input"])
        records = run_reduce(sources, order=order, trace_dir=options["trace_dir"],
                             strict=options["strict"], jobs=options["jobs"])
        emptied = sum(1 for r in records if r["emptied"])
        payload = success_payload(f"Reduced {len(records)} graphs, {emptied} emptied", data={"records": records})
        self.stdout.write(dumps(payload), ending="")
