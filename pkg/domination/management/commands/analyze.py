from django.core.management.base import CommandError

from ...campaigns import analyze_graph, load_source
from ...utils import dumps, success_payload
from ..base import DominationCommand


class Command(DominationCommand):
    help = "Print the colored multigraph, path scores and cycle discharge of each input graph as JSON."

    def add_arguments(self, parser):
        parser.add_argument("--input", help="graph6 file, one graph per line")
        parser.add_argument("--dump-multigraph", action="store_true")
        parser.add_argument("--score-paths", action="store_true")
        parser.add_argument("--discharge", action="store_true")
        parser.add_argument("--max-steps", type=int, default=None, help="discharge loop step budget")

    def run(self, **options):
        if not options["input"]:
            raise CommandError("Pass --input", returncode=self.error_returncode)
        entries = [
            analyze_graph(source, dump_multigraph=options["dump_multigraph"], score_paths=options["score_paths"],
                          discharge=options["discharge"], max_steps=options["max_steps"])
            for source in load_source(options["input"])
        ]
        self.stdout.write(dumps(success_payload("Analysis finished", data={"graphs": entries})), ending="")
