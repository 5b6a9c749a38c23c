from ...campaigns import solve_graph6
from ...utils import dumps, success_payload
from ..base import DominationCommand


class Command(DominationCommand):
    help = "Print a minimum marked dominating set of one graph6 string."

    def add_arguments(self, parser):
        parser.add_argument("--graph6", required=True)
        parser.add_argument("--budget", type=int, default=None)

    def run(self, **options):
        result = solve_graph6(options["graph6"], budget=options["budget"])
        self.stdout.write(dumps(success_payload(f"gamma = {result['size']}", data=result)), ending="")
