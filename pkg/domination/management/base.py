import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from ..exceptions import DominationError, error_payload
from ..utils import dumps, failure_payload


logger = logging.getLogger(__name__)


class DominationCommand(BaseCommand):
    """
    Base for the app's commands.

    Subclasses implement ``run(**options)``. Validation and domain errors
    are printed to stderr in the failure envelope and re-raised as
    ``CommandError`` (exit status 3).
    """

    error_returncode = 3

    def add_source_arguments(self, parser, gen: bool = True):
        parser.add_argument("--input", help="graph6 file, one graph per line")
        if gen:
            parser.add_argument("--gen", help="generator spec n=N,count=C,seed=S")
        parser.add_argument("--jobs", type=int, default=None, help="worker processes")

    def handle(self, *args, **options):
        try:
            return self.run(**options)
        except serializers.ValidationError as exc:
            self.stderr.write(dumps(failure_payload("Invalid options", errors=exc.detail)))
            raise CommandError("Invalid options", returncode=self.error_returncode)
        except DominationError as exc:
            logger.error("%s failed: %s", self.__module__.rsplit(".", 1)[-1], exc.message)
            self.stderr.write(dumps(error_payload(exc)))
            raise CommandError(exc.message, returncode=self.error_returncode) from exc

    def run(self, **options):
        raise NotImplementedError
