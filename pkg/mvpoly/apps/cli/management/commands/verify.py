from mvpoly.apps.bz.validation import verify
from mvpoly.apps.cli.base import MVCommand
from mvpoly.apps.cli.reports import verify_context
from mvpoly.apps.core.exceptions import InvalidDatumError
from mvpoly.apps.core.render import render_artifact


class Command(MVCommand):
    help = "Check the edge inequalities and tropical Pluecker relations of a BZ file."

    def add_arguments(self, parser):
        parser.add_argument("file", help="BZ file (JSON)")

    def run(self, *args, **options):
        M = self.read_datum(options["file"])
        report = verify(M)
        self.stdout.write(render_artifact("report/verify", verify_context(M, report)), ending="")
        if not report.valid:
            raise InvalidDatumError("The BZ datum is not an MV polytope")
