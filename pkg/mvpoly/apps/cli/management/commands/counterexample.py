from mvpoly.apps.am.counterexample import counterexample
from mvpoly.apps.cli.base import MVCommand
from mvpoly.apps.cli.reports import counterexample_context
from mvpoly.apps.core.exceptions import ConflictError
from mvpoly.apps.core.render import render_artifact


class Command(MVCommand):
    help = "Recompute the Sp6 polytope on which AM_1 is not an MV polytope."

    def add_arguments(self, parser):
        parser.add_argument("--x", type=int, default=2, help="Height of the polytope along e_3 (at least 2)")

    def run(self, *args, **options):
        report = counterexample(options["x"])
        self.stdout.write(render_artifact("report/counterexample", counterexample_context(report)), ending="")
        if not report.reproduced:
            raise ConflictError("Recomputed values differ from the closed forms")
