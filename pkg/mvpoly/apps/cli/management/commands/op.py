from django.core.management.base import CommandError

from mvpoly.apps.am.operators import am
from mvpoly.apps.bz.validation import verify
from mvpoly.apps.cli.base import EXIT_NULL, MVCommand
from mvpoly.apps.cli.formats import emit_bz_json
from mvpoly.apps.cli.reports import am_context
from mvpoly.apps.core.exceptions import InvalidDatumError
from mvpoly.apps.core.render import render_artifact
from mvpoly.apps.crystal.operators import apply_e, apply_e_star, apply_f, apply_f_star
from mvpoly.apps.crystal.types import Route

OPERATORS = {
    "fj": apply_f,
    "ej": apply_e,
    "fjstar": apply_f_star,
    "ejstar": apply_e_star,
}


class Command(MVCommand):
    help = "Apply a crystal operator or AM_j to a BZ file and print the resulting BZ file."

    def add_arguments(self, parser):
        parser.add_argument("file", help="BZ file (JSON)")
        parser.add_argument("op", choices=[*OPERATORS, "am"])
        parser.add_argument("--j", type=int, required=True, help="Dynkin node, numbered from 1")
        parser.add_argument(
            "--route",
            choices=[route.value for route in Route],
            help="How f_j and e_j are computed (default: lusztig when simply laced)",
        )

    def run(self, *args, **options):
        M = self.read_datum(options["file"])
        j = self.check_node(M.group.datum, options["j"])
        route = Route(options["route"]) if options["route"] else None
        if not verify(M).valid:
            raise InvalidDatumError("The input BZ datum is not an MV polytope")

        if options["op"] == "am":
            report = am(M, j, route)
            self.stderr.write(render_artifact("report/am", {"am": am_context(report)}), ending="")
            result = report.output
        else:
            result = OPERATORS[options["op"]](M, j, route)
        if result is None:
            raise CommandError(f"{options['op']} with j = {j} is zero on this datum", returncode=EXIT_NULL)
        self.stdout.write(emit_bz_json(result), ending="")
