from mvpoly.apps.am.jclose import j_close_check
from mvpoly.apps.cli.base import MVCommand
from mvpoly.apps.cli.reports import jclose_context
from mvpoly.apps.core.render import render_artifact
from mvpoly.apps.weyl.group import weyl_group


class Command(MVCommand):
    help = "Peel Gamma_j from Lambda_j and print the j-closeness certificate."

    def add_arguments(self, parser):
        parser.add_argument("--type", required=True, help="Built-in type, e.g. A3")
        parser.add_argument("--j", type=int, required=True)

    def run(self, *args, **options):
        datum = self.read_type(options["type"])
        group = weyl_group(datum)
        certificate = j_close_check(group, self.check_node(datum, options["j"]))
        self.stdout.write(render_artifact("report/jclose", jclose_context(group, certificate)), ending="")
