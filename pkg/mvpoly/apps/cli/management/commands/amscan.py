from mvpoly.apps.am.scan import am_scan, am_scan_lusztig
from mvpoly.apps.cli.base import MVCommand
from mvpoly.apps.cli.reports import scan_context
from mvpoly.apps.core.render import render_artifact
from mvpoly.apps.weyl.group import weyl_group


class Command(MVCommand):
    help = "Compare AM_j with f_j on every enumerated stable MV polytope."

    def add_arguments(self, parser):
        parser.add_argument("--type", required=True, help="Built-in type, e.g. A3 or C3")
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--depth", type=int, help="Scan B(infinity) up to this depth")
        source.add_argument(
            "--lusztig-bound",
            type=int,
            help="Scan Lusztig data with entry sum at most this bound (simply-laced types)",
        )
        parser.add_argument("--j", type=int, action="append", help="Node to scan; repeat for several")
        parser.add_argument("--show", type=int, default=5, help="Number of failures to print")
        parser.add_argument("--workers", type=int, help="Threads for the scan (default: MV_SCAN_WORKERS)")

    def run(self, *args, **options):
        datum = self.read_type(options["type"])
        group = weyl_group(datum)
        js = [self.check_node(datum, j) for j in options["j"] or []]
        if options["depth"] is not None:
            summary = am_scan(group, options["depth"], js, workers=options["workers"])
        else:
            summary = am_scan_lusztig(group, options["lusztig_bound"], js, workers=options["workers"])
        self.stdout.write(render_artifact("report/scan", scan_context(summary, options["show"])), ending="")
