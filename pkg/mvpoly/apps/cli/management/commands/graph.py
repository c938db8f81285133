from mvpoly.apps.cli.base import MVCommand
from mvpoly.apps.cli.formats import emit_graph_dot, emit_graph_json, parse_vector
from mvpoly.apps.crystal.graphs import binf_enumerate, crystal_graph_lambda
from mvpoly.apps.crystal.types import Route
from mvpoly.apps.weyl.group import weyl_group


class Command(MVCommand):
    help = "Print the crystal graph of B(lambda), or of B(infinity) up to a depth, as DOT or JSON."

    def add_arguments(self, parser):
        parser.add_argument("--type", required=True, help="Built-in type, e.g. A2 or C3")
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument(
            "--lambda",
            dest="lam",
            help=(
                "Dominant coweight in simple-coroot coordinates, e.g. 1,1; "
                "a value starting with a minus sign needs the --lambda=-1,1 form"
            ),
        )
        source.add_argument(
            "--depth",
            type=int,
            help="Number of lowering operators from the top of B(infinity)",
        )
        parser.add_argument("--format", choices=["dot", "json"], default="dot")
        parser.add_argument(
            "--word",
            help="Reduced word of w0 for node labels (default: lexicographically least)",
        )
        parser.add_argument("--route", choices=[route.value for route in Route])

    def run(self, *args, **options):
        group = weyl_group(self.read_type(options["type"]))
        route = Route(options["route"]) if options["route"] else None
        if options["lam"] is not None:
            graph = crystal_graph_lambda(group, parse_vector(options["lam"]), route)
        else:
            graph = binf_enumerate(group, options["depth"], route)

        word = group.canonical_word
        if options["word"]:
            word = group.longest_path(parse_vector(options["word"])).word
        graph.word = word

        emit = emit_graph_dot if options["format"] == "dot" else emit_graph_json
        self.stdout.write(emit(graph, word), ending="")
