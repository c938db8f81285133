"""Reading and writing BZ files and crystal graphs."""

import json
from typing import Any

from mvpoly.apps.bz.datum import lusztig_datum
from mvpoly.apps.bz.types import BZDatum
from mvpoly.apps.core.render import RenderFormat, render_artifact
from mvpoly.apps.crystal.types import CrystalGraph
from mvpoly.apps.rootdatum.classical import chamber_name
from mvpoly.apps.weyl.types import ReducedWord

from .exceptions import BZFileError
from .serializers import BZFileSerializer


def parse_bz_json(text: str) -> BZDatum:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise BZFileError(f"Not valid JSON: {e}")
    serializer = BZFileSerializer(data=payload)
    if not serializer.is_valid():
        raise BZFileError(f"Invalid BZ file: {serializer.errors}", serializer.errors)
    return serializer.validated_data["datum"]


def bz_payload(M: BZDatum) -> dict[str, Any]:
    datum = M.group.datum
    entries = []
    for gamma, value in M.items():
        entry = {"key": gamma.key(), "value": value}
        if datum.kind is not None:
            entry["pretty"] = chamber_name(datum, gamma.weight)
        entries.append(entry)
    payload = {
        "cartan": datum.cartan.as_lists(),
        "labels": datum.kind.value if datum.kind else None,
        "entries": entries,
    }
    return BZFileSerializer(payload).data


def emit_bz_json(M: BZDatum) -> str:
    return json.dumps(bz_payload(M), indent=2) + "\n"


def parse_vector(text: str) -> tuple[int, ...]:
    """"1,1" or "(1, 1)" -> (1, 1)."""
    cleaned = text.strip().strip("()[]")
    try:
        return tuple(int(part) for part in cleaned.split(","))
    except ValueError:
        raise BZFileError(f"Malformed integer vector: {text!r}")


def _node_rows(graph: CrystalGraph, word: ReducedWord) -> list[dict[str, Any]]:
    return [
        {
            "id": index,
            "weight": list(b.weight),
            "lusztig": list(lusztig_datum(b.bz, word).n),
        }
        for index, b in enumerate(graph.nodes)
    ]


def graph_payload(graph: CrystalGraph, word: ReducedWord) -> dict[str, Any]:
    return {
        "type": graph.group.datum.name,
        "highest_weight": list(graph.highest_weight) if graph.highest_weight is not None else None,
        "word": list(word),
        "root": graph.root,
        "nodes": _node_rows(graph, word),
        "edges": [{"source": s, "target": t, "j": j} for s, j, t in graph.edges],
    }


def emit_graph_json(graph: CrystalGraph, word: ReducedWord) -> str:
    return json.dumps(graph_payload(graph, word), indent=2) + "\n"


def _fmt(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def emit_graph_dot(graph: CrystalGraph, word: ReducedWord) -> str:
    nodes = [
        {"id": row["id"], "lusztig": _fmt(row["lusztig"]), "weight": _fmt(row["weight"])}
        for row in _node_rows(graph, word)
    ]
    edges = [{"source": s, "target": t, "j": j} for s, j, t in graph.edges]
    return render_artifact(
        "graph/crystal",
        {
            "name": graph.group.datum.name or "crystal",
            "word": _fmt(word),
            "root": graph.root,
            "nodes": nodes,
            "edges": edges,
        },
        fmt=RenderFormat.DOT,
    )
