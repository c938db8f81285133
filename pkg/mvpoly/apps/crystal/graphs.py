import logging
from collections import deque
from collections.abc import Callable

from django.conf import settings

from mvpoly.apps.bz.datum import in_b_lambda, orbit_polytope, point_polytope, translate
from mvpoly.apps.bz.types import BZDatum
from mvpoly.apps.core.exceptions import CapExceededError, InvalidDatumError
from mvpoly.apps.kashiwara.types import StringDatum
from mvpoly.apps.rootdatum.types import Coweight
from mvpoly.apps.weyl.group import WeylGroup
from mvpoly.apps.weyl.types import ReducedWord

from .operators import f
from .types import CrystalElement, CrystalGraph, Route

logger = logging.getLogger(__name__)


def _node_cap(cap: int | None) -> int:
    return cap if cap is not None else getattr(settings, "MV_NODE_CAP", 100000)


def in_crystal(b: CrystalElement, lam: Coweight) -> bool:
    """Whether b, translated to top vertex lam, lies in B(lam)."""
    return in_b_lambda(translate(b.bz, lam), lam)


def _canonical_graph(
    group: WeylGroup,
    nodes: list[CrystalElement],
    edges: list[tuple[int, int, int]],
    root: CrystalElement,
    highest_weight: Coweight | None,
) -> CrystalGraph:
    order = sorted(range(len(nodes)), key=lambda k: nodes[k].sort_key())
    position = {old: new for new, old in enumerate(order)}
    sorted_nodes = [nodes[k] for k in order]
    sorted_edges = sorted((position[s], j, position[t]) for s, j, t in edges)
    return CrystalGraph(
        group=group,
        nodes=sorted_nodes,
        edges=sorted_edges,
        root=sorted_nodes.index(root),
        highest_weight=highest_weight,
    )


def _explore(
    group: WeylGroup,
    root: CrystalElement,
    expand: Callable[[CrystalElement], bool],
    accept: Callable[[CrystalElement], bool],
    route: Route | None,
    cap: int,
) -> tuple[list[CrystalElement], list[tuple[int, int, int]]]:
    index = {root: 0}
    nodes = [root]
    edges = []
    queue = deque([root])
    while queue:
        b = queue.popleft()
        if not expand(b):
            continue
        for j in group.nodes:
            c = f(b, j, route)
            if not accept(c):
                continue
            if c not in index:
                if len(nodes) >= cap:
                    logger.error(f"Crystal graph exceeded {cap} nodes")
                    raise CapExceededError(f"Crystal graph exceeded {cap} nodes")
                index[c] = len(nodes)
                nodes.append(c)
                queue.append(c)
            edges.append((index[b], j, index[c]))
    logger.info(f"Explored {len(nodes)} crystal elements of {group.datum!r}")
    return nodes, edges


def crystal_graph_lambda(
    group: WeylGroup,
    lam: Coweight,
    route: Route | None = None,
    cap: int | None = None,
) -> CrystalGraph:
    """B(lam): everything reachable from the point polytope at lam without leaving conv(W lam)."""
    lam = tuple(lam)
    if not group.datum.is_dominant(lam):
        raise InvalidDatumError(f"lambda = {lam} is not dominant")
    root = CrystalElement.from_bz(point_polytope(group, lam))

    nodes, edges = _explore(
        group,
        root,
        expand=lambda b: True,
        accept=lambda c: in_crystal(c, lam),
        route=route,
        cap=_node_cap(cap),
    )
    return _canonical_graph(group, nodes, edges, root, lam)


def binf_enumerate(
    group: WeylGroup,
    depth: int,
    route: Route | None = None,
    cap: int | None = None,
) -> CrystalGraph:
    """All stable MV polytopes reached from the point by at most depth lowering operators."""
    if depth < 0:
        raise InvalidDatumError("Depth must be non-negative")
    root = CrystalElement.from_bz(point_polytope(group, group.datum.zero()))

    nodes, edges = _explore(
        group,
        root,
        expand=lambda b: b.depth < depth,
        accept=lambda c: True,
        route=route,
        cap=_node_cap(cap),
    )
    return _canonical_graph(group, nodes, edges, root, None)


def lowest_element(group: WeylGroup, lam: Coweight) -> CrystalElement:
    """conv(W lam), the lowest element of B(lam)."""
    return CrystalElement.from_bz(orbit_polytope(group, lam))


def kashiwara_datum_by_iteration(
    M: BZDatum,
    word: ReducedWord,
    lam: Coweight,
    route: Route | None = None,
) -> tuple[StringDatum, BZDatum]:
    """
    Apply f_{i_1} as often as possible inside B(lam), then f_{i_2}, and so on.

    Returns the step counts and the final polytope (with top vertex lam).
    """
    current = CrystalElement.from_bz(M)
    counts = []
    for j in word:
        count = 0
        while True:
            lowered = f(current, j, route)
            if not in_crystal(lowered, lam):
                break
            current = lowered
            count += 1
        counts.append(count)
    return StringDatum(tuple(word), tuple(counts)), translate(current.bz, lam)
