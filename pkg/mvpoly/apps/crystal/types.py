from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import networkx as nx

from mvpoly.apps.bz.datum import bottom_vertex, is_stable_normal, stable_normalize
from mvpoly.apps.bz.types import BZDatum
from mvpoly.apps.core.exceptions import InvalidDatumError
from mvpoly.apps.rootdatum.types import Coweight
from mvpoly.apps.weyl.group import WeylGroup
from mvpoly.apps.weyl.types import ReducedWord


class Route(Enum):
    """How f_j and e_j are computed."""

    LUSZTIG = "lusztig"
    STRING = "string"


@dataclass(frozen=True)
class CrystalElement:
    """A stable MV polytope, stored with mu_{w_0} = 0."""

    bz: BZDatum

    def __post_init__(self):
        if not is_stable_normal(self.bz):
            raise InvalidDatumError("Crystal elements must be stable-normal (mu_w0 = 0)")

    @classmethod
    def from_bz(cls, M: BZDatum) -> "CrystalElement":
        return cls(stable_normalize(M))

    @property
    def group(self) -> WeylGroup:
        return self.bz.group

    @cached_property
    def weight(self) -> Coweight:
        """wt(b) = mu_e - mu_{w_0} = mu_e."""
        return bottom_vertex(self.bz)

    @property
    def depth(self) -> int:
        """Number of lowering operators separating b from the top element."""
        return -sum(self.weight)

    def sort_key(self) -> tuple:
        return (self.depth, self.bz.values)


@dataclass
class CrystalGraph:
    """
    Crystal elements with edges (source, j, target) meaning f_j(source) = target.

    Nodes are in canonical order: by depth, then by BZ values.
    """

    group: WeylGroup
    nodes: list[CrystalElement]
    edges: list[tuple[int, int, int]] = field(default_factory=list)
    root: int = 0
    highest_weight: Coweight | None = None
    word: ReducedWord | None = None

    def __len__(self) -> int:
        return len(self.nodes)

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(len(self.nodes)))
        for source, j, target in self.edges:
            graph.add_edge(source, target, key=j, color=j)
        return graph

    def sources(self) -> list[int]:
        graph = self.to_networkx()
        return [n for n in graph.nodes if graph.in_degree(n) == 0]

    def sinks(self) -> list[int]:
        graph = self.to_networkx()
        return [n for n in graph.nodes if graph.out_degree(n) == 0]

    def colors(self) -> set[int]:
        return {j for _, j, _ in self.edges}
