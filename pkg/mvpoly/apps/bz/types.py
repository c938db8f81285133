from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum

from mvpoly.apps.core.exceptions import InvalidDatumError
from mvpoly.apps.rootdatum.types import Coweight
from mvpoly.apps.weyl.group import WeylGroup
from mvpoly.apps.weyl.types import ChamberWeight, ReducedWord, WeylElement


@dataclass(frozen=True)
class BZDatum:
    """
    An integer M_gamma for every chamber weight gamma.

    Values are stored in the canonical order of group.chamber_weights, so two
    data over the same group are equal exactly when their value tuples are.
    """

    group: WeylGroup = field(repr=False)
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.group.chamber_weights):
            raise InvalidDatumError(
                f"BZ datum needs {len(self.group.chamber_weights)} values, got {len(self.values)}"
            )

    @classmethod
    def from_mapping(cls, group: WeylGroup, mapping: Mapping[ChamberWeight, int]) -> "BZDatum":
        """Build a datum from a map that must be total on Gamma and nothing more."""
        missing = [g for g in group.chamber_weights if g not in mapping]
        if missing:
            raise InvalidDatumError(f"BZ datum is missing {len(missing)} chamber weights, e.g. {missing[0]}")
        extra = [g for g in mapping if g not in group.chamber_index]
        if extra:
            raise InvalidDatumError(f"{extra[0]} is not a chamber weight")
        return cls(group, tuple(int(mapping[g]) for g in group.chamber_weights))

    @classmethod
    def constant(cls, group: WeylGroup, value: int) -> "BZDatum":
        return cls(group, (value,) * len(group.chamber_weights))

    def __getitem__(self, gamma: ChamberWeight) -> int:
        return self.values[self.group.chamber_index[gamma]]

    def at(self, w: WeylElement, i: int) -> int:
        """M_{w . Lambda_i}."""
        return self[self.group.chamber(w, i)]

    def items(self) -> Iterator[tuple[ChamberWeight, int]]:
        return zip(self.group.chamber_weights, self.values)

    def as_dict(self) -> dict[ChamberWeight, int]:
        return dict(self.items())

    def replace(self, changes: Mapping[ChamberWeight, int]) -> "BZDatum":
        merged = self.as_dict()
        merged.update(changes)
        return BZDatum.from_mapping(self.group, merged)


@dataclass(frozen=True)
class GGMSDatum:
    """The vertices mu_w of a pseudo-Weyl polytope, keyed by the images of w."""

    group: WeylGroup = field(repr=False)
    vertices: dict = field(compare=False)

    def __getitem__(self, w: WeylElement) -> Coweight:
        return self.vertices[w.weight_images]


@dataclass(frozen=True)
class LusztigDatum:
    """Edge lengths n_1, ..., n_m along the path of a reduced word of w_0."""

    word: ReducedWord
    n: tuple[int, ...]

    def __post_init__(self):
        if len(self.word) != len(self.n):
            raise InvalidDatumError(f"Lusztig datum length {len(self.n)} does not match word {self.word}")
        if any(x < 0 for x in self.n):
            raise InvalidDatumError(f"Lusztig datum must be non-negative: {self.n}")


@dataclass(frozen=True)
class EdgeViolation:
    element: WeylElement
    node: int
    length: int


@dataclass
class EdgeReport:
    """Outcome of checking n(w, i) >= 0 for every (w, i)."""

    checked: int = 0
    violations: list[EdgeViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class PluckerStatus(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class PluckerResult:
    """The tropical Pluecker relation at (w, i, j) with both sides when evaluated."""

    element: WeylElement
    i: int
    j: int
    status: PluckerStatus
    lhs: int | None = None
    rhs: int | None = None


@dataclass
class VerificationReport:
    """Everything checked when deciding whether a BZ datum is an MV polytope."""

    edges: EdgeReport
    plucker: list[PluckerResult] = field(default_factory=list)
    string_consistent: bool | None = None
    string_error: str | None = None

    @property
    def plucker_failures(self) -> list[PluckerResult]:
        return [r for r in self.plucker if r.status == PluckerStatus.FAILS]

    @property
    def unsupported_count(self) -> int:
        return sum(1 for r in self.plucker if r.status == PluckerStatus.UNSUPPORTED)

    @property
    def valid(self) -> bool:
        return self.edges.ok and not self.plucker_failures and self.string_consistent is not False
