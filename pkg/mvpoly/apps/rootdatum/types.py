from dataclasses import dataclass
from enum import Enum

# Fundamental-weight coordinates: c_i = <alpha_i^vee, lambda>.
Weight = tuple[int, ...]

# Simple-coroot coordinates.
Coweight = tuple[int, ...]


class ClassicalKind(Enum):
    A = "A"
    C = "C"


class LatticeRole(Enum):
    WEIGHT = "weight"
    COWEIGHT = "coweight"


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix a_ij = <alpha_i^vee, alpha_j>, nodes numbered from 1."""

    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "CartanMatrix":
        return cls(tuple(tuple(int(a) for a in row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __call__(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class ClassicalCoords:
    """A vector in the classical coordinates of type A_{n-1} or C_n."""

    kind: ClassicalKind
    vector: tuple[int, ...]
