from dataclasses import dataclass, field
from enum import Enum

from mvpoly.apps.rootdatum.types import Coweight, Weight

# Letters are node indices, numbered from 1.
ReducedWord = tuple[int, ...]


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class WeylElement:
    """
    A Weyl group element, identified by the images w.Lambda_i of the
    fundamental weights.

    The coweight images w.alpha_i^vee and the stored reduced word are carried
    along but do not take part in equality.
    """

    weight_images: tuple[Weight, ...]
    coweight_images: tuple[Coweight, ...] = field(compare=False, repr=False)
    word: ReducedWord = field(compare=False, default=())

    @property
    def length(self) -> int:
        return len(self.word)

    def act_weight(self, lam: Weight) -> Weight:
        total = [0] * len(lam)
        for c, image in zip(lam, self.weight_images):
            if c:
                for k, x in enumerate(image):
                    total[k] += c * x
        return tuple(total)

    def act_coweight(self, mu: Coweight) -> Coweight:
        total = [0] * len(mu)
        for m, image in zip(mu, self.coweight_images):
            if m:
                for k, x in enumerate(image):
                    total[k] += m * x
        return tuple(total)


@dataclass(frozen=True, order=True)
class ChamberWeight:
    """A chamber weight w.Lambda_i; ordered by (level, weight coordinates)."""

    level: int
    weight: Weight

    def key(self) -> str:
        return f"L{self.level}:" + ",".join(str(c) for c in self.weight)


@dataclass(frozen=True)
class BraidMove:
    """Substitution of the alternating block (i, j, ...) of length d starting at position."""

    position: int
    letters: tuple[int, int]
    length: int


@dataclass(frozen=True)
class WordPath:
    """
    The path e = w_0, w_1, ..., w_m through W cut out by a reduced word.

    incoming[k] = w_{k} . Lambda_{i_{k+1}} and outgoing[k] = w_{k+1} . Lambda_{i_{k+1}}
    for k = 0, ..., m-1 (positions counted from 0).
    """

    word: ReducedWord
    prefixes: tuple[WeylElement, ...]
    incoming: tuple[ChamberWeight, ...]
    outgoing: tuple[ChamberWeight, ...]
