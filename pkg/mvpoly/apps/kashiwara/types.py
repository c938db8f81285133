from dataclasses import dataclass

from mvpoly.apps.core.exceptions import InvalidDatumError
from mvpoly.apps.weyl.types import ReducedWord


@dataclass(frozen=True)
class StringDatum:
    """
    String (Kashiwara) datum p_1, ..., p_m along a reduced word of w_0.

    Entries may go negative while braid transitions are applied to an
    arbitrary vector; data extracted from a polytope are always >= 0.
    """

    word: ReducedWord
    p: tuple[int, ...]

    def __post_init__(self):
        if len(self.word) != len(self.p):
            raise InvalidDatumError(f"String datum length {len(self.p)} does not match word {self.word}")

    @property
    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.p)
