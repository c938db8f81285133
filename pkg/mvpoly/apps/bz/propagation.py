"""
Rebuilding a BZ datum from a Lusztig datum in simply-laced types.

The path vertices determine M along one reduced word; every 3-braid move
then determines exactly one new value through the tropical Pluecker
relation, and the braid graph on reduced words of w_0 is connected.
"""

import logging
from collections import deque

from mvpoly.apps.core.exceptions import ConflictError, MVPolytopeError, UnsupportedTypeError
from mvpoly.apps.rootdatum.types import Coweight
from mvpoly.apps.rootdatum.vectors import add, scale
from mvpoly.apps.weyl.group import WeylGroup
from mvpoly.apps.weyl.types import ChamberWeight

from .types import BZDatum, LusztigDatum

logger = logging.getLogger(__name__)


def _assign(known: dict[ChamberWeight, int], gamma: ChamberWeight, value: int) -> None:
    previous = known.get(gamma)
    if previous is None:
        known[gamma] = value
    elif previous != value:
        logger.error(f"Conflicting values for M at {gamma}: {previous} and {value}")
        raise ConflictError(f"Conflicting values for M at {gamma.key()}: {previous} != {value}")


def bz_from_lusztig(
    group: WeylGroup,
    lusztig: LusztigDatum,
    mu_e: Coweight,
    check: bool = False,
) -> BZDatum:
    """
    The unique BZ datum with the given Lusztig datum and bottom vertex mu_e.

    With check=True every reduced word is visited, so every derivation of
    every value is compared; otherwise the search stops once Gamma is covered.
    """
    datum = group.datum
    if not datum.is_simply_laced:
        raise UnsupportedTypeError(f"Lusztig propagation needs a simply-laced type, got {datum!r}")

    path = group.longest_path(lusztig.word)
    known: dict[ChamberWeight, int] = {}

    mu = tuple(mu_e)
    for k, w in enumerate(path.prefixes):
        for i in group.nodes:
            gamma = group.chamber(w, i)
            _assign(known, gamma, datum.pair(mu, gamma.weight))
        if k < len(lusztig.word):
            letter = lusztig.word[k]
            mu = add(mu, scale(lusztig.n[k], w.coweight_images[letter - 1]))

    target = len(group.chamber_weights)
    queue = deque([path.word])
    seen = {path.word}
    while queue and (check or len(known) < target):
        word = queue.popleft()
        prefixes = group.path(word).prefixes
        for neighbor, move in group.braid_neighbors(word):
            if move.length == 3:
                i, j = move.letters
                w = prefixes[move.position]
                wi = group.times_simple_right(w, i)
                wj = group.times_simple_right(w, j)
                wij = group.times_simple_right(wi, j)
                wji = group.times_simple_right(wj, i)
                value = (
                    min(
                        known[group.chamber(w, i)] + known[group.chamber(wij, j)],
                        known[group.chamber(wji, i)] + known[group.chamber(w, j)],
                    )
                    - known[group.chamber(wi, i)]
                )
                _assign(known, group.chamber(wj, j), value)
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)

    if len(known) < target:
        raise MVPolytopeError(f"Propagation covered only {len(known)} of {target} chamber weights")
    logger.debug(f"Propagated Lusztig datum {lusztig.n} through {len(seen)} reduced words")
    return BZDatum.from_mapping(group, known)
