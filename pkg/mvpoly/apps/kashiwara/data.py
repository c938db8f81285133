"""String data of MV polytopes and reconstruction of BZ data from them."""

import logging
from collections import deque
from fractions import Fraction

from mvpoly.apps.bz.datum import in_b_lambda, top_vertex, vertex
from mvpoly.apps.bz.types import BZDatum
from mvpoly.apps.core.exceptions import (
    ConflictError,
    MVPolytopeError,
    NotInCrystalError,
    UnsupportedTypeError,
)
from mvpoly.apps.rootdatum.types import Coweight
from mvpoly.apps.rootdatum.vectors import add
from mvpoly.apps.weyl.group import WeylGroup
from mvpoly.apps.weyl.types import ChamberWeight, ReducedWord, WeylElement

from .transitions import braid_transition
from .types import StringDatum

logger = logging.getLogger(__name__)


def kashiwara_datum(M: BZDatum, word: ReducedWord) -> StringDatum:
    """
    p_k = M_{w_{k-1} Lambda_{i_k}} - M_{w_k Lambda_{i_k}} along the word.

    M must lie in B(lambda) for lambda its own top vertex.
    """
    lam = top_vertex(M)
    if not in_b_lambda(M, lam):
        raise NotInCrystalError(f"BZ datum is not in B(lambda) for its top vertex {lam}")
    path = M.group.longest_path(tuple(word))
    p = tuple(M[a] - M[b] for a, b in zip(path.incoming, path.outgoing))
    if any(x < 0 for x in p):
        raise NotInCrystalError(f"Negative string datum {p} along {path.word}")
    return StringDatum(path.word, p)


def midpoint_height(M: BZDatum, w: WeylElement, i: int) -> Fraction:
    """1/2 <mu_w + mu_{w s_i}, w . alpha_i>."""
    group = M.group
    u = group.times_simple_right(w, i)
    w_alpha = w.act_weight(group.datum.simple_root(i))
    total = add(vertex(M, w), vertex(M, u))
    return Fraction(group.datum.pair(total, w_alpha), 2)


def _assign(known: dict[ChamberWeight, int], gamma: ChamberWeight, value: int) -> None:
    previous = known.get(gamma)
    if previous is None:
        known[gamma] = value
    elif previous != value:
        logger.error(f"String reconstruction conflict at {gamma}: {previous} and {value}")
        raise ConflictError(f"Conflicting values for M at {gamma.key()}: {previous} != {value}")


def _absorb(group: WeylGroup, p: StringDatum, known: dict[ChamberWeight, int]) -> None:
    """Walk the word, recovering M at each outgoing chamber weight."""
    path = group.longest_path(p.word)
    for incoming, outgoing, step in zip(path.incoming, path.outgoing, p.p):
        _assign(known, outgoing, known[incoming] - step)


def string_to_bz(
    group: WeylGroup,
    p: StringDatum,
    mu_e: Coweight,
    check: bool = False,
) -> BZDatum:
    """
    The BZ datum with string datum p and bottom vertex mu_e.

    M_{Lambda_i} = <mu_e, Lambda_i> anchors the recursion; p is carried to
    neighbouring reduced words by braid transitions until every chamber
    weight has a value. With check=True every reduced word is visited.
    """
    datum = group.datum
    if any(datum.braid_order(i, j) > 4 for i in group.nodes for j in group.nodes):
        raise UnsupportedTypeError(f"No string transitions for {datum!r}")

    known: dict[ChamberWeight, int] = {}
    for i in group.nodes:
        _assign(known, group.fundamental_chamber(i), mu_e[i - 1])
    _absorb(group, p, known)

    target = len(group.chamber_weights)
    queue = deque([p])
    seen = {p.word}
    while queue and (check or len(known) < target):
        current = queue.popleft()
        for neighbor, move in group.braid_neighbors(current.word):
            if neighbor in seen and not check:
                continue
            moved = braid_transition(datum, current, move)
            _absorb(group, moved, known)
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(moved)

    if len(known) < target:
        raise MVPolytopeError(f"String reconstruction covered only {len(known)} of {target} chamber weights")
    return BZDatum.from_mapping(group, known)
