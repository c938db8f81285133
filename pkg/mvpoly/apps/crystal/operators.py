"""
Crystal operators on stable MV polytopes.

f_j keeps every vertex mu_w with s_j w < w and moves mu_e down by alpha_j^vee.
Two independent computations are available: through the Lusztig datum of a
reduced word starting with j (simply-laced types only), and through the
string datum after embedding the polytope into some B(lambda).
"""

import logging

from mvpoly.apps.bz.datum import (
    bottom_vertex,
    in_b_lambda,
    lusztig_datum,
    negate,
    top_vertex,
    translate,
    vertex,
)
from mvpoly.apps.bz.propagation import bz_from_lusztig
from mvpoly.apps.bz.types import BZDatum, LusztigDatum
from mvpoly.apps.core.exceptions import NotInCrystalError, UnsupportedTypeError
from mvpoly.apps.kashiwara.data import kashiwara_datum, string_to_bz
from mvpoly.apps.kashiwara.embedding import embed, phi
from mvpoly.apps.kashiwara.types import StringDatum
from mvpoly.apps.rootdatum.types import Coweight
from mvpoly.apps.rootdatum.vectors import add, sub
from mvpoly.apps.weyl.group import WeylGroup

from .types import CrystalElement, Route

logger = logging.getLogger(__name__)


def default_route(group: WeylGroup) -> Route:
    return Route.LUSZTIG if group.datum.is_simply_laced else Route.STRING


def _resolve(group: WeylGroup, route: Route | None) -> Route:
    route = route or default_route(group)
    if route == Route.LUSZTIG and not group.datum.is_simply_laced:
        raise UnsupportedTypeError(f"The Lusztig route needs a simply-laced type, got {group.datum!r}")
    return route


def _is_top_for(b: CrystalElement, j: int) -> bool:
    """e_j b = 0 iff mu_e = mu_{s_j}."""
    group = b.group
    s_j = group.times_simple_left(j, group.identity)
    return b.weight == vertex(b.bz, s_j)


# Lusztig route


def _shift_first(b: CrystalElement, j: int, step: int) -> CrystalElement | None:
    group = b.group
    word = group.word_starting_with(j)
    n = lusztig_datum(b.bz, word).n
    if n[0] + step < 0:
        return None
    shifted = LusztigDatum(word, (n[0] + step,) + n[1:])
    mu_e = sub(b.weight, tuple(step * x for x in group.datum.simple_coroot(j)))
    return CrystalElement.from_bz(bz_from_lusztig(group, shifted, mu_e))


# String route


def _string_lower(b: CrystalElement, j: int) -> CrystalElement:
    group = b.group
    word = group.word_starting_with(j)
    _, shifted = embed(b.bz, j)
    p = kashiwara_datum(shifted, word).p
    lowered = StringDatum(word, (p[0] - 1,) + p[1:])
    mu_e = sub(bottom_vertex(shifted), group.datum.simple_coroot(j))
    return CrystalElement.from_bz(string_to_bz(group, lowered, mu_e))


def _string_raise(b: CrystalElement, j: int) -> CrystalElement | None:
    if _is_top_for(b, j):
        return None
    group = b.group
    word = group.word_starting_with(j)
    _, shifted = embed(b.bz)
    p = kashiwara_datum(shifted, word).p
    raised = StringDatum(word, (p[0] + 1,) + p[1:])
    mu_e = add(bottom_vertex(shifted), group.datum.simple_coroot(j))
    return CrystalElement.from_bz(string_to_bz(group, raised, mu_e))


# Public operators


def f(b: CrystalElement, j: int, route: Route | None = None) -> CrystalElement:
    """The lowering operator f_j; never zero on stable polytopes."""
    if _resolve(b.group, route) == Route.LUSZTIG:
        return _shift_first(b, j, 1)
    return _string_lower(b, j)


def e(b: CrystalElement, j: int, route: Route | None = None) -> CrystalElement | None:
    """The raising operator e_j, or None when b is at the top of its j-string."""
    if _resolve(b.group, route) == Route.LUSZTIG:
        return _shift_first(b, j, -1)
    return _string_raise(b, j)


def f_star(b: CrystalElement, j: int, route: Route | None = None) -> CrystalElement:
    """* f_j *, with * the negation P -> -P."""
    flipped = CrystalElement.from_bz(negate(b.bz))
    return CrystalElement.from_bz(negate(f(flipped, j, route).bz))


def e_star(b: CrystalElement, j: int, route: Route | None = None) -> CrystalElement | None:
    flipped = CrystalElement.from_bz(negate(b.bz))
    raised = e(flipped, j, route)
    if raised is None:
        return None
    return CrystalElement.from_bz(negate(raised.bz))


def epsilon(b: CrystalElement, j: int) -> int:
    """How many times e_j applies to b."""
    if b.group.datum.is_simply_laced:
        return lusztig_datum(b.bz, b.group.word_starting_with(j)).n[0]
    count = 0
    current = e(b, j)
    while current is not None:
        count += 1
        current = e(current, j)
    return count


def phi_in(b: CrystalElement, j: int, lam: Coweight) -> int:
    """How many times f_j applies to b inside B(lam)."""
    shifted = translate(b.bz, lam)
    if not in_b_lambda(shifted, lam):
        raise NotInCrystalError(f"{b!r} does not lie in B(lambda) for lambda = {tuple(lam)}")
    return phi(shifted, j)


# Operators on arbitrary (not stable-normal) BZ data


def apply_f(M: BZDatum, j: int, route: Route | None = None) -> BZDatum:
    """f_j on P(M), keeping the top vertex where it is."""
    top = top_vertex(M)
    return translate(f(CrystalElement.from_bz(M), j, route).bz, top)


def apply_e(M: BZDatum, j: int, route: Route | None = None) -> BZDatum | None:
    top = top_vertex(M)
    raised = e(CrystalElement.from_bz(M), j, route)
    if raised is None:
        return None
    return translate(raised.bz, top)


def apply_f_star(M: BZDatum, j: int, route: Route | None = None) -> BZDatum:
    """f_j^* on P(M), keeping the bottom vertex where it is."""
    return negate(apply_f(negate(M), j, route))


def apply_e_star(M: BZDatum, j: int, route: Route | None = None) -> BZDatum | None:
    raised = apply_e(negate(M), j, route)
    return None if raised is None else negate(raised)
