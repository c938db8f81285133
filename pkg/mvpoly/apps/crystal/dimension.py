from fractions import Fraction

from mvpoly.apps.core.exceptions import InvalidDatumError
from mvpoly.apps.rootdatum.datum import RootDatum
from mvpoly.apps.rootdatum.types import Coweight


def weyl_dimension(datum: RootDatum, lam: Coweight) -> int:
    """
    Dimension of the irreducible representation of the dual group with
    highest weight lam: the product over positive roots beta of
    (<lam, beta> + ht beta) / ht beta.
    """
    if not datum.is_dominant(lam):
        raise InvalidDatumError(f"lambda = {tuple(lam)} is not dominant")
    total = Fraction(1)
    for beta in datum.positive_roots:
        height = sum(beta)
        total *= Fraction(datum.pair(lam, datum.root_weight(beta)) + height, height)
    if total.denominator != 1:
        raise InvalidDatumError(f"Weyl dimension formula gave a non-integer {total}")
    return int(total)
