"""Named BZ data used across the test suites and by the counterexample command."""

from mvpoly.apps.core.exceptions import InvalidDatumError
from mvpoly.apps.rootdatum.classical import from_classical, parse_chamber_name, type_a, type_c
from mvpoly.apps.rootdatum.types import ClassicalCoords, ClassicalKind, LatticeRole
from mvpoly.apps.weyl.group import WeylGroup, weyl_group

from .datum import from_vertices
from .types import BZDatum


def top_datum(group: WeylGroup) -> BZDatum:
    """The point polytope at 0: M_gamma = 0 everywhere."""
    return BZDatum.constant(group, 0)


def sl3_hexagon() -> BZDatum:
    """The SL3 hexagon with M_gamma = -1 for every chamber weight."""
    return BZDatum.constant(weyl_group(type_a(2)), -1)


def sl3_hexagon_lowered() -> BZDatum:
    """f_1 of the SL3 hexagon: M_1 = M_13 = -2, everything else -1."""
    M = sl3_hexagon()
    datum = M.group.datum
    return M.replace(
        {
            M.group.chamber_by_weight[parse_chamber_name(datum, name)]: -2
            for name in ("1", "13")
        }
    )


def sp6_polytope(x: int = 2) -> BZDatum:
    """The Sp6 polytope with vertices (0,0,0), (0,2,0), (0,0,x), (0,2,x)."""
    if x < 2:
        raise InvalidDatumError(f"The Sp6 family needs x >= 2, got {x}")
    datum = type_c(3)
    points = [
        from_classical(datum, ClassicalCoords(ClassicalKind.C, v), LatticeRole.COWEIGHT)
        for v in ((0, 0, 0), (0, 2, 0), (0, 0, x), (0, 2, x))
    ]
    return from_vertices(weyl_group(datum), points)
