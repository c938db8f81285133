"""
The Sp6 counterexample: for x >= 2, AM_1 of the polytope with vertices
(0,0,0), (0,2,0), (0,0,x), (0,2,x) satisfies the edge inequalities but not
the tropical Pluecker relations, and f_1 differs from it at one facet.
"""

import logging

from mvpoly.apps.bz.datum import check_tropical_plucker, distinct_vertices
from mvpoly.apps.bz.fixtures import sp6_polytope
from mvpoly.apps.bz.types import BZDatum, PluckerResult
from mvpoly.apps.core.exceptions import InvalidDatumError
from mvpoly.apps.rootdatum.classical import chamber_name, parse_chamber_name, to_classical, type_c
from mvpoly.apps.rootdatum.types import LatticeRole
from mvpoly.apps.weyl.group import WeylGroup, weyl_group

from .operators import am
from .types import CounterexampleReport

logger = logging.getLogger(__name__)

# Chamber weights w Lambda_1, w Lambda_2, w Lambda_3 at the failing relation.
RELATION_CHAMBERS = ("1", "13", "1-23")
# LHS and RHS of that relation on AM_1 P, for every x.
RELATION_VALUES = (-2, -3)
# The only chamber where AM_1 P and f_1 P differ: (name, M', N).
F_DIFFERENCES = [("1-2", -2, -3)]


def closed_form_input(x: int) -> dict[str, int]:
    values = {}
    for name in ("1", "12", "13", "123", "2", "23", "3", "-123", "-12", "-13", "-1"):
        values[name] = 0
    for name in ("1-3", "12-3", "2-3", "-12-3", "-1-3", "-3"):
        values[name] = -x
    for name in ("1-2", "1-23", "-23", "-1-23", "-1-2", "-2"):
        values[name] = -2
    for name in ("1-2-3", "-2-3", "-1-2-3"):
        values[name] = -x - 2
    return values


def closed_form_am(x: int) -> dict[str, int]:
    """M' on Gamma_1; every other value is unchanged."""
    return {
        "1": -1,
        "13": -1,
        "1-23": -2,
        "-23": -2,
        "-2": -2,
        "1-2": -2,
        "1-3": -x - 1,
        "1-2-3": -x - 2,
        "-2-3": -x - 2,
    }


def closed_form_am_vertices(x: int) -> list[tuple[int, ...]]:
    return sorted({(0, 0, 0), (-1, 1, 0), (0, 2, 0), (0, 0, x), (0, 2, x), (-1, 1, x)})


def closed_form_f_vertices(x: int) -> list[tuple[int, ...]]:
    """At x = 2 the points (-1, 2, 1) and (-1, 2, x - 1) coincide."""
    points = {(0, 0, 0), (0, 2, 0), (-1, 1, 0), (-1, 2, 1), (0, 0, x), (-1, 1, x), (-1, 2, x - 1), (0, 2, x)}
    return sorted(points)


def _value(M: BZDatum, name: str) -> int:
    weight = parse_chamber_name(M.group.datum, name)
    return M[M.group.chamber_by_weight[weight]]


def _classical_vertices(M: BZDatum) -> list[tuple[int, ...]]:
    datum = M.group.datum
    return sorted(to_classical(datum, mu, LatticeRole.COWEIGHT).vector for mu in distinct_vertices(M))


def relation_position(group: WeylGroup):
    """The element w with w Lambda_i named by RELATION_CHAMBERS."""
    datum = group.datum
    targets = tuple(parse_chamber_name(datum, name) for name in RELATION_CHAMBERS)
    for w in group.elements:
        if w.weight_images == targets:
            return w
    raise InvalidDatumError(f"No Weyl group element sends Lambda_i to {RELATION_CHAMBERS}")


def failing_relation(M_am: BZDatum) -> PluckerResult:
    """M'_3 + M'_{1-2} = min(M'_{-2} + M'_{13}, M'_1 + M'_{-23})."""
    w = relation_position(M_am.group)
    return check_tropical_plucker(M_am, w, 1, 2)


def counterexample(x: int = 2) -> CounterexampleReport:
    P = sp6_polytope(x)
    group = weyl_group(type_c(3))
    report = am(P, 1)
    M_am = report.output
    N = report.f_output

    expected_input = closed_form_input(x)
    input_mismatches = [name for name, v in expected_input.items() if _value(P, name) != v]

    expected_am = dict(expected_input)
    expected_am.update(closed_form_am(x))
    closed_form_mismatches = [name for name, v in expected_am.items() if _value(M_am, name) != v]
    if closed_form_mismatches:
        logger.error(f"AM_1 differs from the closed forms at {closed_form_mismatches}")

    f_differences = [
        (chamber_name(group.datum, gamma.weight), a, b) for gamma, a, b in report.differences()
    ]
    return CounterexampleReport(
        x=x,
        am=report,
        relation=failing_relation(M_am),
        input_mismatches=input_mismatches,
        closed_form_mismatches=closed_form_mismatches,
        f_differences=f_differences,
        am_vertices=_classical_vertices(M_am),
        f_vertices=_classical_vertices(N),
        closed_form_am_vertices=closed_form_am_vertices(x),
        closed_form_f_vertices=closed_form_f_vertices(x),
        closed_form_relation=RELATION_VALUES,
        closed_form_f_differences=list(F_DIFFERENCES),
    )
