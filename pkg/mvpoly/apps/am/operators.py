"""
The Anderson-Mirkovic operator AM_j.

AM_j P is the smallest pseudo-Weyl polytope that keeps the vertices mu_w with
s_j w < w, moves mu_e to mu_e - alpha_j^vee, still contains the other
vertices of P and contains the reflections r(mu_w) = s_j mu_w + c alpha_j^vee
that can lie in it. When the min-formula below satisfies the edge
inequalities it is the BZ datum of AM_j P.
"""

import logging

from mvpoly.apps.bz.datum import (
    check_all_plucker,
    check_edge_inequalities,
    contains,
    from_vertices,
    vertex,
)
from mvpoly.apps.bz.types import BZDatum, PluckerStatus
from mvpoly.apps.core.exceptions import UnsupportedTypeError
from mvpoly.apps.crystal.operators import apply_f
from mvpoly.apps.crystal.types import Route
from mvpoly.apps.rootdatum.classical import from_classical, to_classical
from mvpoly.apps.rootdatum.types import ClassicalCoords, ClassicalKind, Coweight
from mvpoly.apps.rootdatum.vectors import sub
from mvpoly.apps.weyl.types import ChamberWeight, Side

from .types import AMConditionsReport, AMReport

logger = logging.getLogger(__name__)


def am_constant(M: BZDatum, j: int) -> int:
    """c = M_{Lambda_j} - M_{s_j Lambda_j} - 1."""
    group = M.group
    s_j = group.times_simple_left(j, group.identity)
    return M.at(group.identity, j) - M.at(s_j, j) - 1


def reflect(M: BZDatum, j: int, mu: Coweight) -> Coweight:
    """r(mu) = s_j mu + c alpha_j^vee."""
    c = am_constant(M, j)
    image = M.group.datum.reflect_coweight(j, mu)
    return tuple(x + c if k == j else x for k, x in zip(M.group.nodes, image))


def _reflected_chamber(M: BZDatum, j: int, gamma: ChamberWeight) -> ChamberWeight:
    group = M.group
    return group.chamber_by_weight[group.datum.reflect_weight(j, gamma.weight)]


def am_datum(M: BZDatum, j: int) -> BZDatum:
    """
    M'_gamma = M_gamma on Gamma^j and
    min(M_gamma, M_{s_j gamma} + c <alpha_j^vee, gamma>) on Gamma_j.
    """
    group = M.group
    c = am_constant(M, j)
    values = []
    for gamma, m in M.items():
        if not group.is_relative(gamma, j):
            m = min(m, M[_reflected_chamber(M, j, gamma)] + c * gamma.weight[j - 1])
        values.append(m)
    return BZDatum(group, tuple(values))


def am(M: BZDatum, j: int, route: Route | None = None) -> AMReport:
    """Apply AM_j to a valid BZ datum and compare the result with f_j."""
    output = am_datum(M, j)
    report = AMReport(
        input=M,
        j=j,
        c=am_constant(M, j),
        output=output,
        f_output=apply_f(M, j, route),
        edges=check_edge_inequalities(output),
        plucker_failures=[r for r in check_all_plucker(output) if r.status == PluckerStatus.FAILS],
    )
    if not report.contained_in_f:
        logger.warning(f"AM_{j} P is not contained in f_{j} P for {M.values}")
    return report


def _subset(M: BZDatum, gamma: ChamberWeight) -> frozenset[int]:
    vector = to_classical(M.group.datum, gamma.weight).vector
    return frozenset(k for k, x in enumerate(vector, start=1) if x)


def _chamber_of_subset(M: BZDatum, subset: frozenset[int]) -> ChamberWeight:
    datum = M.group.datum
    vector = tuple(1 if k in subset else 0 for k in range(1, datum.rank + 2))
    weight = from_classical(datum, ClassicalCoords(ClassicalKind.A, vector))
    return M.group.chamber_by_weight[weight]


def am_sln(M: BZDatum, j: int) -> BZDatum:
    """
    The closed formula in type A, on subsets gamma of {1, ..., n}:
    M'_gamma = min(M_gamma, M_{gamma - j + (j+1)} + c) when j is in gamma and
    j+1 is not, with c = M_{1..j} - M_{1..j-1,j+1} - 1.
    """
    datum = M.group.datum
    if datum.kind != ClassicalKind.A:
        raise UnsupportedTypeError(f"The subset formula for AM_j is only valid in type A, got {datum!r}")
    head = frozenset(range(1, j))
    c = M[_chamber_of_subset(M, head | {j})] - M[_chamber_of_subset(M, head | {j + 1})] - 1

    values = []
    for gamma, m in M.items():
        subset = _subset(M, gamma)
        if j in subset and j + 1 not in subset:
            m = min(m, M[_chamber_of_subset(M, (subset - {j}) | {j + 1})] + c)
        values.append(m)
    return BZDatum(M.group, tuple(values))


def am_conditions_check(M: BZDatum, M_am: BZDatum, j: int) -> AMConditionsReport:
    """
    Check conditions (i)-(iv) defining AM_j P on P(M_am), and that M_am
    agrees on Gamma_j with the hull of the points those conditions force.
    """
    group = M.group
    datum = group.datum
    c = am_constant(M, j)
    alpha_j = datum.simple_root(j)

    lower_elements = [w for w in group.elements if group.descent(w, j, Side.LEFT)]
    upper_elements = [w for w in group.elements if not group.descent(w, j, Side.LEFT)]
    mu = {w.weight_images: vertex(M, w) for w in group.elements}

    kept = all(vertex(M_am, w) == mu[w.weight_images] for w in lower_elements)
    bottom = sub(mu[group.identity.weight_images], datum.simple_coroot(j))
    shifted = vertex(M_am, group.identity) == bottom
    upper = all(contains(M_am, mu[w.weight_images]) for w in upper_elements)
    reflected = [
        reflect(M, j, mu[w.weight_images])
        for w in lower_elements
        if datum.pair(mu[w.weight_images], alpha_j) >= c
    ]
    reflections = all(contains(M_am, p) for p in reflected)

    points = {mu[w.weight_images] for w in group.elements} | {bottom} | set(reflected)
    hull = from_vertices(group, points)
    _, lower = group.gamma_split(j)
    minimal = all(M_am[gamma] == hull[gamma] for gamma in lower)

    return AMConditionsReport(
        j=j,
        c=c,
        kept_vertices=kept,
        shifted_bottom=shifted,
        upper_contained=upper,
        reflections_contained=reflections,
        minimal=minimal,
        reflected_points=sorted(set(reflected)),
    )
