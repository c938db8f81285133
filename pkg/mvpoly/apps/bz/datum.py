"""
Operations on BZ data: vertices, edge lengths, tropical Pluecker relations,
Lusztig data, translation, negation and membership tests.
"""

from collections.abc import Iterable

from mvpoly.apps.core.exceptions import InvalidDatumError, InvalidPositionError
from mvpoly.apps.rootdatum.types import Coweight
from mvpoly.apps.rootdatum.vectors import neg
from mvpoly.apps.weyl.group import WeylGroup
from mvpoly.apps.weyl.types import ReducedWord, Side, WeylElement

from .types import (
    BZDatum,
    EdgeReport,
    EdgeViolation,
    GGMSDatum,
    LusztigDatum,
    PluckerResult,
    PluckerStatus,
)

# Vertices


def vertex(M: BZDatum, w: WeylElement) -> Coweight:
    """mu_w = w . (sum_i M_{w Lambda_i} alpha_i^vee)."""
    return w.act_coweight(tuple(M.at(w, i) for i in M.group.nodes))


def vertices(M: BZDatum) -> GGMSDatum:
    return GGMSDatum(M.group, {w.weight_images: vertex(M, w) for w in M.group.elements})


def bottom_vertex(M: BZDatum) -> Coweight:
    """mu_e."""
    return vertex(M, M.group.identity)


def top_vertex(M: BZDatum) -> Coweight:
    """mu_{w_0}."""
    return vertex(M, M.group.longest)


def distinct_vertices(M: BZDatum) -> list[Coweight]:
    return sorted({vertex(M, w) for w in M.group.elements})


# Edge inequalities


def edge_length(M: BZDatum, w: WeylElement, i: int) -> int:
    """
    n(w, i) = -M_{w Lambda_i} - M_{w s_i Lambda_i} - sum_{j != i} a_ji M_{w Lambda_j}.

    This is the length of the edge from mu_w to mu_{w s_i} in units of
    w . alpha_i^vee.
    """
    group = M.group
    u = group.times_simple_right(w, i)
    total = -M.at(w, i) - M.at(u, i)
    for j in group.nodes:
        if j != i:
            total -= group.datum.a(j, i) * M.at(w, j)
    return total


def check_edge_inequalities(M: BZDatum) -> EdgeReport:
    report = EdgeReport()
    for w in M.group.elements:
        for i in M.group.nodes:
            report.checked += 1
            n = edge_length(M, w, i)
            if n < 0:
                report.violations.append(EdgeViolation(w, i, n))
    return report


# Tropical Pluecker relations


def check_tropical_plucker(M: BZDatum, w: WeylElement, i: int, j: int) -> PluckerResult:
    group = M.group
    datum = group.datum
    if i == j:
        raise InvalidPositionError("Pluecker relation needs two distinct nodes")
    if group.descent(w, i, Side.RIGHT) or group.descent(w, j, Side.RIGHT):
        raise InvalidPositionError(f"Need w s_{i} > w and w s_{j} > w at {w.word}")

    if datum.a(i, j) == 0:
        return PluckerResult(w, i, j, PluckerStatus.HOLDS)
    if datum.bond(i, j) != 1:
        return PluckerResult(w, i, j, PluckerStatus.UNSUPPORTED)

    wi = group.times_simple_right(w, i)
    wj = group.times_simple_right(w, j)
    wij = group.times_simple_right(wi, j)
    wji = group.times_simple_right(wj, i)
    lhs = M.at(wi, i) + M.at(wj, j)
    rhs = min(M.at(w, i) + M.at(wij, j), M.at(wji, i) + M.at(w, j))
    status = PluckerStatus.HOLDS if lhs == rhs else PluckerStatus.FAILS
    return PluckerResult(w, i, j, status, lhs, rhs)


def plucker_positions(group: WeylGroup) -> list[tuple[WeylElement, int, int]]:
    """Admissible (w, i, j) with i < j; the relation is symmetric in i and j."""
    positions = []
    for w in group.elements:
        ascents = [i for i in group.nodes if not group.descent(w, i, Side.RIGHT)]
        for a, i in enumerate(ascents):
            for j in ascents[a + 1 :]:
                positions.append((w, i, j))
    return positions


def check_all_plucker(M: BZDatum) -> list[PluckerResult]:
    return [check_tropical_plucker(M, w, i, j) for w, i, j in plucker_positions(M.group)]


# Lusztig data


def lusztig_datum(M: BZDatum, word: ReducedWord) -> LusztigDatum:
    path = M.group.longest_path(tuple(word))
    n = tuple(edge_length(M, path.prefixes[k], i) for k, i in enumerate(path.word))
    return LusztigDatum(path.word, n)


# Symmetries


def negate(M: BZDatum) -> BZDatum:
    """The datum of -P: M'_gamma = M_{-gamma}."""
    group = M.group
    return BZDatum(group, tuple(M[group.negative(gamma)] for gamma in group.chamber_weights))


def translate(M: BZDatum, nu: Coweight) -> BZDatum:
    """The datum of P + nu: M'_gamma = M_gamma + <nu, gamma>."""
    pair = M.group.datum.pair
    return BZDatum(M.group, tuple(m + pair(nu, g.weight) for g, m in M.items()))


def stable_normalize(M: BZDatum) -> BZDatum:
    """Translate so that mu_{w_0} = 0."""
    return translate(M, neg(top_vertex(M)))


def is_stable_normal(M: BZDatum) -> bool:
    return all(M.at(M.group.longest, i) == 0 for i in M.group.nodes)


# Polytopes from points


def from_vertices(group: WeylGroup, points: Iterable[Coweight]) -> BZDatum:
    """M_gamma = min_p <p, gamma> over a finite point set."""
    points = list(points)
    if not points:
        raise InvalidDatumError("Need at least one point")
    pair = group.datum.pair
    return BZDatum(
        group,
        tuple(min(pair(p, gamma.weight) for p in points) for gamma in group.chamber_weights),
    )


def point_polytope(group: WeylGroup, lam: Coweight) -> BZDatum:
    return from_vertices(group, [lam])


def orbit_polytope(group: WeylGroup, lam: Coweight) -> BZDatum:
    """conv(W . lam)."""
    return from_vertices(group, {w.act_coweight(lam) for w in group.elements})


# Membership


def contains(M: BZDatum, x: Coweight) -> bool:
    pair = M.group.datum.pair
    return all(pair(x, gamma.weight) >= m for gamma, m in M.items())


def polytope_contains(M: BZDatum, inner: BZDatum) -> bool:
    """Whether P(inner) is a subset of P(M)."""
    return all(a >= b for a, b in zip(inner.values, M.values, strict=True))


def in_b_lambda(M: BZDatum, lam: Coweight) -> bool:
    """
    Whether P(M) lies in B(lam): M_{w_0 s_i Lambda_i} >= <w_0 lam, Lambda_i> for all i.

    The top vertex of M must be lam.
    """
    group = M.group
    if top_vertex(M) != tuple(lam):
        raise InvalidDatumError(f"Top vertex {top_vertex(M)} does not equal lambda = {tuple(lam)}")
    w0 = group.longest
    w0_lam = w0.act_coweight(lam)
    return all(
        M.at(group.times_simple_right(w0, i), i) >= w0_lam[i - 1]
        for i in group.nodes
    )


def in_orbit_hull(M: BZDatum, lam: Coweight) -> bool:
    """Whether P(M) lies in conv(W . lam)."""
    return polytope_contains(orbit_polytope(M.group, lam), M)
