from dataclasses import dataclass, field

from mvpoly.apps.bz.types import BZDatum, EdgeReport, PluckerResult, PluckerStatus
from mvpoly.apps.rootdatum.types import Coweight
from mvpoly.apps.weyl.types import ChamberWeight, WeylElement


@dataclass
class AMReport:
    """
    The Anderson-Mirkovic operator applied to one BZ datum, compared with f_j.

    output is M' from the min-formula; f_output is the BZ datum of f_j P,
    translated to keep the top vertex of the input.
    """

    input: BZDatum
    j: int
    c: int
    output: BZDatum
    f_output: BZDatum
    edges: EdgeReport
    plucker_failures: list[PluckerResult] = field(default_factory=list)

    @property
    def edge_ok(self) -> bool:
        return self.edges.ok

    @property
    def is_mv(self) -> bool:
        return self.edge_ok and not self.plucker_failures

    @property
    def equals_f(self) -> bool:
        return self.output == self.f_output

    @property
    def contained_in_f(self) -> bool:
        """Whether P(M') lies inside f_j P, i.e. M'_gamma >= N_gamma everywhere."""
        return all(a >= b for a, b in zip(self.output.values, self.f_output.values, strict=True))

    def differences(self) -> list[tuple[ChamberWeight, int, int]]:
        """(gamma, M'_gamma, N_gamma) wherever the two data disagree."""
        return [
            (gamma, a, b)
            for (gamma, a), b in zip(self.output.items(), self.f_output.values)
            if a != b
        ]


@dataclass
class AMConditionsReport:
    """
    The four defining conditions of AM_j P checked on a candidate datum,
    and minimality against the hull of the mandated points.
    """

    j: int
    c: int
    kept_vertices: bool
    shifted_bottom: bool
    upper_contained: bool
    reflections_contained: bool
    minimal: bool
    reflected_points: list[Coweight] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.kept_vertices
            and self.shifted_bottom
            and self.upper_contained
            and self.reflections_contained
            and self.minimal
        )


@dataclass(frozen=True)
class JCloseWitness:
    """
    v, i, k with v s_k > v, v s_i > v, s_j v = v s_k, a_ik = a_ki = -1 and
    v s_i Lambda_i = gamma; delta = v Lambda_k was peeled before gamma.
    """

    gamma: ChamberWeight
    delta: ChamberWeight
    v: WeylElement
    i: int
    k: int


@dataclass
class JCloseCertificate:
    """Outcome of peeling Gamma_j from Lambda_j."""

    j: int
    order: list[ChamberWeight] = field(default_factory=list)
    witnesses: list[JCloseWitness] = field(default_factory=list)
    residue: list[ChamberWeight] = field(default_factory=list)
    # Type A only: H(gamma) - H(delta) along each witness.
    height_drops: list[int] | None = None

    @property
    def success(self) -> bool:
        return not self.residue


@dataclass(frozen=True)
class AMScanFailure:
    """An element and node at which AM_j differs from f_j."""

    index: int
    j: int
    report: AMReport = field(repr=False, compare=False)


@dataclass
class AMScanSummary:
    """Totals of an exhaustive AM against f comparison."""

    type_name: str
    source: str
    js: tuple[int, ...]
    elements: int = 0
    checks: int = 0
    failures: list[AMScanFailure] = field(default_factory=list)
    containment_violations: int = 0
    condition_failures: int = 0
    closed_form_mismatches: int = 0

    def first_failures(self, limit: int = 5) -> list[AMScanFailure]:
        return self.failures[:limit]


@dataclass
class CounterexampleReport:
    """Everything recomputed for the Sp6 polytope with vertices 0, 2e_2, x e_3, 2e_2 + x e_3."""

    x: int
    am: AMReport
    relation: PluckerResult
    input_mismatches: list[str] = field(default_factory=list)
    closed_form_mismatches: list[str] = field(default_factory=list)
    # (name, M'_gamma, N_gamma) wherever AM_1 P and f_1 P differ.
    f_differences: list[tuple[str, int, int]] = field(default_factory=list)
    am_vertices: list[tuple[int, ...]] = field(default_factory=list)
    f_vertices: list[tuple[int, ...]] = field(default_factory=list)
    closed_form_am_vertices: list[tuple[int, ...]] = field(default_factory=list)
    closed_form_f_vertices: list[tuple[int, ...]] = field(default_factory=list)
    # Values of the failing relation and of the single f_1 difference, as stated in closed form.
    closed_form_relation: tuple[int, int] | None = None
    closed_form_f_differences: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def reproduced(self) -> bool:
        return (
            not self.input_mismatches
            and not self.closed_form_mismatches
            and self.am_vertices == self.closed_form_am_vertices
            and self.f_vertices == self.closed_form_f_vertices
            and self.relation.status == PluckerStatus.FAILS
            and (self.relation.lhs, self.relation.rhs) == self.closed_form_relation
            and self.f_differences == self.closed_form_f_differences
        )
