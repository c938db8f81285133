"""Template contexts for the text reports."""

from typing import Any

from mvpoly.apps.am.types import AMReport, AMScanSummary, CounterexampleReport, JCloseCertificate
from mvpoly.apps.bz.types import BZDatum, PluckerResult, VerificationReport
from mvpoly.apps.rootdatum.classical import chamber_name
from mvpoly.apps.weyl.group import WeylGroup
from mvpoly.apps.weyl.types import ChamberWeight, WeylElement


def element_label(w: WeylElement) -> str:
    return "".join(f"s{i}" for i in w.word) or "e"


def chamber_label(group: WeylGroup, gamma: ChamberWeight) -> str:
    if group.datum.kind is None:
        return gamma.key()
    return chamber_name(group.datum, gamma.weight)


def _plucker_row(result: PluckerResult) -> dict[str, Any]:
    return {
        "element": element_label(result.element),
        "i": result.i,
        "j": result.j,
        "status": result.status.value,
        "lhs": result.lhs,
        "rhs": result.rhs,
    }


def verify_context(M: BZDatum, report: VerificationReport) -> dict[str, Any]:
    return {
        "type": M.group.datum.name or "custom",
        "edges_checked": report.edges.checked,
        "edge_violations": [
            {"element": element_label(v.element), "node": v.node, "length": v.length}
            for v in report.edges.violations
        ],
        "plucker": [_plucker_row(r) for r in report.plucker],
        "unsupported": report.unsupported_count,
        "string_consistent": report.string_consistent,
        "string_error": report.string_error,
        "valid": report.valid,
    }


def am_context(report: AMReport) -> dict[str, Any]:
    group = report.input.group
    return {
        "j": report.j,
        "c": report.c,
        "edge_ok": report.edge_ok,
        "plucker_failures": [_plucker_row(r) for r in report.plucker_failures],
        "equals_f": report.equals_f,
        "contained_in_f": report.contained_in_f,
        "differences": [
            {"name": chamber_label(group, gamma), "am": a, "f": b}
            for gamma, a, b in report.differences()
        ],
    }


def scan_context(summary: AMScanSummary, limit: int = 5) -> dict[str, Any]:
    first = []
    for failure in summary.first_failures(limit):
        context = am_context(failure.report)
        context["index"] = failure.index
        context["values"] = ",".join(str(v) for v in failure.report.input.values)
        first.append(context)
    return {
        "type": summary.type_name,
        "source": summary.source,
        "js": ",".join(str(j) for j in summary.js),
        "elements": summary.elements,
        "checks": summary.checks,
        "failures": len(summary.failures),
        "containment_violations": summary.containment_violations,
        "condition_failures": summary.condition_failures,
        "closed_form_mismatches": summary.closed_form_mismatches,
        "first_failures": first,
    }


def counterexample_context(report: CounterexampleReport) -> dict[str, Any]:
    return {
        "x": report.x,
        "am": am_context(report.am),
        "relation": _plucker_row(report.relation),
        "input_mismatches": report.input_mismatches,
        "closed_form_mismatches": report.closed_form_mismatches,
        "f_differences": [{"name": n, "am": a, "f": b} for n, a, b in report.f_differences],
        "am_vertices": [_point(p) for p in report.am_vertices],
        "f_vertices": [_point(p) for p in report.f_vertices],
        "reproduced": report.reproduced,
    }


def jclose_context(group: WeylGroup, certificate: JCloseCertificate) -> dict[str, Any]:
    return {
        "type": group.datum.name or "custom",
        "j": certificate.j,
        "success": certificate.success,
        "order": [chamber_label(group, gamma) for gamma in certificate.order],
        "witnesses": [
            {
                "gamma": chamber_label(group, w.gamma),
                "delta": chamber_label(group, w.delta),
                "v": element_label(w.v),
                "i": w.i,
                "k": w.k,
            }
            for w in certificate.witnesses
        ],
        "residue": [chamber_label(group, gamma) for gamma in certificate.residue],
        "height_drops": (
            None
            if certificate.height_drops is None
            else ",".join(str(h) for h in certificate.height_drops)
        ),
    }


def _point(p: tuple[int, ...]) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"
