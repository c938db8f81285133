"""Exhaustive comparison of AM_j with f_j over enumerated stable MV polytopes."""

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from contextlib import ExitStack
from functools import partial
from itertools import product

from django.conf import settings

from mvpoly.apps.bz.propagation import bz_from_lusztig
from mvpoly.apps.bz.types import LusztigDatum
from mvpoly.apps.core.exceptions import CapExceededError
from mvpoly.apps.crystal.graphs import binf_enumerate
from mvpoly.apps.crystal.types import CrystalElement, Route
from mvpoly.apps.rootdatum.types import ClassicalKind
from mvpoly.apps.weyl.group import WeylGroup

from .operators import am, am_conditions_check, am_sln
from .types import AMReport, AMScanFailure, AMScanSummary

logger = logging.getLogger(__name__)


def lusztig_corpus(group: WeylGroup, bound: int) -> list[CrystalElement]:
    """
    Stable MV polytopes whose Lusztig datum along the canonical word has
    entry sum at most bound. Simply-laced types only.
    """
    cap = getattr(settings, "MV_NODE_CAP", 100000)
    word = group.canonical_word
    zero = group.datum.zero()
    elements = []
    for n in product(range(bound + 1), repeat=len(word)):
        if sum(n) > bound:
            continue
        if len(elements) >= cap:
            logger.error(f"Lusztig corpus exceeded {cap} elements")
            raise CapExceededError(f"Lusztig corpus exceeded {cap} elements")
        M = bz_from_lusztig(group, LusztigDatum(word, n), zero)
        elements.append(CrystalElement.from_bz(M))
    return sorted(elements, key=lambda b: b.sort_key())


def _check_element(
    b: CrystalElement,
    js: tuple[int, ...],
    route: Route | None,
    kind: ClassicalKind | None,
) -> list[tuple[AMReport, bool, bool]]:
    """(report, conditions hold, subset formula agrees) for every j in js."""
    rows = []
    for j in js:
        report = am(b.bz, j, route)
        conditions_ok = not report.edge_ok or am_conditions_check(b.bz, report.output, j).ok
        formula_ok = kind != ClassicalKind.A or am_sln(b.bz, j) == report.output
        rows.append((report, conditions_ok, formula_ok))
    return rows


def scan_elements(
    group: WeylGroup,
    elements: Iterable[CrystalElement],
    js: Sequence[int] | None = None,
    route: Route | None = None,
    source: str = "",
    workers: int | None = None,
) -> AMScanSummary:
    """
    Run AM_j against f_j on every element and every j in js.

    With more than one worker the elements are checked on a thread pool;
    results are collected in element order either way.
    """
    datum = group.datum
    js = tuple(js or group.nodes)
    workers = workers or getattr(settings, "MV_SCAN_WORKERS", 1)
    summary = AMScanSummary(type_name=datum.name or repr(datum), source=source, js=js)
    check = partial(_check_element, js=js, route=route, kind=datum.kind)

    with ExitStack() as stack:
        if workers > 1:
            pool = stack.enter_context(ThreadPoolExecutor(max_workers=workers))
            results = pool.map(check, elements)
        else:
            results = map(check, elements)

        for index, rows in enumerate(results):
            summary.elements += 1
            for report, conditions_ok, formula_ok in rows:
                j = report.j
                summary.checks += 1
                if not report.equals_f:
                    summary.failures.append(AMScanFailure(index, j, report))
                    logger.warning(f"AM_{j} differs from f_{j} at element {index} of {summary.source}")
                if not report.contained_in_f:
                    summary.containment_violations += 1
                if not conditions_ok:
                    summary.condition_failures += 1
                    logger.warning(f"AM_{j} conditions fail at element {index} of {summary.source}")
                if not formula_ok:
                    summary.closed_form_mismatches += 1
                    logger.warning(f"Subset formula for AM_{j} disagrees at element {index}")

    logger.info(
        f"AM scan of {summary.type_name} ({summary.source}): {summary.checks} checks, "
        f"{len(summary.failures)} failures"
    )
    return summary


def am_scan(
    group: WeylGroup,
    depth: int,
    js: Sequence[int] | None = None,
    route: Route | None = None,
    workers: int | None = None,
) -> AMScanSummary:
    """Compare AM_j and f_j on every element of B(infinity) up to depth."""
    graph = binf_enumerate(group, depth, route)
    return scan_elements(group, graph.nodes, js, route, source=f"depth <= {depth}", workers=workers)


def am_scan_lusztig(
    group: WeylGroup,
    bound: int,
    js: Sequence[int] | None = None,
    workers: int | None = None,
) -> AMScanSummary:
    """Compare AM_j and f_j on the Lusztig corpus with entry sum at most bound."""
    elements = lusztig_corpus(group, bound)
    return scan_elements(group, elements, js, source=f"Lusztig sum <= {bound}", workers=workers)
