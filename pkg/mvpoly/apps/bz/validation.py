import logging

from mvpoly.apps.core.exceptions import MVPolytopeError
from mvpoly.apps.kashiwara.data import kashiwara_datum, string_to_bz
from mvpoly.apps.kashiwara.embedding import embed

from .datum import bottom_vertex, check_all_plucker, check_edge_inequalities
from .types import BZDatum, VerificationReport

logger = logging.getLogger(__name__)


def string_consistency(M: BZDatum) -> tuple[bool, str | None]:
    """
    Whether M is rebuilt exactly from its own string datum.

    M is first embedded into some B(lambda); the string datum along the
    canonical word is then carried over every reduced word of w_0.
    """
    group = M.group
    try:
        _, shifted = embed(M)
        p = kashiwara_datum(shifted, group.canonical_word)
        rebuilt = string_to_bz(group, p, bottom_vertex(shifted), check=True)
    except MVPolytopeError as e:
        logger.info(f"String reconstruction failed: {e}")
        return False, str(e)
    if rebuilt != shifted:
        return False, "string datum rebuilds a different BZ datum"
    return True, None


def verify(M: BZDatum) -> VerificationReport:
    """
    Check edge inequalities and tropical Pluecker relations.

    Doubly-laced positions have no Pluecker relation to test, so in
    non-simply-laced types the string reconstruction check is added.
    """
    report = VerificationReport(
        edges=check_edge_inequalities(M),
        plucker=check_all_plucker(M),
    )
    if not M.group.datum.is_simply_laced:
        report.string_consistent, report.string_error = string_consistency(M)
    logger.debug(
        f"Verified datum: {len(report.edges.violations)} edge violations, "
        f"{len(report.plucker_failures)} Pluecker failures"
    )
    return report


def is_mv(M: BZDatum) -> bool:
    return verify(M).valid
