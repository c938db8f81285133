import logging

from django.conf import settings

from mvpoly.apps.bz.datum import in_b_lambda, stable_normalize, translate
from mvpoly.apps.bz.types import BZDatum
from mvpoly.apps.core.exceptions import CapExceededError
from mvpoly.apps.rootdatum.types import Coweight
from mvpoly.apps.rootdatum.vectors import scale

logger = logging.getLogger(__name__)


def phi(M: BZDatum, j: int) -> int:
    """M_{Lambda_j} - M_{s_j Lambda_j}: how often f_j applies inside B(lambda)."""
    group = M.group
    return M.at(group.identity, j) - M.at(group.times_simple_left(j, group.identity), j)


def embed(M: BZDatum, j: int | None = None) -> tuple[Coweight, BZDatum]:
    """
    Translate M so that its top vertex is lambda = k * 2 rho^vee and it lies in B(lambda).

    k runs upward from 0. When j is given, phi_j >= 1 is required as well,
    so that f_j does not leave B(lambda).
    """
    cap = getattr(settings, "MV_EMBED_SEARCH_CAP", 64)
    group = M.group
    two_rho = group.datum.positive_coroot_sum
    base = stable_normalize(M)
    for k in range(cap + 1):
        lam = scale(k, two_rho)
        shifted = translate(base, lam)
        if in_b_lambda(shifted, lam) and (j is None or phi(shifted, j) >= 1):
            return lam, shifted
    logger.error(f"No B(lambda) embedding found after {cap} dominant shifts")
    raise CapExceededError(f"No B(lambda) embedding found after {cap} dominant shifts")
