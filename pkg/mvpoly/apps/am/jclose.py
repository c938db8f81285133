"""
Certificates that the dual Lie algebra is j-close.

Gamma_j is peeled greedily starting from Lambda_j: a chamber weight gamma is
peeled once some witness (v, i, k) links it to an already peeled delta. The
peeling order is then a valid height function H.
"""

import logging

from mvpoly.apps.rootdatum.classical import to_classical
from mvpoly.apps.rootdatum.types import ClassicalKind
from mvpoly.apps.weyl.group import WeylGroup
from mvpoly.apps.weyl.types import ChamberWeight, Side

from .types import JCloseCertificate, JCloseWitness

logger = logging.getLogger(__name__)


def _witnesses(group: WeylGroup, j: int) -> dict[ChamberWeight, list[JCloseWitness]]:
    datum = group.datum
    _, lower = group.gamma_split(j)
    pairs = [
        (i, k)
        for i in group.nodes
        for k in group.nodes
        if i != k and datum.a(i, k) == -1 and datum.a(k, i) == -1
    ]
    found: dict[ChamberWeight, list[JCloseWitness]] = {}
    for v in group.elements:
        for i, k in pairs:
            if group.descent(v, k, Side.RIGHT) or group.descent(v, i, Side.RIGHT):
                continue
            if group.times_simple_left(j, v) != group.times_simple_right(v, k):
                continue
            gamma = group.chamber(group.times_simple_right(v, i), i)
            delta = group.chamber(v, k)
            if gamma in lower and delta in lower:
                found.setdefault(gamma, []).append(JCloseWitness(gamma, delta, v, i, k))
    return found


def sln_height(group: WeylGroup, j: int, gamma: ChamberWeight) -> int:
    """H(gamma) = #{k in gamma : k > j+1} - #{k in gamma : k < j} on subsets."""
    vector = to_classical(group.datum, gamma.weight).vector
    members = [k for k, x in enumerate(vector, start=1) if x]
    return sum(1 for k in members if k > j + 1) - sum(1 for k in members if k < j)


def j_close_check(group: WeylGroup, j: int) -> JCloseCertificate:
    _, lower = group.gamma_split(j)
    start = group.fundamental_chamber(j)
    witnesses = _witnesses(group, j)

    certificate = JCloseCertificate(j=j, order=[start])
    peeled = {start}
    pending = sorted(lower - {start})
    progress = True
    while pending and progress:
        progress = False
        for gamma in list(pending):
            witness = next((w for w in witnesses.get(gamma, []) if w.delta in peeled), None)
            if witness is None:
                continue
            peeled.add(gamma)
            pending.remove(gamma)
            certificate.order.append(gamma)
            certificate.witnesses.append(witness)
            progress = True
    certificate.residue = pending

    if group.datum.kind == ClassicalKind.A:
        certificate.height_drops = [
            sln_height(group, j, w.gamma) - sln_height(group, j, w.delta)
            for w in certificate.witnesses
        ]
    if certificate.success:
        logger.info(f"{group.datum.name} is {j}-close: peeled {len(certificate.order)} chamber weights")
    else:
        logger.info(f"Peeling Gamma_{j} of {group.datum.name} stopped with {len(pending)} left")
    return certificate
