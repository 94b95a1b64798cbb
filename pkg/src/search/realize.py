import logging
from typing import Optional

from analysis.verify import DEFAULT_CAP, VerificationReport, verify_instance
from core.exceptions import CapExceededError, InfeasibleGadgetError
from family.hgraph import HParams, build_H, t0_of
from gadgets import BaseGadget, BroomGadget

logger = logging.getLogger(__name__)


def realize_gadget(n0: int, l: int, t0: int) -> Optional[BaseGadget]:
    """
    Find a broom of order n0 whose apex transmission is t0.

    Brooms are enumerated by increasing path length, centre anchor before
    leaf anchor; the first match wins. Only l = 1 is handled.

    Raises:
        InfeasibleGadgetError: if t0 < 2*n0 - l, the analytic minimum
    """
    if t0 < 2 * n0 - l:
        raise InfeasibleGadgetError(f"t0 = {t0} is below the minimum 2*n0 - l = {2 * n0 - l}")
    if l != 1:
        logger.info("realize_gadget: l = %d is not handled, only l = 1", l)
        return None
    for path_length in range(n0):
        leaves = n0 - 1 - path_length
        for from_leaf in (False, True):
            if from_leaf and (leaves < 1 or path_length < 1):
                continue
            broom = BroomGadget(leaves, path_length, from_leaf=from_leaf)
            if broom.expected_t0() != t0:
                continue
            measured = t0_of(broom)
            if measured == t0:
                return broom
            logger.error("%s: shape formula gives t0 = %d but BFS gives %d", broom.label, t0, measured)
    return None


def verify_hit(hit, cap: int = DEFAULT_CAP, threads: int = 1, progress: bool = False) -> VerificationReport:
    """
    Build H for a realized sweep hit and verify it by brute force.

    Raises:
        ValueError: if the hit has no realization
        CapExceededError: if H is larger than the cap
    """
    if hit.realization is None:
        raise ValueError(f"hit {hit.key()} has no realizing gadget")
    params = HParams(hit.n, hit.k, hit.realization)
    if params.order > cap:
        raise CapExceededError(params.order, cap)
    actual_t0 = t0_of(hit.realization)
    if actual_t0 != hit.t0:
        report = VerificationReport(f"H({hit.n},{hit.k},{hit.l},{hit.n0},{hit.t0})", params.order)
        report.check("t0 of realization", hit.t0, actual_t0)
        return report
    report = verify_instance(build_H(params), cap=cap, threads=threads, progress=progress)
    report.check("target delta", hit.m, report.delta_bfs)
    return report
