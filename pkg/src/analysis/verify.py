import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional

from analysis.spectrum import DeltaSpectrum, orbit_deltas, r_m, _tally
from core.distances import all_transmissions
from core.exceptions import CapExceededError, NonIntegralDeltaError
from family.formulas import delta_closed_form, lower_bound, tr_closed_form
from family.hgraph import HGraph

logger = logging.getLogger(__name__)

DEFAULT_CAP = 5000


@dataclass
class Check:
    """One named comparison of an expected and an observed quantity."""
    name: str
    expected: Any
    actual: Any
    passed: bool

    def describe(self) -> str:
        status = "ok" if self.passed else "MISMATCH"
        return f"{self.name}: expected {self.expected}, got {self.actual} [{status}]"


@dataclass
class VerificationReport:
    """Brute-force quantities of one H next to their closed forms."""
    label: str
    order: int
    wiener: Optional[int] = None
    tr_bfs: Optional[int] = None
    tr_closed: Optional[int] = None
    delta_bfs: Optional[int] = None
    delta_closed: Optional[int] = None
    spectrum: Optional[DeltaSpectrum] = None
    ratio: Optional[Fraction] = None
    bound: Optional[Fraction] = None
    checks: List[Check] = field(default_factory=list)

    def check(self, name: str, expected: Any, actual: Any, passed: Optional[bool] = None) -> bool:
        ok = (expected == actual) if passed is None else passed
        self.checks.append(Check(name, expected, actual, ok))
        if not ok:
            logger.warning("%s: %s mismatch (expected %s, got %s)", self.label, name, expected, actual)
        return ok

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]


def verify_instance(h: HGraph, cap: int = DEFAULT_CAP, threads: int = 1,
                    progress: bool = False) -> VerificationReport:
    """
    Compare BFS results on h with the closed forms for its cycle vertices.

    Mismatches are recorded in the report, never raised.

    Raises:
        CapExceededError: if h has more than ``cap`` vertices
    """
    g, p = h.graph, h.params
    if g.order > cap:
        raise CapExceededError(g.order, cap)
    report = VerificationReport(h.label(), g.order)
    logger.info("Verifying %s (order %d)", report.label, g.order)

    transmissions = all_transmissions(g, threads=threads)
    report.wiener = sum(transmissions) // 2
    v = h.cycle_vertex(0, 0)
    report.tr_bfs = transmissions[v]
    report.tr_closed = tr_closed_form(p.n, p.k, p.n0, p.t0)
    report.check("transmission", report.tr_closed, report.tr_bfs)
    uniform = all(transmissions[c] == report.tr_bfs for c in h.cycle_vertices)
    report.check("uniform cycle transmissions", True, uniform)

    try:
        report.delta_closed = delta_closed_form(p.n, p.k, p.n0, p.t0)
    except NonIntegralDeltaError as e:
        report.check("integral delta", 0, e.residue)

    rows = orbit_deltas(h, threads=threads, progress=progress, base_wiener=report.wiener)
    report.spectrum = _tally(g.order, ((delta, size) for _, size, delta in rows))
    report.delta_bfs = rows[0][2]
    if report.delta_bfs is None:
        report.check("cycle vertex is not a cut vertex", True, False)
        return report
    if report.delta_closed is not None:
        report.check("delta", report.delta_closed, report.delta_bfs)

    report.ratio = r_m(report.spectrum, report.delta_bfs)
    report.bound = lower_bound(p.k, p.n0)
    report.check("ratio lower bound", f">= {report.bound}", report.ratio,
                 passed=report.ratio >= report.bound)
    return report
