"""
Sweep of (n, k, n0) for tuples of H with a prescribed Δ_v = m on cycle vertices.

Δ is affine in t0 with coefficient n, so each cell has at most one
candidate t0, found with integer arithmetic on 4Δ.
"""
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from family.formulas import delta_closed_form, delta_times_four, lower_bound
from gadgets import BaseGadget, EmptyGadget
from search.realize import realize_gadget

logger = logging.getLogger(__name__)

MIN_CYCLE = 5

NON_INTEGRAL = 'non-integral'
BELOW_MINIMUM = 'below-minimum'
ABOVE_PATH_BOUND = 'above-path-bound'
SHORT_CYCLE = 'short-cycle'


@dataclass(frozen=True)
class SweepHit:
    """A tuple satisfying the closed form for Δ = m, with its R_m lower bound."""
    n: int
    k: int
    l: int
    n0: int
    t0: int
    m: int
    bound: Fraction
    realization: Optional[BaseGadget] = None

    @property
    def order(self) -> int:
        return self.n * (self.k + self.n0)

    @property
    def realized(self) -> bool:
        return self.realization is not None

    def key(self) -> Tuple[int, int, int, int, int]:
        return (self.n, self.k, self.l, self.n0, self.t0)

    def sort_key(self):
        return (-self.bound, self.order, self.n, self.k, self.n0, self.l)


class Rejection(NamedTuple):
    """A cell that yields no hit, with the reason tag."""
    n: int
    k: int
    l: int
    n0: int
    reason: str


def solve_t0(m: int, n: int, k: int, n0: int) -> Fraction:
    """The t0 making Δ_v(H) = m, possibly non-integral."""
    # 4Δ(t0) = 4Δ(0) + 4n*t0
    return Fraction(4 * m - delta_times_four(n, k, n0, 0), 4 * n)


def realization_for(n0: int, l: int, t0: int) -> Optional[BaseGadget]:
    if l == 1:
        return realize_gadget(n0, l, t0)
    if n0 == l and t0 == l:
        return EmptyGadget(l)
    return None


def _sweep_cycle_length(m: int, n: int, k_range: Sequence[int], n0_range: Sequence[int],
                        l: int, realize: bool) -> Tuple[List[SweepHit], List[Rejection]]:
    hits: List[SweepHit] = []
    rejected: List[Rejection] = []
    for k in k_range:
        for n0 in n0_range:
            if n0 < l:
                continue
            if n < MIN_CYCLE:
                rejected.append(Rejection(n, k, l, n0, SHORT_CYCLE))
                continue
            t0 = solve_t0(m, n, k, n0)
            if t0.denominator != 1:
                rejected.append(Rejection(n, k, l, n0, NON_INTEGRAL))
                continue
            t0 = t0.numerator
            if t0 < 2 * n0 - l:
                rejected.append(Rejection(n, k, l, n0, BELOW_MINIMUM))
                continue
            if t0 - n0 > n0 * (n0 - 1) // 2:
                rejected.append(Rejection(n, k, l, n0, ABOVE_PATH_BOUND))
                continue
            assert delta_closed_form(n, k, n0, t0) == m
            gadget = realization_for(n0, l, t0) if realize else None
            hits.append(SweepHit(n, k, l, n0, t0, m, lower_bound(k, n0), gadget))
    return hits, rejected


def sweep(m: int, n_range: Sequence[int], k_range: Sequence[int], n0_range: Sequence[int],
          l: int = 1, realize: bool = True, threads: int = 1,
          rejected: Optional[List[Rejection]] = None) -> List[SweepHit]:
    """
    All (n, k, n0, t0) with Δ_v(H) = m and t0 in the realizable window
    [2*n0 - l, n0 + n0(n0-1)/2], sorted by bound (descending), then order.

    Cells without a hit are appended to ``rejected`` when a list is given.
    """
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    n_values, k_values, n0_values = list(n_range), list(k_range), list(n0_range)
    task = lambda n: _sweep_cycle_length(m, n, k_values, n0_values, l, realize)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(task, n_values))
    else:
        parts = [task(n) for n in n_values]

    hits = [hit for part, _ in parts for hit in part]
    reasons = Counter()
    for _, part in parts:
        reasons.update(r.reason for r in part)
        if rejected is not None:
            rejected.extend(part)
    logger.info("sweep m=%d l=%d: %d hits, rejected %s", m, l, len(hits), dict(sorted(reasons.items())))
    return sorted(hits, key=SweepHit.sort_key)
