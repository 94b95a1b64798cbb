from typing import List

from .base import BaseGadget, Edge
from core.exceptions import GadgetError


class StarCycleGadget(BaseGadget):
    """
    Star centre with k-1 leaves, the centre lying on a 14-cycle.

    Vertex layout: 0 is the centre, 1..k-1 the leaves, k..k+12 the other
    cycle vertices. n0 = k + 13 and t0 = 2k + 61.
    """

    CYCLE_LENGTH = 14

    def __init__(self, k: int):
        super().__init__()
        if k < 2:
            raise GadgetError(f"star-cycle gadget needs k >= 2, got {k}")
        self._k = k
        self._order = k + self.CYCLE_LENGTH - 1
        self._attachments = (0,)

    @property
    def label(self) -> str:
        return f"starcycle({self._k})"

    def internal_edges(self) -> List[Edge]:
        edges = [(0, leaf) for leaf in range(1, self._k)]
        ring = [0] + list(range(self._k, self._order))
        edges.extend((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
        return edges

    def expected_t0(self) -> int:
        return 2 * self._k + 61
