from typing import Iterable, List

from .base import BaseGadget, Edge
from .custom import AugmentedGadget
from core.exceptions import GadgetError


class EmptyGadget(BaseGadget):
    """
    F is l isolated vertices, all of them attached, so n0 = t0 = l.
    """

    def __init__(self, l: int):
        super().__init__()
        if l < 1:
            raise GadgetError(f"empty gadget needs l >= 1, got {l}")
        self._order = l
        self._attachments = tuple(range(l))

    @property
    def label(self) -> str:
        return f"empty({self._order})"

    def internal_edges(self) -> List[Edge]:
        return []

    def expected_t0(self) -> int:
        return self._order


class EmptyPlusEdgesGadget(AugmentedGadget):
    """
    Empty(l) with extra edges between attachment vertices.

    Every vertex stays adjacent to the apex, so t0 is still l.
    """

    def __init__(self, l: int, extra_edges: Iterable[Edge]):
        super().__init__(EmptyGadget(l), extra_edges)

    def expected_t0(self) -> int:
        return self._order


class PerfectMatchingGadget(BaseGadget):
    """
    Empty(l) plus the perfect matching 2i -- 2i+1; l must be even.
    """

    def __init__(self, l: int):
        super().__init__()
        if l < 2 or l % 2:
            raise GadgetError(f"perfect matching needs an even l >= 2, got {l}")
        self._order = l
        self._attachments = tuple(range(l))

    @property
    def label(self) -> str:
        return f"matching({self._order})"

    def internal_edges(self) -> List[Edge]:
        return [(2 * i, 2 * i + 1) for i in range(self._order // 2)]

    def expected_t0(self) -> int:
        return self._order
