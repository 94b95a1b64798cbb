from typing import Iterable, List, Sequence

from .base import BaseGadget, Edge
from core.exceptions import GadgetError


class CustomGadget(BaseGadget):
    """
    Arbitrary F given by its order, edges and attachment list.
    """

    def __init__(self, order: int, edges: Iterable[Edge], attachments: Sequence[int]):
        super().__init__()
        self._order = order
        self._edges = [(int(u), int(v)) for u, v in edges]
        self._attachments = tuple(int(a) for a in attachments)

    @property
    def label(self) -> str:
        return f"custom({self._order})"

    def internal_edges(self) -> List[Edge]:
        return list(self._edges)


class AugmentedGadget(BaseGadget):
    """
    A base gadget with extra internal edges.
    """

    def __init__(self, base: BaseGadget, extra_edges: Iterable[Edge]):
        super().__init__()
        self._base = base
        self._extra = [(int(u), int(v)) for u, v in extra_edges]
        self._order = base.order
        self._attachments = base.attachments
        existing = set(base.graph().edges())
        for u, v in self._extra:
            key = (min(u, v), max(u, v))
            if key in existing:
                raise GadgetError(f"{base.label}: edge {(u, v)} is already present")
            existing.add(key)

    @property
    def base(self) -> BaseGadget:
        return self._base

    @property
    def extra_edges(self) -> List[Edge]:
        return list(self._extra)

    @property
    def label(self) -> str:
        return f"{self._base.label}+{len(self._extra)}e"

    def internal_edges(self) -> List[Edge]:
        return self._base.internal_edges() + self._extra
