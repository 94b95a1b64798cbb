from abc import ABC, abstractmethod
from itertools import combinations, islice
from typing import Iterable, List, Optional, Sequence, Tuple

from core.exceptions import GadgetError, InvalidEdgeError
from core.graph import Graph, build_graph

Edge = Tuple[int, int]


def first_pairs(s: int, vertices: Sequence[int]) -> List[Edge]:
    """
    The first s vertex pairs in lexicographic order.

    Canonical choice of inserted edges, so every F-copy (and every run)
    receives the same ones.
    """
    pairs = list(islice(combinations(sorted(vertices), 2), s))
    if len(pairs) < s:
        raise GadgetError(
            f"Cannot insert {s} edges among {len(vertices)} vertices "
            f"(at most {len(vertices) * (len(vertices) - 1) // 2})"
        )
    return pairs


class BaseGadget(ABC):
    """
    Abstract base class for all attachment gadgets F.

    A gadget has vertices 0..order-1, a set of internal edges and the
    attachment list: the l vertices joined to every cycle vertex at the
    gadget's position.
    """

    def __init__(self):
        self._order: int = 0
        self._attachments: Tuple[int, ...] = ()

    @property
    def order(self) -> int:
        """n0, the number of vertices of F"""
        return self._order

    @property
    def attachments(self) -> Tuple[int, ...]:
        """Ids of the l attachment vertices"""
        return self._attachments

    @property
    def attachment_count(self) -> int:
        """l"""
        return len(self._attachments)

    @property
    @abstractmethod
    def label(self) -> str:
        """Short comma-free name used in CSV output and selectors"""
        pass

    @abstractmethod
    def internal_edges(self) -> List[Edge]:
        """
        Edges of F, as pairs of gadget-local vertex ids.

        Returns:
            List of (u, v) pairs
        """
        pass

    def expected_t0(self) -> Optional[int]:
        """Closed-form t0 for named variants, None when only BFS can tell."""
        return None

    def graph(self) -> Graph:
        return build_graph(self._order, self.internal_edges())

    def validate(self) -> bool:
        """
        Check the attachment list and the internal edges.

        Raises:
            GadgetError: if l < 1, attachments repeat or fall outside F,
                or an internal edge is invalid
        """
        if self._order < 1:
            raise GadgetError(f"{self.label}: gadget must have at least one vertex")
        if not self._attachments:
            raise GadgetError(f"{self.label}: gadget needs at least one attachment vertex")
        if len(set(self._attachments)) != len(self._attachments):
            raise GadgetError(f"{self.label}: attachment vertices must be distinct")
        for a in self._attachments:
            if not 0 <= a < self._order:
                raise GadgetError(f"{self.label}: attachment {a} outside 0..{self._order - 1}")
        try:
            self.graph()
        except InvalidEdgeError as e:
            raise GadgetError(f"{self.label}: {e}")
        return True

    def with_edges(self, extra_edges: Iterable[Edge]) -> 'BaseGadget':
        """Same gadget with extra internal edges, inserted identically in every copy."""
        from .custom import AugmentedGadget
        return AugmentedGadget(self, extra_edges)

    def signature(self) -> Tuple[int, Tuple[int, ...], Tuple[Edge, ...]]:
        """Structural identity: order, attachments and canonical edge set."""
        return (self._order, self._attachments, tuple(self.graph().edges()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BaseGadget):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label})"
