from typing import List

from .base import BaseGadget, Edge
from core.exceptions import GadgetError


class BroomGadget(BaseGadget):
    """
    Star centre with pendant leaves and one pendant path, attached at the centre.

    Vertex layout: 0 is the centre, 1..leaves are the leaves, and the
    path_length path vertices follow. The path hangs from leaf 1 when
    from_leaf is set, otherwise from the centre.
    """

    def __init__(self, leaves: int, path_length: int, from_leaf: bool = False):
        super().__init__()
        if leaves < 0 or path_length < 0:
            raise GadgetError("broom needs non-negative leaf and path counts")
        if from_leaf and leaves < 1:
            raise GadgetError("broom path cannot hang from a leaf when there are no leaves")
        self._leaves = leaves
        self._path_length = path_length
        self._from_leaf = from_leaf and path_length > 0
        self._order = 1 + leaves + path_length
        self._attachments = (0,)

    @property
    def leaves(self) -> int:
        return self._leaves

    @property
    def path_length(self) -> int:
        return self._path_length

    @property
    def from_leaf(self) -> bool:
        return self._from_leaf

    @property
    def label(self) -> str:
        anchor = 'leaf' if self._from_leaf else 'center'
        return f"broom-{self._leaves}-{self._path_length}-{anchor}"

    def internal_edges(self) -> List[Edge]:
        edges = [(0, leaf) for leaf in range(1, self._leaves + 1)]
        previous = 1 if self._from_leaf else 0
        for vertex in range(self._leaves + 1, self._order):
            edges.append((previous, vertex))
            previous = vertex
        return edges

    def centre_transmission(self) -> int:
        """tr_F(centre) from the shape alone."""
        b = self._path_length
        if self._from_leaf:
            return self._leaves + (b + 1) * (b + 2) // 2 - 1
        return self._leaves + b * (b + 1) // 2

    def expected_t0(self) -> int:
        return self._order + self.centre_transmission()


class StarPathGadget(BroomGadget):
    """
    Star with k-1 leaves and a path of 8 more vertices hanging from one leaf.

    n0 = k + 8 and t0 = 2k + 51.
    """

    PATH_LENGTH = 8

    def __init__(self, k: int):
        if k < 2:
            raise GadgetError(f"star-path gadget needs k >= 2, got {k}")
        super().__init__(k - 1, self.PATH_LENGTH, from_leaf=True)
        self._k = k

    @property
    def label(self) -> str:
        return f"starpath({self._k})"

    def pendant_leaves(self) -> List[int]:
        """The k-2 leaves that carry no path."""
        return list(range(2, self._leaves + 1))

    def expected_t0(self) -> int:
        return 2 * self._k + 51


class PathCenter3Gadget(BroomGadget):
    """P3 attached at its centre: n0 = 3, t0 = 5."""

    def __init__(self):
        super().__init__(2, 0)

    @property
    def label(self) -> str:
        return "p3"

    def pendant_leaves(self) -> List[int]:
        return [1, 2]

    def expected_t0(self) -> int:
        return 5
