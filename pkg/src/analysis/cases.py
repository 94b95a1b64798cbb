from typing import NamedTuple

from core.distances import bfs_distances
from core.exceptions import CutVertexError
from core.graph import delete_vertex, is_connected, relabel_after_deletion
from family.hgraph import HGraph


class CaseIncrease(NamedTuple):
    """Brute-force distance increases after deleting a cycle vertex, by pair class."""
    case1: int
    case2: int
    case3: int
    other: int

    @property
    def total(self) -> int:
        return self.case1 + self.case2 + self.case3 + self.other


def case_increases(h: HGraph) -> CaseIncrease:
    """
    Sum d_{H-v}(x, y) - d_H(x, y) over unordered pairs, v = cycle 0 at position 0.

    Pairs are classed as: both on the rest of v's cycle (case 1); one there
    and one in v's gadget copy (case 2); one there and one in another gadget
    copy (case 3); everything else (other).

    Intended for small H: it holds two full distance matrices.
    """
    v = h.cycle_vertex(0, 0)
    g = h.graph
    reduced = delete_vertex(g, v)
    if not is_connected(reduced):
        raise CutVertexError(v)

    path = set(h.cycle_vertex(0, i) for i in range(1, h.params.n))
    own_copy = set(h.gadget_copy(0))
    gadgets = set(range(h.params.k * h.params.n, g.order))

    totals = [0, 0, 0, 0]
    for x in range(g.order):
        if x == v:
            continue
        before = bfs_distances(g, x).dist
        after = bfs_distances(reduced, relabel_after_deletion(x, v)).dist
        for y in range(x + 1, g.order):
            if y == v:
                continue
            increase = after[relabel_after_deletion(y, v)] - before[y]
            if x in path and y in path:
                totals[0] += increase
            elif (x in path and y in own_copy) or (y in path and x in own_copy):
                totals[1] += increase
            elif (x in path and y in gadgets) or (y in path and x in gadgets):
                totals[2] += increase
            else:
                totals[3] += increase
    return CaseIncrease(*totals)
