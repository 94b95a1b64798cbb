import logging
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import InvalidEdgeError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class Graph:
    """
    Immutable simple undirected graph over vertices 0..order-1.

    Neighbor lists are sorted tuples, so two graphs with the same edge set
    compare and hash equal regardless of how they were built.
    """

    __slots__ = ('_order', '_adjacency', '_edge_count', '_csr')

    def __init__(self, order: int, adjacency: Tuple[Tuple[int, ...], ...]):
        self._order = order
        self._adjacency = adjacency
        self._edge_count = sum(len(nbrs) for nbrs in adjacency) // 2
        self._csr: Optional[Tuple[np.ndarray, np.ndarray]] = None

    @property
    def order(self) -> int:
        """Number of vertices V"""
        return self._order

    @property
    def edge_count(self) -> int:
        """Number of edges E"""
        return self._edge_count

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self._adjacency]

    def edges(self) -> List[Edge]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u, nbrs in enumerate(self._adjacency) for v in nbrs if u < v]

    def csr(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        Compressed adjacency as (indptr, indices) int64 arrays.

        Built lazily and cached; the arrays are marked read-only so the
        graph stays safe to share between threads.
        """
        if self._csr is None:
            degrees = np.fromiter((len(nbrs) for nbrs in self._adjacency),
                                  dtype=np.int64, count=self._order)
            indptr = np.zeros(self._order + 1, dtype=np.int64)
            np.cumsum(degrees, out=indptr[1:])
            indices = np.fromiter((u for nbrs in self._adjacency for u in nbrs),
                                  dtype=np.int64, count=int(indptr[-1]))
            indptr.setflags(write=False)
            indices.setflags(write=False)
            self._csr = (indptr, indices)
        return self._csr

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash((self._order, self._adjacency))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self._edge_count})"


def build_graph(order: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """
    Build a canonical Graph from an edge list.

    Duplicate pairs are collapsed and (u, v) is identified with (v, u).

    Raises:
        InvalidEdgeError: on an out-of-range endpoint or a self-loop
    """
    if order < 0:
        raise ValueError(f"Graph order must be non-negative, got {order}")
    neighbor_sets = [set() for _ in range(order)]
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < order and 0 <= v < order):
            raise InvalidEdgeError((u, v), f"endpoint out of range 0..{order - 1}")
        if u == v:
            raise InvalidEdgeError((u, v), "self-loop")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    return Graph(order, tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def delete_vertex(g: Graph, v: int) -> Graph:
    """
    Remove vertex v and relabel the rest by order-preserving compaction.

    Vertices with id greater than v shift down by one.
    """
    if not 0 <= v < g.order:
        raise IndexError(f"Vertex {v} out of range for graph of order {g.order}")
    adjacency = []
    for u, nbrs in enumerate(g.adjacency):
        if u == v:
            continue
        adjacency.append(tuple(w - 1 if w > v else w for w in nbrs if w != v))
    return Graph(g.order - 1, tuple(adjacency))


def relabel_after_deletion(u: int, removed: int) -> int:
    """Map an id of G to its id in G - removed."""
    if u == removed:
        raise ValueError(f"Vertex {u} was removed")
    return u - 1 if u > removed else u


def is_connected(g: Graph) -> bool:
    """True iff g has a single connected component (K1 and the empty graph count)."""
    if g.order <= 1:
        return True
    return first_unreachable(g, 0) is None


def first_unreachable(g: Graph, source: int) -> Optional[int]:
    """Smallest vertex not reachable from source, or None."""
    seen = bytearray(g.order)
    seen[source] = 1
    queue = deque([source])
    reached = 1
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = 1
                reached += 1
                queue.append(w)
    if reached == g.order:
        return None
    return seen.index(0)
