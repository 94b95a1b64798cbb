"""
Exact unweighted distance primitives.

Naive BFS is the reference semantics. ``all_transmissions`` runs a
level-synchronous multi-source BFS on packed uint64 bitsets: each vertex
holds one bit per source, and a level is one gather of the frontier rows
along the CSR adjacency followed by a segmented OR.
"""
import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from core.exceptions import DisconnectedGraphError
from core.graph import Graph

logger = logging.getLogger(__name__)

# Marker for "no path"; never summed.
UNREACHABLE = None

WORD_BITS = 64
DEFAULT_BLOCK_SOURCES = 4096


@dataclass(frozen=True)
class DistanceRow:
    """Distances from one source; entries are hop counts or UNREACHABLE."""
    source: int
    dist: Tuple[Optional[int], ...]

    def reachable(self) -> bool:
        return UNREACHABLE not in self.dist

    def first_unreachable(self) -> Optional[int]:
        for v, d in enumerate(self.dist):
            if d is UNREACHABLE:
                return v
        return None

    def total(self) -> int:
        """Sum of distances; raises if any vertex is unreachable."""
        missing = self.first_unreachable()
        if missing is not None:
            raise DisconnectedGraphError(missing)
        return sum(self.dist)


def bfs_distances(g: Graph, source: int) -> DistanceRow:
    """Exact shortest-path distances from source."""
    if not 0 <= source < g.order:
        raise IndexError(f"Source {source} out of range for graph of order {g.order}")
    dist: List[Optional[int]] = [UNREACHABLE] * g.order
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return DistanceRow(source, tuple(dist))


def transmission(g: Graph, v: int) -> int:
    """
    tr(v): sum of distances from v to every vertex.

    Raises:
        DisconnectedGraphError: naming an unreachable vertex
    """
    return bfs_distances(g, v).total()


def naive_transmissions(g: Graph) -> List[int]:
    return [transmission(g, v) for v in range(g.order)]


def _one_hot_rows(order: int, start: int, stop: int) -> np.ndarray:
    width = stop - start
    words = (width + WORD_BITS - 1) // WORD_BITS
    bits = np.zeros((order, words), dtype=np.uint64)
    offsets = np.arange(width, dtype=np.int64)
    bits[start + offsets, offsets // WORD_BITS] = np.left_shift(
        np.uint64(1), (offsets % WORD_BITS).astype(np.uint64))
    return bits


def _block_transmissions(g: Graph, start: int, stop: int) -> np.ndarray:
    """
    Per-vertex sums of distances to the sources start..stop-1.

    Row v of the state holds one bit per source; a bit first set at level d
    contributes d to the distance sum of v.
    """
    indptr, indices = g.csr()
    nonempty = np.flatnonzero(np.diff(indptr))
    segment_starts = indptr[nonempty]

    frontier = _one_hot_rows(g.order, start, stop)
    visited = frontier.copy()
    totals = np.zeros(g.order, dtype=np.int64)
    level = 0
    while True:
        level += 1
        reached = np.zeros_like(frontier)
        if nonempty.size:
            reached[nonempty] = np.bitwise_or.reduceat(frontier[indices], segment_starts, axis=0)
        reached &= ~visited
        counts = np.bitwise_count(reached).sum(axis=1, dtype=np.int64)
        if not counts.any():
            break
        totals += level * counts
        visited |= reached
        frontier = reached

    seen = np.bitwise_count(visited).sum(axis=1, dtype=np.int64)
    short = np.flatnonzero(seen != stop - start)
    if short.size:
        raise DisconnectedGraphError(int(short[0]))
    return totals


def _source_blocks(order: int, threads: int, block: int) -> List[Tuple[int, int]]:
    size = max(WORD_BITS, min(block, -(-order // max(threads, 1))))
    size = -(-size // WORD_BITS) * WORD_BITS
    return [(s, min(s + size, order)) for s in range(0, order, size)]


def all_transmissions(g: Graph, threads: int = 1, block: int = DEFAULT_BLOCK_SOURCES) -> List[int]:
    """
    tr(v) for every vertex, equal to per-vertex ``transmission``.

    Sources are split into blocks of at most ``block`` bits; blocks may run
    on ``threads`` worker threads. Block results are integer sums, so the
    output does not depend on the thread count.

    Raises:
        DisconnectedGraphError: if g is disconnected
    """
    if g.order == 0:
        return []
    blocks = _source_blocks(g.order, threads, block)
    logger.debug("all_transmissions: order=%d blocks=%d threads=%d", g.order, len(blocks), threads)
    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _block_transmissions(g, *b), blocks))
    else:
        parts = [_block_transmissions(g, *b) for b in blocks]
    totals = parts[0]
    for part in parts[1:]:
        totals = totals + part
    return [int(t) for t in totals]


def wiener(g: Graph, threads: int = 1) -> int:
    """
    Wiener index W(G): half the sum of all transmissions.

    Raises:
        DisconnectedGraphError: if g is disconnected
    """
    total = sum(all_transmissions(g, threads=threads))
    assert total % 2 == 0, "transmission sum of an undirected graph must be even"
    return total // 2
