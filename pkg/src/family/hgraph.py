"""
Construction of H(n, k, l, n0, t0).

Vertex id layout: the k*n cycle vertices come first, cycle-major and
position-minor (cycle c, position i -> c*n + i); then the n gadget copies,
position by position (position i, gadget vertex j -> k*n + i*n0 + j).
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, NamedTuple, Optional, Sequence, Tuple

from core.exceptions import (DisconnectedGraphError, FamilyParameterError,
                             GadgetError, MetadataError)
from core.distances import bfs_distances
from core.graph import Graph, build_graph, first_unreachable
from gadgets import BaseGadget, CustomGadget

logger = logging.getLogger(__name__)

CYCLE = 'cycle'
GADGET = 'gadget'


class Role(NamedTuple):
    """Cycle index for cycle vertices, gadget-internal index for F vertices."""
    kind: str
    index: int


def t0_of(gadget: BaseGadget) -> int:
    """
    Transmission of the apex in F plus an apex joined to the l attachments.

    Raises:
        GadgetError: if the gadget is invalid or F plus apex is disconnected
    """
    gadget.validate()
    apex = gadget.order
    edges = gadget.internal_edges() + [(apex, a) for a in gadget.attachments]
    row = bfs_distances(build_graph(apex + 1, edges), apex)
    missing = row.first_unreachable()
    if missing is not None:
        raise GadgetError(f"{gadget.label}: gadget vertex {missing} is not connected to the apex")
    return sum(row.dist)


@dataclass(frozen=True)
class HParams:
    """Recipe for H: cycle length n, number of cycles k and the gadget F."""
    n: int
    k: int
    gadget: BaseGadget

    @property
    def l(self) -> int:
        return self.gadget.attachment_count

    @property
    def n0(self) -> int:
        return self.gadget.order

    @cached_property
    def t0(self) -> int:
        return t0_of(self.gadget)

    @property
    def order(self) -> int:
        return self.n * (self.k + self.n0)

    def quintuple(self) -> Tuple[int, int, int, int, int]:
        return (self.n, self.k, self.l, self.n0, self.t0)

    def label(self) -> str:
        return "H({},{},{},{},{})".format(*self.quintuple())

    def validate(self) -> bool:
        """
        Raises:
            FamilyParameterError: if n < 3 or k < 2
            GadgetError: if the gadget is invalid
        """
        if self.n < 3:
            raise FamilyParameterError(f"cycle length n must be >= 3, got {self.n}")
        if self.k < 2:
            raise FamilyParameterError(f"number of cycles k must be >= 2, got {self.k}")
        self.gadget.validate()
        return True


@dataclass(frozen=True)
class HGraph:
    """A built H together with the role of every vertex."""
    graph: Graph
    params: HParams
    cycle_vertices: Tuple[int, ...]
    position_of: Tuple[int, ...] = field(repr=False)
    role_of: Tuple[Role, ...] = field(repr=False)

    def cycle_vertex(self, cycle: int, position: int) -> int:
        return cycle * self.params.n + position

    def gadget_vertex(self, position: int, index: int) -> int:
        p = self.params
        return p.k * p.n + position * p.n0 + index

    def gadget_copy(self, position: int) -> List[int]:
        first = self.gadget_vertex(position, 0)
        return list(range(first, first + self.params.n0))

    def label(self) -> str:
        return self.params.label()


def _layout(params: HParams) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[Role, ...]]:
    n, k, n0 = params.n, params.k, params.n0
    positions = [i for _ in range(k) for i in range(n)]
    roles = [Role(CYCLE, c) for c in range(k) for _ in range(n)]
    for i in range(n):
        positions.extend([i] * n0)
        roles.extend(Role(GADGET, j) for j in range(n0))
    return tuple(range(k * n)), tuple(positions), tuple(roles)


def build_H(params: HParams) -> HGraph:
    """
    Build H: k copies of C_n, and at every position i the k cycle vertices
    joined to the l attachment vertices of gadget copy i (a K_{k,l}), with
    the gadget edges inserted identically at every position.

    Raises:
        FamilyParameterError, GadgetError: on invalid parameters
        DisconnectedGraphError: if the result is disconnected
    """
    params.validate()
    n, k, n0 = params.n, params.k, params.n0
    gadget_edges = params.gadget.internal_edges()
    attachments = params.gadget.attachments
    base = k * n

    edges = []
    for c in range(k):
        for i in range(n):
            edges.append((c * n + i, c * n + (i + 1) % n))
    for i in range(n):
        copy = base + i * n0
        for c in range(k):
            edges.extend((c * n + i, copy + a) for a in attachments)
        edges.extend((copy + u, copy + v) for u, v in gadget_edges)

    graph = build_graph(params.order, edges)
    missing = first_unreachable(graph, 0)
    if missing is not None:
        raise DisconnectedGraphError(missing, f"{params.gadget.label}: H is disconnected at vertex {missing}")
    cycle_vertices, positions, roles = _layout(params)
    logger.debug("Built %s: order=%d edges=%d", params.label(), graph.order, graph.edge_count)
    return HGraph(graph, params, cycle_vertices, positions, roles)


def hgraph_from_roles(graph: Graph, cycle_ids: Optional[Sequence[int]]) -> HGraph:
    """
    Recover an HGraph from a graph in build_H layout and its cycle-role ids.

    The gadget is read off copy 0 and H is rebuilt; the rebuilt graph must
    equal the given one.

    Raises:
        MetadataError: if the roles or the graph do not match the layout
    """
    if not cycle_ids:
        raise MetadataError("graph carries no cycle role lines; not an H graph")
    cycle_count = len(cycle_ids)
    if list(cycle_ids) != list(range(cycle_count)):
        raise MetadataError("cycle vertices must be the ids 0..kn-1")
    on_cycle = [w for w in graph.neighbors(0) if w < cycle_count]
    if len(on_cycle) != 2:
        raise MetadataError("vertex 0 must have exactly two cycle neighbours")
    n = max(on_cycle) + 1
    if n < 3 or cycle_count % n or (graph.order - cycle_count) % n:
        raise MetadataError(f"cycle length {n} is inconsistent with the vertex counts")
    k = cycle_count // n
    n0 = (graph.order - cycle_count) // n
    if n0 < 1:
        raise MetadataError("H graph has no gadget vertices")

    copy = range(cycle_count, cycle_count + n0)
    local_edges = [(u - cycle_count, w - cycle_count)
                   for u in copy for w in graph.neighbors(u) if u < w and w in copy]
    attachments = [w - cycle_count for w in graph.neighbors(0) if w in copy]
    try:
        params = HParams(n, k, CustomGadget(n0, local_edges, attachments))
        rebuilt = build_H(params)
    except (FamilyParameterError, GadgetError, DisconnectedGraphError) as e:
        raise MetadataError(f"roles do not describe a valid H: {e}")
    if rebuilt.graph != graph:
        raise MetadataError("graph differs from the H described by its roles")
    return rebuilt
