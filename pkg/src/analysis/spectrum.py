import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from tqdm import tqdm

from core.distances import wiener
from core.exceptions import CutVertexError, MetadataError
from core.graph import Graph, delete_vertex, is_connected
from family.hgraph import HGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeltaSpectrum:
    """
    Number of vertices with each value of Δ_v, plus the vertices whose
    removal disconnects the graph (these never count towards any R_m).
    """
    counts: Dict[int, int]
    disconnecting: int
    order: int

    def __post_init__(self):
        if sum(self.counts.values()) + self.disconnecting != self.order:
            raise ValueError("spectrum counts and disconnecting vertices must add up to the order")
        if any(c <= 0 for c in self.counts.values()):
            raise ValueError("every spectrum entry must be realized by at least one vertex")

    def count(self, m: int) -> int:
        return self.counts.get(m, 0)

    def items(self) -> List[Tuple[int, int]]:
        return sorted(self.counts.items())


def r_m(spectrum: DeltaSpectrum, m: int) -> Fraction:
    """R_m = |{v : Δ_v = m}| / |V|, in lowest terms."""
    if spectrum.order == 0:
        return Fraction(0)
    return Fraction(spectrum.count(m), spectrum.order)


def _delta_or_none(g: Graph, v: int, base_wiener: int) -> Optional[int]:
    reduced = delete_vertex(g, v)
    if not is_connected(reduced):
        return None
    return base_wiener - wiener(reduced)


def delta_of_vertex(g: Graph, v: int, base_wiener: Optional[int] = None) -> int:
    """
    Δ_v(G) = W(G) - W(G - v), both sides by BFS from scratch.

    Raises:
        DisconnectedGraphError: if g is disconnected
        CutVertexError: if G - v is disconnected
    """
    if base_wiener is None:
        base_wiener = wiener(g)
    delta = _delta_or_none(g, v, base_wiener)
    if delta is None:
        raise CutVertexError(v)
    return delta


def _deltas(g: Graph, vertices: List[int], base_wiener: int,
            threads: int, progress: bool, desc: str) -> List[Optional[int]]:
    task: Callable[[int], Optional[int]] = lambda v: _delta_or_none(g, v, base_wiener)
    bar = tqdm(total=len(vertices), desc=desc, unit="vtx", disable=not progress)
    try:
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = []
                for value in pool.map(task, vertices):
                    results.append(value)
                    bar.update(1)
        else:
            results = []
            for v in vertices:
                results.append(task(v))
                bar.update(1)
    finally:
        bar.close()
    return results


def _tally(order: int, weighted: Iterable[Tuple[Optional[int], int]]) -> DeltaSpectrum:
    counts: Counter = Counter()
    disconnecting = 0
    for delta, weight in weighted:
        if delta is None:
            disconnecting += weight
        else:
            counts[delta] += weight
    return DeltaSpectrum(dict(sorted(counts.items())), disconnecting, order)


def delta_spectrum(g: Graph, threads: int = 1, progress: bool = False,
                   base_wiener: Optional[int] = None) -> DeltaSpectrum:
    """
    Δ_v for every vertex by brute force, one deletion per vertex.

    Raises:
        DisconnectedGraphError: if g is disconnected
    """
    if base_wiener is None:
        base_wiener = wiener(g, threads=threads)
    vertices = list(range(g.order))
    deltas = _deltas(g, vertices, base_wiener, threads, progress, "Spectrum")
    return _tally(g.order, ((d, 1) for d in deltas))


def check_metadata(h: HGraph) -> None:
    """
    Raises:
        MetadataError: if the role metadata disagrees with the graph
    """
    p, g = h.params, h.graph
    if g.order != p.order:
        raise MetadataError(f"graph order {g.order} differs from n(k + n0) = {p.order}")
    if len(h.cycle_vertices) != p.k * p.n or len(h.position_of) != g.order or len(h.role_of) != g.order:
        raise MetadataError("role tables do not cover the graph")
    for v in h.cycle_vertices:
        if g.degree(v) != p.l + 2:
            raise MetadataError(f"cycle vertex {v} has degree {g.degree(v)}, expected l + 2 = {p.l + 2}")
    gadget_degrees = p.gadget.graph().degrees()
    for a in p.gadget.attachments:
        gadget_degrees[a] += p.k
    for j, expected in enumerate(gadget_degrees):
        v = h.gadget_vertex(0, j)
        if g.degree(v) != expected:
            raise MetadataError(f"gadget vertex {v} has degree {g.degree(v)}, expected {expected}")


def orbit_representatives(h: HGraph) -> List[Tuple[int, int]]:
    """
    (vertex, class size) pairs: one cycle vertex standing for all kn of
    them, and every vertex of the gadget copy at position 0 standing for
    its n copies.
    """
    p = h.params
    reps = [(h.cycle_vertex(0, 0), p.k * p.n)]
    reps.extend((v, p.n) for v in h.gadget_copy(0))
    return reps


def orbit_deltas(h: HGraph, threads: int = 1, progress: bool = False,
                 base_wiener: Optional[int] = None) -> List[Tuple[int, int, Optional[int]]]:
    """(vertex, class size, Δ or None) for every orbit representative."""
    check_metadata(h)
    if base_wiener is None:
        base_wiener = wiener(h.graph, threads=threads)
    reps = orbit_representatives(h)
    deltas = _deltas(h.graph, [v for v, _ in reps], base_wiener, threads, progress,
                     f"Orbits {h.label()}")
    return [(v, size, delta) for (v, size), delta in zip(reps, deltas)]


def delta_spectrum_orbit(h: HGraph, threads: int = 1, progress: bool = False,
                         base_wiener: Optional[int] = None) -> DeltaSpectrum:
    """
    Same result as delta_spectrum(h.graph), computing Δ only for the orbit
    representatives given by the construction.

    Raises:
        MetadataError: if the metadata is inconsistent with the graph
    """
    rows = orbit_deltas(h, threads=threads, progress=progress, base_wiener=base_wiener)
    return _tally(h.graph.order, ((delta, size) for _, size, delta in rows))
