# src/utils/edgelist.py
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Union

from core.exceptions import EdgeListFormatError, InvalidEdgeError
from core.graph import Graph, build_graph
from utils.format_utils import write_text

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeListDocument:
    """A parsed edge-list file: the graph plus optional cycle-role ids."""
    graph: Graph
    cycle_ids: Optional[List[int]] = None


def format_edge_list(graph: Graph,
                     cycle_ids: Optional[Sequence[int]] = None,
                     comments: Sequence[str] = ()) -> str:
    """
    Serialize a graph as ``p V E`` + ``e u v`` lines (+ ``c id`` role lines).

    Edges are emitted sorted with u < v and LF line endings, so equal graphs
    always serialize to identical bytes.
    """
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"p {graph.order} {graph.edge_count}")
    lines.extend(f"e {u} {v}" for u, v in graph.edges())
    if cycle_ids is not None:
        lines.extend(f"c {v}" for v in sorted(cycle_ids))
    return "\n".join(lines) + "\n"


def parse_edge_list(stream: TextIO) -> EdgeListDocument:
    """
    Parse the edge-list text format.

    A header edge count that disagrees with the distinct edges found is
    logged, not rejected (duplicate lines collapse).

    Raises:
        EdgeListFormatError: on a malformed line or a missing header
    """
    order = None
    declared_edges = None
    edges = []
    cycle_ids: List[int] = []
    for number, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        tag = fields[0]
        try:
            values = [int(f) for f in fields[1:]]
        except ValueError:
            raise EdgeListFormatError(number, f"non-integer field in {line!r}")
        if tag == 'p':
            if order is not None:
                raise EdgeListFormatError(number, "duplicate 'p' header")
            if len(values) != 2:
                raise EdgeListFormatError(number, "expected 'p <V> <E>'")
            if values[0] < 0:
                raise EdgeListFormatError(number, f"negative vertex count {values[0]}")
            order, declared_edges = values
        elif tag == 'e':
            if order is None:
                raise EdgeListFormatError(number, "edge before 'p' header")
            if len(values) != 2:
                raise EdgeListFormatError(number, "expected 'e <u> <v>'")
            edges.append((values[0], values[1]))
        elif tag == 'c':
            if len(values) != 1:
                raise EdgeListFormatError(number, "expected 'c <id>'")
            cycle_ids.append(values[0])
        else:
            raise EdgeListFormatError(number, f"unknown line tag {tag!r}")

    if order is None:
        raise EdgeListFormatError(0, "missing 'p <V> <E>' header")
    try:
        graph = build_graph(order, edges)
    except InvalidEdgeError as e:
        raise EdgeListFormatError(0, str(e))
    if graph.edge_count != declared_edges:
        logger.warning("Header declares %d edges, file contains %d distinct edges",
                       declared_edges, graph.edge_count)
    for v in cycle_ids:
        if not 0 <= v < order:
            raise EdgeListFormatError(0, f"cycle role id {v} out of range")
    return EdgeListDocument(graph, sorted(set(cycle_ids)) if cycle_ids else None)


def read_edge_list(path: Union[str, Path]) -> EdgeListDocument:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Input file not found: {path}")
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            return parse_edge_list(handle)
    except UnicodeDecodeError as e:
        raise EdgeListFormatError(0, f"{path} is not valid UTF-8 text (byte {e.start})")


def write_edge_list(path: Union[str, Path], text: str) -> Path:
    return write_text(path, text)
