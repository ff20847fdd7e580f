"""
Interchange formats: graph6 (header-less, one graph per line), plantri's planar_code, and DOT
"""

from __future__ import annotations
from dataclasses import dataclass
from collections.abc import Iterable, Iterator
from typing import BinaryIO, TextIO

import networkx as nx

from .errors import FormatError, GuardError
from .graph import Graph, MAX_VERTICES


GRAPH6_HEADER = b">>graph6<<"
PLANAR_CODE_HEADER = b">>planar_code"


def to_graph6(g: Graph) -> bytes:
    """
    :return: The graph6 encoding of g without header or trailing newline
    """
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n")


def from_graph6(data: bytes | str) -> Graph:
    """
    Parse one graph6 record; a leading >>graph6<< header is accepted
    :raises FormatError: on malformed input
    """
    raw = data.encode("ascii") if isinstance(data, str) else data
    raw = raw.strip()
    if raw.startswith(GRAPH6_HEADER):
        raw = raw[len(GRAPH6_HEADER) :].strip()
    if not raw:
        raise FormatError("empty graph6 record")
    try:
        parsed = nx.from_graph6_bytes(raw)
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise FormatError(f"malformed graph6 record {raw[:32]!r}: {e}") from e
    if parsed.number_of_nodes() > MAX_VERTICES:
        raise GuardError(f"graph6 record has {parsed.number_of_nodes()} vertices, limit is {MAX_VERTICES}")
    return Graph.from_networkx(parsed)


def read_graph6(stream: TextIO | BinaryIO) -> Iterator[Graph]:
    """
    Yield every graph of a graph6 stream, skipping blank lines
    """
    for line in stream:
        if line.strip():
            yield from_graph6(line)


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> int:
    """
    :return: The number of graphs written
    """
    count = 0
    for g in graphs:
        stream.write(to_graph6(g).decode("ascii") + "\n")
        count += 1
    return count


@dataclass(frozen=True)
class PlanarCode:
    """
    One planar_code record: the graph and its rotation system (clockwise neighbor order per vertex)
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]


def read_planar_code(data: bytes) -> Iterator[PlanarCode]:
    """
    Decode plantri's binary planar_code: per graph the vertex count, then for each vertex its
    1-based neighbors in clockwise order terminated by 0
    Only the one-byte entry variant exists below 256 vertices, which covers every graph we accept
    """
    pos = 0
    if data.startswith(PLANAR_CODE_HEADER):
        end = data.find(b"<<", len(PLANAR_CODE_HEADER))
        if end < 0:
            raise FormatError("unterminated planar_code header")
        pos = end + 2
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise GuardError(f"planar_code two-byte records exceed the {MAX_VERTICES} vertex limit")
        if n > MAX_VERTICES:
            raise GuardError(f"planar_code record has {n} vertices, limit is {MAX_VERTICES}")
        rotation: list[tuple[int, ...]] = []
        for v in range(n):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise FormatError(f"planar_code record truncated at vertex {v}")
                entry = data[pos]
                pos += 1
                if entry == 0:
                    break
                if entry > n:
                    raise FormatError(f"vertex {v} lists neighbor {entry} of {n}")
                nbrs.append(entry - 1)
            rotation.append(tuple(nbrs))
        edges = {(min(u, v), max(u, v)) for u, nbrs in enumerate(rotation) for v in nbrs}
        try:
            g = Graph.from_edges(n, edges)
        except ValueError as e:
            raise FormatError(f"planar_code record is not a simple graph: {e}") from e
        if any(sorted(rotation[v]) != g.neighbors(v) for v in range(n)):
            raise FormatError("planar_code rotation lists are not symmetric")
        yield PlanarCode(g, tuple(rotation))


def write_planar_code(records: Iterable[PlanarCode], stream: BinaryIO, *, header: bool = True) -> None:
    if header:
        stream.write(PLANAR_CODE_HEADER + b"<<")
    for r in records:
        out = bytearray([r.graph.n])
        for nbrs in r.rotation:
            out.extend(v + 1 for v in nbrs)
            out.append(0)
        stream.write(bytes(out))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n) if not g.adj[v])
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
