"""
Planarity testing with certificates

The decision procedure is networkx's left-right planarity test; the certificate is either a
rotation system whose face count satisfies Euler's formula or a Kuratowski subdivision.
kuratowski_subdivision is an exhaustive search used to cross-check the fast path on small graphs.
"""

from __future__ import annotations
from dataclasses import dataclass
from collections.abc import Iterator, Sequence
from itertools import combinations
import logging

import networkx as nx

from .errors import CertificateError, GuardError
from .graph import Graph, iter_bits, to_mask


KURATOWSKI_LIMIT: int = 8

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Embedding:
    """
    A combinatorial embedding: rotation[v] lists the neighbors of v in clockwise order
    """

    rotation: tuple[tuple[int, ...], ...]

    def faces(self) -> list[tuple[int, ...]]:
        """
        Trace the face boundaries as closed walks of vertices
        Isolated vertices bound no traced face
        """
        position = [{u: i for i, u in enumerate(r)} for r in self.rotation]
        seen: set[tuple[int, int]] = set()
        ret = []
        for u, r in enumerate(self.rotation):
            for v in r:
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    rb = self.rotation[b]
                    a, b = b, rb[(position[b][a] + 1) % len(rb)]
                ret.append(tuple(walk))
        return ret

    def face_count(self) -> int:
        """
        :return: The number of faces of the plane drawing, counting the shared outer face once
        """
        edged = sum(1 for r in self.rotation if r)
        if not edged:
            return 1
        traced = self.faces()
        # Each component with edges traces its own outer face
        components = _components_of(self.rotation)
        return len(traced) - components + 1

    def check(self, g: Graph) -> None:
        """
        Verify the rotation system matches g and that v - e + f = 1 + #components
        :raises CertificateError: if either fails
        """
        if len(self.rotation) != g.n:
            raise CertificateError(f"rotation covers {len(self.rotation)} of {g.n} vertices")
        for v, r in enumerate(self.rotation):
            if len(r) != len(set(r)) or to_mask(r) != g.adj[v]:
                raise CertificateError(f"rotation at vertex {v} does not list its neighbors")
        lhs = g.n - g.edge_count + self.face_count()
        rhs = 1 + len(g.components())
        if lhs != rhs:
            raise CertificateError(f"Euler check failed: v - e + f = {lhs}, expected {rhs}")


def _components_of(rotation: Sequence[Sequence[int]]) -> int:
    """
    :return: The number of connected components that have at least one edge
    """
    seen: set[int] = set()
    count = 0
    for s, r in enumerate(rotation):
        if s in seen or not r:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            for u in rotation[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return count


@dataclass(frozen=True)
class KuratowskiWitness:
    """
    A subdivision of K5 or K3,3: branch vertices and one internally disjoint path per branch pair
    """

    kind: str
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def check(self, g: Graph) -> None:
        """
        :raises CertificateError: if this is not a subdivision of self.kind inside g
        """
        expected = {"K5": (5, 10, 4), "K3,3": (6, 9, 3)}.get(self.kind)
        if expected is None:
            raise CertificateError(f"unknown Kuratowski graph {self.kind!r}")
        size, count, deg = expected
        if len(set(self.branch)) != size or len(self.paths) != count:
            raise CertificateError(f"{self.kind} needs {size} branch vertices and {count} paths")
        branch = set(self.branch)
        used: set[int] = set()
        pairs: dict[int, set[int]] = {b: set() for b in self.branch}
        for p in self.paths:
            a, b = p[0], p[-1]
            if a not in branch or b not in branch or a == b or b in pairs[a]:
                raise CertificateError(f"path {p} does not join a new pair of branch vertices")
            pairs[a].add(b)
            pairs[b].add(a)
            if any(not g.has_edge(x, y) for x, y in zip(p, p[1:])):
                raise CertificateError(f"path {p} is not a path of the graph")
            interior = set(p[1:-1])
            if interior & (branch | used) or len(interior) != len(p) - 2:
                raise CertificateError(f"path {p} is not internally disjoint")
            used |= interior
        if any(len(i) != deg for i in pairs.values()):
            raise CertificateError(f"branch pairs do not form {self.kind}")
        if self.kind == "K3,3" and any(pairs[a] & pairs[b] for a in pairs for b in pairs[a]):
            raise CertificateError("branch pairs contain a triangle, so they do not form K3,3")

    def to_json(self) -> dict:
        return {"kind": self.kind, "branch": list(self.branch), "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class PlanarityCertificate:
    """
    Exactly one of embedding (planar) or kuratowski (not planar) is set
    """

    planar: bool
    embedding: Embedding | None = None
    kuratowski: KuratowskiWitness | None = None


def is_planar(g: Graph) -> bool:
    n, e = g.n, g.edge_count
    # Every Kuratowski subdivision has at least 9 edges
    if n <= 4 or e < 9:
        return True
    if e > 3 * n - 6:
        return False
    return nx.check_planarity(g.to_networkx())[0]


def check_planarity(g: Graph) -> PlanarityCertificate:
    """
    Decide planarity and attach a verified certificate either way
    """
    planar, extra = nx.check_planarity(g.to_networkx(), counterexample=True)
    if planar:
        emb = Embedding(tuple(tuple(extra.neighbors_cw_order(v)) if g.adj[v] else () for v in range(g.n)))
        emb.check(g)
        return PlanarityCertificate(True, embedding=emb)
    witness = _subdivision_from_edges(list(extra.edges))
    witness.check(g)
    _log.debug("Kuratowski %s on branch vertices %s", witness.kind, witness.branch)
    return PlanarityCertificate(False, kuratowski=witness)


def _subdivision_from_edges(edges: list[tuple[int, int]]) -> KuratowskiWitness:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = sorted(v for v, nbrs in adj.items() if len(nbrs) >= 3)
    kind = "K5" if len(branch) == 5 else "K3,3"
    paths = []
    for b in branch:
        for u in sorted(adj[b]):
            path = [b, u]
            while path[-1] not in branch:
                prev, cur = path[-2], path[-1]
                path.append(next(x for x in adj[cur] if x != prev))
            if path[0] < path[-1]:
                paths.append(tuple(path))
    return KuratowskiWitness(kind, tuple(branch), tuple(sorted(paths)))


# Exhaustive oracle


def _walks(adj: tuple[int, ...], a: int, b: int, free: int) -> Iterator[tuple[int, ...]]:
    """
    Yield the simple a-b paths whose interior lies in free, shortest-first along each branch
    """

    def extend(v: int, seen: int, path: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if adj[v] >> b & 1:
            yield path + (b,)
        for u in iter_bits(adj[v] & free & ~seen):
            yield from extend(u, seen | 1 << u, path + (u,))

    yield from extend(a, 1 << a, (a,))


def _route(adj: tuple[int, ...], pairs: list[tuple[int, int]], free: int) -> list[tuple[int, ...]] | None:
    if not pairs:
        return []
    (a, b), rest = pairs[0], pairs[1:]
    for path in _walks(adj, a, b, free):
        tail = _route(adj, rest, free & ~to_mask(path[1:-1]))
        if tail is not None:
            return [path, *tail]
    return None


def kuratowski_subdivision(g: Graph) -> KuratowskiWitness | None:
    """
    Search every choice of branch vertices for a K5 or K3,3 subdivision
    :return: A witness, or None iff g is planar
    """
    if g.n > KURATOWSKI_LIMIT:
        raise GuardError(f"Kuratowski search is limited to {KURATOWSKI_LIMIT} vertices")
    deg = g.degrees()
    everything = (1 << g.n) - 1
    for branch in combinations([v for v in range(g.n) if deg[v] >= 4], 5):
        paths = _route(g.adj, list(combinations(branch, 2)), everything & ~to_mask(branch))
        if paths is not None:
            return KuratowskiWitness("K5", branch, tuple(paths))
    for six in combinations([v for v in range(g.n) if deg[v] >= 3], 6):
        for rest in combinations(six[1:], 2):
            side = (six[0], *rest)
            other = tuple(v for v in six if v not in side)
            pairs = [(a, b) for a in side for b in other]
            paths = _route(g.adj, pairs, everything & ~to_mask(six))
            if paths is not None:
                return KuratowskiWitness("K3,3", six, tuple(paths))
    return None
