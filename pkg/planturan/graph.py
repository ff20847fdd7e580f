"""
Immutable simple undirected graphs on at most 64 vertices, stored as per-vertex neighbor bitsets,
together with double star S_{m,l} detection
"""

from __future__ import annotations
from dataclasses import dataclass
from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations
from typing import TYPE_CHECKING

from .errors import CertificateError, GuardError
from .frozen import frozen

if TYPE_CHECKING:
    import networkx as nx


MAX_VERTICES: int = 64
BRUTE_FORCE_LIMIT: int = 14


def iter_bits(mask: int) -> Iterator[int]:
    """
    :return: The indices of the set bits of mask, lowest first
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    ret = 0
    for v in vertices:
        ret |= 1 << v
    return ret


@frozen
class Graph:
    """
    An immutable simple undirected graph with vertices 0..n-1
    adj[v] is the bitset of neighbors of v; all edits go through GraphBuilder or return new graphs
    """

    __slots__ = ("n", "adj", "edge_count", "_frozen")

    def __init__(self, n: int, adj: Sequence[int] | None = None) -> None:
        """
        :param n: The vertex count, 1..64
        :param adj: Per-vertex neighbor bitsets; must be symmetric and irreflexive
        """
        if n > MAX_VERTICES:
            raise GuardError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        adj = tuple(adj) if adj is not None else (0,) * n
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for u, mask in enumerate(adj):
            if mask & ~full or mask < 0:
                raise ValueError(f"vertex {u} has neighbors outside 0..{n - 1}")
            if mask >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in iter_bits(mask):
                if not adj[v] >> u & 1:
                    raise ValueError(f"edge {u}-{v} is not symmetric")
        self.n: int = n
        self.adj: tuple[int, ...] = adj
        self.edge_count: int = sum(i.bit_count() for i in adj) // 2

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...], edge_count: int) -> Graph:
        """
        Construct without validation; callers guarantee the invariants
        """
        ret = object.__new__(cls)
        object.__setattr__(ret, "n", n)
        object.__setattr__(ret, "adj", adj)
        object.__setattr__(ret, "edge_count", edge_count)
        object.__setattr__(ret, "_frozen", True)
        return ret

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        b = GraphBuilder(n)
        b.add_edges(edges)
        return b.build()

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        """
        Nodes are relabeled 0..n-1 in sorted order
        """
        nodes = sorted(g.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges if u != v))

    def to_networkx(self) -> nx.Graph:
        import networkx as nx  # pylint: disable=import-outside-toplevel

        ret = nx.Graph()
        ret.add_nodes_from(range(self.n))
        ret.add_edges_from(self.edges())
        return ret

    # Queries

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(i.bit_count() for i in self.adj)

    def max_degree(self) -> int:
        return max(i.bit_count() for i in self.adj)

    def min_degree(self) -> int:
        return min(i.bit_count() for i in self.adj)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """
        :return: Each edge once as (u, v) with u < v, in lexicographic order
        """
        for u, mask in enumerate(self.adj):
            for v in iter_bits(mask >> (u + 1)):
                yield u, u + 1 + v

    def components(self) -> list[int]:
        """
        :return: The vertex bitsets of the connected components, ordered by lowest vertex
        """
        left = (1 << self.n) - 1
        ret = []
        while left:
            seen = frontier = left & -left
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~seen
                seen |= frontier
            ret.append(seen)
            left &= ~seen
        return ret

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    # Derived graphs

    def with_vertex(self, mask: int) -> Graph:
        """
        :return: A new graph with vertex n appended and joined to the vertices in mask
        """
        bit = 1 << self.n
        adj = tuple(a | bit if mask >> i & 1 else a for i, a in enumerate(self.adj)) + (mask,)
        return Graph._trusted(self.n + 1, adj, self.edge_count + mask.bit_count())

    def relabel(self, perm: Sequence[int]) -> Graph:
        """
        :param perm: perm[v] is the new label of vertex v
        """
        adj = [0] * self.n
        for v, mask in enumerate(self.adj):
            adj[perm[v]] = to_mask(perm[u] for u in iter_bits(mask))
        return Graph._trusted(self.n, tuple(adj), self.edge_count)

    def induced(self, mask: int) -> Graph:
        """
        :return: The subgraph induced on mask, relabeled in increasing vertex order
        """
        keep = list(iter_bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        edges = ((index[u], index[v]) for u, v in self.edges() if u in index and v in index)
        return Graph.from_edges(len(keep), edges)

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        adj = self.adj + tuple(a << shift for a in other.adj)
        return Graph(self.n + other.n, adj)

    # Dunder

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"<Graph n={self.n} e={self.edge_count}>"

    def __reduce__(self):
        return Graph, (self.n, self.adj)


class GraphBuilder:
    """
    A mutable staging area for constructing a Graph
    """

    __slots__ = ("_adj",)

    def __init__(self, n: int = 0) -> None:
        self._adj: list[int] = [0] * n

    @property
    def n(self) -> int:
        return len(self._adj)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge {u}-{v} outside 0..{self.n - 1}")
        self._adj[u] |= 1 << v
        self._adj[v] |= 1 << u

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> None:
        for u, v in edges:
            self.add_edge(u, v)

    def remove_edge(self, u: int, v: int) -> None:
        self._adj[u] &= ~(1 << v)
        self._adj[v] &= ~(1 << u)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def build(self) -> Graph:
        return Graph(self.n, self._adj)


@dataclass(frozen=True)
class PatternSpec:
    """
    The double star S_{m,l}: an edge xy with m further leaves on x and l on y
    Normalized so that m <= l
    """

    m: int
    l: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.l < 1:
            raise ValueError(f"double star arms must be positive, got ({self.m}, {self.l})")
        if self.m > self.l:
            m, l = self.l, self.m
            object.__setattr__(self, "m", m)
            object.__setattr__(self, "l", l)

    @classmethod
    def parse(cls, text: str) -> PatternSpec:
        """
        :param text: "m,l" or a single "m" for the balanced S_{m,m}
        """
        parts = [i.strip() for i in text.split(",")]
        if len(parts) == 1:
            parts *= 2
        if len(parts) != 2:
            raise ValueError(f"expected m,l but got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    @property
    def order(self) -> int:
        return self.m + self.l + 2

    def __str__(self) -> str:
        return f"S_{{{self.m},{self.l}}}"


S33 = PatternSpec(3, 3)


@dataclass(frozen=True)
class DoubleStarWitness:
    """
    An embedding of S_{m,l}: the edge xy with x_arms hanging off x and y_arms off y
    """

    x: int
    y: int
    x_arms: frozenset[int]
    y_arms: frozenset[int]

    def validate(self, g: Graph, p: PatternSpec) -> None:
        """
        Check every witness invariant against g
        :raises CertificateError: if any invariant fails
        """
        if not g.has_edge(self.x, self.y):
            raise CertificateError(f"{self.x}-{self.y} is not an edge")
        if sorted((len(self.x_arms), len(self.y_arms))) != [p.m, p.l]:
            raise CertificateError(f"arm sizes do not match {p}")
        if self.x_arms & self.y_arms:
            raise CertificateError("arm sets intersect")
        if {self.x, self.y} & (self.x_arms | self.y_arms):
            raise CertificateError("a center appears among the arms")
        if any(not g.has_edge(self.x, a) for a in self.x_arms):
            raise CertificateError(f"an x arm is not adjacent to {self.x}")
        if any(not g.has_edge(self.y, a) for a in self.y_arms):
            raise CertificateError(f"a y arm is not adjacent to {self.y}")

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "x_arms": sorted(self.x_arms), "y_arms": sorted(self.y_arms)}


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def _take(mask: int, count: int) -> int:
    ret = 0
    for v in iter_bits(mask):
        if not count:
            break
        ret |= 1 << v
        count -= 1
    return ret


def detect_double_star(g: Graph, p: PatternSpec) -> DoubleStarWitness | None:
    """
    S_{m,l} lies on the edge xy (x hosting m arms) iff deg(x) >= m+1, deg(y) >= l+1 and
    the two neighborhoods cover at least m+l vertices besides x and y
    :return: A validated witness, or None when g is S_{m,l}-free
    """
    m, l = p.m, p.l
    adj = g.adj
    for x in range(g.n):
        if adj[x].bit_count() <= m:
            continue
        for y in iter_bits(adj[x]):
            if adj[y].bit_count() <= l:
                continue
            ax = adj[x] & ~(1 << y)
            ay = adj[y] & ~(1 << x)
            if (ax | ay).bit_count() < m + l:
                continue
            common = ax & ay
            x_arms = _take(ax & ~ay, m)
            x_arms |= _take(common, m - x_arms.bit_count())
            y_arms = _take(ay & ~ax, l)
            y_arms |= _take(common & ~x_arms, l - y_arms.bit_count())
            ret = DoubleStarWitness(x, y, frozenset(iter_bits(x_arms)), frozenset(iter_bits(y_arms)))
            ret.validate(g, p)
            return ret
    return None


def brute_force_contains(g: Graph, p: PatternSpec) -> bool:
    """
    Exhaustive S_{m,l} search over every ordered edge and every pair of arm sets
    Exponential; kept as an independent oracle for detect_double_star
    """
    if g.n > BRUTE_FORCE_LIMIT:
        raise GuardError(f"brute force containment is limited to {BRUTE_FORCE_LIMIT} vertices")
    for x in range(g.n):
        for y in g.neighbors(x):
            ax = [v for v in g.neighbors(x) if v != y]
            ay = [v for v in g.neighbors(y) if v != x]
            for x_arms in combinations(ax, p.m):
                used = set(x_arms)
                for _ in combinations([v for v in ay if v not in used], p.l):
                    return True
    return False


def has_heavy_edge(g: Graph) -> bool:
    """
    :return: True iff g has a k-l edge with k >= 7 and l >= 4, which forces S_{3,3}
    """
    deg = g.degrees()
    return any(max(deg[u], deg[v]) >= 7 and min(deg[u], deg[v]) >= 4 for u, v in g.edges())
