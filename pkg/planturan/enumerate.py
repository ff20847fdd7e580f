"""
Isomorph-free generation of unlabeled graphs by canonical augmentation

A graph on k+1 vertices is generated from the graph obtained by deleting its canonical deletion
vertex: among the vertices of minimum degree, the one with the highest canonical position.
A child is kept iff the vertex just added lies in that vertex's orbit, and siblings of the same
parent are deduplicated by canonical encoding, so every class appears once with no global store.
"""

from __future__ import annotations
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from collections.abc import Callable, Iterator
from typing import Any, TextIO
import logging

from tqdm import tqdm

from .canon import canonical_labeling, same_orbit
from .errors import GuardError
from .formats import to_graph6
from .graph import Graph, PatternSpec, detect_double_star
from .log.trace import TRACE
from .planarity import is_planar


ENUMERATION_LIMIT: int = 12
FRONTIER_PER_WORKER: int = 8

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumConstraints:
    """
    What to enumerate: graphs on exactly n vertices with min_edges <= e <= max_edges
    max_edges defaults to n(n-1)/2; forbid is a pattern that must not occur as a subgraph
    """

    n: int
    min_edges: int = 0
    max_edges: int | None = None
    require_planar: bool = False
    forbid: PatternSpec | None = None
    require_connected: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.min_edges <= self.upper <= self.n * (self.n - 1) // 2:
            raise ValueError(f"edge window [{self.min_edges}, {self.upper}] invalid for n={self.n}")

    @property
    def upper(self) -> int:
        """
        The effective max_edges
        """
        return self.n * (self.n - 1) // 2 if self.max_edges is None else self.max_edges


@dataclass
class EnumStats:
    """
    visited counts canonical graphs at every level, emitted those passing every leaf check
    The prune counters count augmentations cut for each reason
    """

    visited: int = 0
    emitted: int = 0
    pruned_planarity: int = 0
    pruned_pattern: int = 0
    pruned_edges: int = 0

    def merge(self, other: EnumStats) -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def to_json(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _masks_by_width(k: int, cap: int) -> list[int]:
    return [m for m in range(1 << k) if m.bit_count() <= cap]


@dataclass
class _Search:
    """
    Depth-first canonical augmentation; owns all mutable search state of one worker
    """

    c: EnumConstraints
    visit: Callable[[Graph], None] | None
    stats: EnumStats = field(default_factory=EnumStats)
    _masks: dict[int, list[int]] = field(default_factory=dict)

    @property
    def degree_cap(self) -> int:
        # A planar graph has a vertex of degree at most 5
        return 5 if self.c.require_planar else self.c.n - 1

    def _reachable(self, k: int, e: int) -> bool:
        """
        :return: True iff a graph on k vertices with e edges can still reach the edge window
        """
        if e > self.c.upper:
            return False
        gain = sum(min(j, self.degree_cap) for j in range(k, self.c.n))
        best = e + gain
        if self.c.require_planar and self.c.n >= 3:
            best = min(best, 3 * self.c.n - 6)
        return best >= self.c.min_edges

    @staticmethod
    def _accepts(child: Graph, perm: tuple[int, ...]) -> bool:
        """
        :return: True iff the last vertex of child is in the orbit of its canonical deletion vertex
        """
        k = child.n - 1
        low = child.min_degree()
        deletion = max((v for v in range(child.n) if child.degree(v) == low), key=lambda v: perm[v])
        return deletion == k or same_orbit(child, k, deletion)

    def _hereditary_ok(self, child: Graph) -> bool:
        if self.c.forbid is not None and detect_double_star(child, self.c.forbid) is not None:
            self.stats.pruned_pattern += 1
            return False
        if self.c.require_planar and not is_planar(child):
            self.stats.pruned_planarity += 1
            return False
        return True

    def children(self, g: Graph) -> Iterator[Graph]:
        """
        Yield the accepted canonical children of g in ascending mask order, counting each visit
        """
        k = g.n
        masks = self._masks.get(k)
        if masks is None:
            masks = self._masks[k] = _masks_by_width(k, self.degree_cap)
        deg = g.degrees()
        seen: set[tuple[int, ...]] = set()
        for mask in masks:
            d = mask.bit_count()
            # The new vertex must have minimum degree in the child
            if any(deg[v] + (mask >> v & 1) < d for v in range(k)):
                continue
            if not self._reachable(k + 1, g.edge_count + d):
                self.stats.pruned_edges += 1
                continue
            child = g.with_vertex(mask)
            enc, perm = canonical_labeling(child)
            if not self._accepts(child, perm):
                continue
            if enc in seen:
                continue
            seen.add(enc)
            if not self._hereditary_ok(child):
                continue
            self.stats.visited += 1
            if _log.isEnabledFor(TRACE):
                _log.log(TRACE, "accepted %s", to_graph6(child).decode())
            yield child

    def leaf(self, g: Graph) -> None:
        if not self.c.min_edges <= g.edge_count <= self.c.upper:
            self.stats.pruned_edges += 1
            return
        if self.c.require_connected and not g.is_connected():
            return
        self.stats.emitted += 1
        if self.visit is not None:
            self.visit(g)

    def run(self, g: Graph) -> None:
        """
        Process the subtree below g; g itself must already be counted
        """
        if g.n == self.c.n:
            self.leaf(g)
            return
        for child in self.children(g):
            self.run(child)


def _guard(c: EnumConstraints, allow_large: bool) -> None:
    if c.n > ENUMERATION_LIMIT and not allow_large:
        raise GuardError(f"enumeration is limited to {ENUMERATION_LIMIT} vertices, got {c.n}")


def enumerate_graphs(
    c: EnumConstraints, visit: Callable[[Graph], None] | None = None, *, allow_large: bool = False
) -> EnumStats:
    """
    Call visit once per isomorphism class of graphs satisfying c
    :param allow_large: Lift the vertex guard
    :raises GuardError: if c.n exceeds the enumeration guard
    """
    _guard(c, allow_large)
    search = _Search(c, visit)
    search.stats.visited = 1
    search.run(Graph(1))
    _log.info("enumerated n=%d: %s", c.n, search.stats.to_json())
    return search.stats


def _collect_identity(g: Graph) -> Graph:
    return g


def _subtree(args: tuple[EnumConstraints, Graph, Callable[[Graph], Any]]) -> tuple[EnumStats, list[Any]]:
    c, root, collect = args
    out: list[Any] = []
    search = _Search(c, lambda g: out.append(collect(g)))
    search.run(root)
    return search.stats, out


def enumerate_parallel(
    c: EnumConstraints,
    workers: int,
    collect: Callable[[Graph], Any] = _collect_identity,
    *,
    allow_large: bool = False,
    progress: bool = False,
) -> tuple[EnumStats, list[Any]]:
    """
    Split the augmentation tree across worker processes
    The coordinator expands levels until the frontier is wide enough, then each frontier node's
    subtree is searched independently; stats and results are merged in frontier order
    :param collect: A picklable module-level function applied to each emitted graph
    :param progress: Show a bar counting emitted graphs (serial) or finished subtrees (parallel)
    :return: The merged stats and the collected results
    """
    _guard(c, allow_large)
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    results: list[Any] = []
    if workers == 1:
        with tqdm(desc=f"enumerate n={c.n}", unit="graph", disable=not progress) as bar:

            def emit(g: Graph) -> None:
                results.append(collect(g))
                bar.update()

            stats = enumerate_graphs(c, emit, allow_large=allow_large)
        return stats, results
    coordinator = _Search(c, lambda g: results.append(collect(g)))
    coordinator.stats.visited = 1
    frontier = [Graph(1)]
    while frontier and len(frontier) < FRONTIER_PER_WORKER * workers and frontier[0].n < c.n - 1:
        frontier = [child for g in frontier for child in coordinator.children(g)]
    _log.debug("frontier of %d graphs on %d vertices", len(frontier), frontier[0].n if frontier else 0)
    stats = coordinator.stats
    with ProcessPoolExecutor(max_workers=workers) as pool:
        done = pool.map(_subtree, [(c, g, collect) for g in frontier])
        bar = tqdm(done, total=len(frontier), desc=f"enumerate n={c.n}", unit="subtree", disable=not progress)
        for sub, out in bar:
            stats.merge(sub)
            results.extend(out)
    _log.info("enumerated n=%d with %d workers: %s", c.n, workers, stats.to_json())
    return stats, results


def write_stream(
    c: EnumConstraints, sink: TextIO, *, workers: int = 1, allow_large: bool = False
) -> EnumStats:
    """
    Stream every emitted graph to sink as graph6 lines
    """
    if workers == 1:
        return enumerate_graphs(
            c, lambda g: sink.write(to_graph6(g).decode("ascii") + "\n"), allow_large=allow_large
        )
    stats, lines = enumerate_parallel(c, workers, to_graph6, allow_large=allow_large)
    for line in lines:
        sink.write(line.decode("ascii") + "\n")
    return stats


def maximal_planar_graphs(n: int) -> list[Graph]:
    """
    :return: One representative per class of planar graphs on n vertices with 3n - 6 edges
    """
    if n < 3:
        raise ValueError("triangulations need at least 3 vertices")
    ret: list[Graph] = []
    enumerate_graphs(EnumConstraints(n, 3 * n - 6, 3 * n - 6, require_planar=True), ret.append)
    return ret
