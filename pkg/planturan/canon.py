"""
Canonical labeling by color refinement plus individualization, with automorphism pruning
"""

from __future__ import annotations
from dataclasses import dataclass
from collections.abc import Sequence

from .formats import to_graph6
from .graph import Graph, iter_bits


Encoding = tuple[int, ...]


@dataclass(frozen=True)
class CanonicalForm:
    """
    encoding is the header-less graph6 of the canonically relabeled graph
    perm[v] is the canonical position of vertex v
    """

    encoding: bytes
    perm: tuple[int, ...]

    def graph(self, g: Graph) -> Graph:
        return g.relabel(self.perm)


def _refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """
    Equitable refinement: split cells by the multiset of neighbor colors until stable
    Colors are ranks of signatures, so the result does not depend on vertex labels
    """
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v])))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == count:
            return colors
        count = len(rank)


def _individualize(colors: list[int], v: int) -> list[int]:
    keyed = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    rank = {k: i for i, k in enumerate(sorted(set(keyed)))}
    return [rank[k] for k in keyed]


def _target_cell(colors: list[int]) -> list[int]:
    """
    :return: The members of the lowest-colored non-singleton cell, or [] if the coloring is discrete
    """
    sizes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        sizes.setdefault(c, []).append(v)
    for c in sorted(sizes):
        if len(sizes[c]) > 1:
            return sizes[c]
    return []


def _orbit(v: int, autos: list[tuple[int, ...]]) -> set[int]:
    """
    :return: The orbit of v under the group generated by autos
    """
    orbit = {v}
    frontier = [v]
    while frontier:
        u = frontier.pop()
        for a in autos:
            if a[u] not in orbit:
                orbit.add(a[u])
                frontier.append(a[u])
    return orbit


class _Search:
    """
    Depth-first search over the individualization tree keeping the largest leaf encoding
    """

    __slots__ = ("adj", "n", "best", "best_lab", "autos")

    def __init__(self, g: Graph) -> None:
        self.adj = g.adj
        self.n = g.n
        self.best: Encoding | None = None
        self.best_lab: list[int] = []
        self.autos: list[tuple[int, ...]] = []

    def leaf(self, colors: list[int]) -> None:
        lab = [0] * self.n
        for v, c in enumerate(colors):
            lab[c] = v
        enc = tuple(sum(1 << colors[u] for u in iter_bits(self.adj[lab[i]])) for i in range(self.n))
        if self.best is None or enc > self.best:
            self.best, self.best_lab = enc, lab
        elif enc == self.best:
            # lab[i] -> best_lab[i] preserves adjacency
            auto = [0] * self.n
            for i in range(self.n):
                auto[lab[i]] = self.best_lab[i]
            self.autos.append(tuple(auto))

    def run(self, colors: list[int], path: tuple[int, ...]) -> None:
        colors = _refine(self.adj, colors)
        cell = _target_cell(colors)
        if not cell:
            self.leaf(colors)
            return
        explored: list[int] = []
        for v in cell:
            fixing = [a for a in self.autos if all(a[p] == p for p in path)]
            if fixing and not _orbit(v, fixing).isdisjoint(explored):
                continue
            explored.append(v)
            self.run(_individualize(colors, v), path + (v,))


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[Encoding, tuple[int, ...]]:
    """
    :param colors: An optional initial vertex coloring that isomorphisms must respect
    :return: (canonical encoding, perm) where perm[v] is the canonical position of v
    """
    search = _Search(g)
    search.run(list(colors) if colors is not None else [0] * g.n, ())
    perm = [0] * g.n
    for i, v in enumerate(search.best_lab):
        perm[v] = i
    # The leaf encoding numbers positions by color, so it is already the relabeled adjacency
    return search.best or (), tuple(perm)


def canonical_form(g: Graph) -> CanonicalForm:
    _, perm = canonical_labeling(g)
    return CanonicalForm(to_graph6(g.relabel(perm)), perm)


def same_orbit(g: Graph, u: int, v: int) -> bool:
    """
    :return: True iff some automorphism of g maps u to v
    """
    if u == v:
        return True
    if g.degree(u) != g.degree(v):
        return False
    base = [0] * g.n
    cu = list(base)
    cu[u] = 1
    cv = list(base)
    cv[v] = 1
    return canonical_labeling(g, cu)[0] == canonical_labeling(g, cv)[0]
