"""
Extremal constructions: the graphs that attain each planar Turan value, plus a bounded search
for the sporadic ones. Every constructed graph is verified before it is returned.
"""

from __future__ import annotations
from dataclasses import dataclass
from collections.abc import Callable, Iterator
from enum import Enum
from functools import cache, reduce
from itertools import combinations, product
import logging
import random

import networkx as nx

from .enumerate import EnumConstraints, enumerate_graphs, maximal_planar_graphs
from .errors import ConstructionError, GuardError, RecipeRangeError
from .graph import Graph, GraphBuilder, PatternSpec, S33, detect_double_star
from .planarity import is_planar


SEARCH_LIMIT: int = 14
EXHAUSTIVE_LIMIT: int = 10

_log = logging.getLogger(__name__)


class Recipe(Enum):
    DOUBLE_WHEEL = "double-wheel"
    TRIANGLE_FOREST = "triangle-forest"
    GLUED_STARS = "glued-stars"
    FOUR_REGULAR_8 = "four-regular-8"
    FOUR_REGULAR_9 = "four-regular-9"
    COMPONENT_66 = "component-66"
    COMPONENT_65 = "component-65"
    MAXIMAL_PLANAR = "maximal-planar"


# Builders


def double_wheel(n: int) -> Graph:
    """
    Hubs 0 and 1, not adjacent, each joined to every vertex of the cycle 2..n-1
    """
    b = GraphBuilder(n)
    ring = list(range(2, n))
    for i, v in enumerate(ring):
        b.add_edges([(0, v), (1, v), (v, ring[(i + 1) % len(ring)])])
    return b.build()


def triangle_forest(n: int) -> Graph:
    """
    Disjoint triangles; the remainder is a K2 when n = 2 mod 3 and a K_{1,3} replaces one
    triangle plus the leftover vertex when n = 1 mod 3
    """
    b = GraphBuilder(n)
    triangles = n // 3 - (1 if n % 3 == 1 else 0)
    for i in range(triangles):
        a = 3 * i
        b.add_edges([(a, a + 1), (a + 1, a + 2), (a, a + 2)])
    rest = 3 * triangles
    if n % 3 == 2:
        b.add_edge(rest, rest + 1)
    elif n % 3 == 1:
        b.add_edges((rest, rest + i) for i in (1, 2, 3))
    return b.build()


def glued_stars(n: int) -> Graph:
    """
    Two non-adjacent centers 0 and 1 joined to all n-2 peripherals, which are matched in
    consecutive pairs; for odd n the last peripheral is left with degree 2
    """
    b = GraphBuilder(n)
    for p in range(2, n):
        b.add_edges([(0, p), (1, p)])
    b.add_edges((p, p + 1) for p in range(2, n - 1, 2))
    return b.build()


def square_antiprism() -> Graph:
    b = GraphBuilder(8)
    for i in range(4):
        j = (i + 1) % 4
        b.add_edges([(i, j), (4 + i, 4 + j), (i, 4 + i), (i, 4 + j)])
    return b.build()


def prism_line_graph() -> Graph:
    """
    The line graph of the triangular prism: 4-regular and planar on 9 vertices
    """
    return Graph.from_networkx(nx.line_graph(nx.circular_ladder_graph(3)))


def component_66() -> Graph:
    """
    A 6-6 edge 0-1 whose five common neighbors 2..6 form a path
    """
    b = GraphBuilder(7)
    b.add_edge(0, 1)
    for p in range(2, 7):
        b.add_edges([(0, p), (1, p)])
    b.add_edges((p, p + 1) for p in range(2, 6))
    return b.build()


def component_65() -> Graph:
    """
    Vertex 0 joined to the hexagon 1..6 with chords h0h2, h0h3 and h3h5 (h_i = i + 1),
    giving degrees 6, 5, 3, 4, 5, 3, 4
    """
    b = GraphBuilder(7)
    hexagon = list(range(1, 7))
    for i, h in enumerate(hexagon):
        b.add_edges([(0, h), (h, hexagon[(i + 1) % 6])])
    b.add_edges([(hexagon[0], hexagon[2]), (hexagon[0], hexagon[3]), (hexagon[3], hexagon[5])])
    return b.build()


def maximal_planar(n: int) -> Graph:
    if n == 3:
        return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    if n == 4:
        return Graph.from_edges(4, list(combinations(range(4), 2)))
    return double_wheel(n)


@dataclass(frozen=True)
class _Spec:
    build: Callable[[int], Graph]
    pattern: PatternSpec
    edges: Callable[[int], int]
    low: int | None
    high: int | None


_SPECS: dict[Recipe, _Spec] = {
    Recipe.DOUBLE_WHEEL: _Spec(double_wheel, PatternSpec(4, 4), lambda n: 3 * n - 6, 5, None),
    Recipe.TRIANGLE_FOREST: _Spec(
        triangle_forest, PatternSpec(1, 1), lambda n: n if n % 3 == 0 else n - 1, 3, None
    ),
    Recipe.GLUED_STARS: _Spec(glued_stars, S33, lambda n: 5 * n // 2 - 5, 10, None),
    Recipe.FOUR_REGULAR_8: _Spec(lambda _: square_antiprism(), S33, lambda _: 16, None, None),
    Recipe.FOUR_REGULAR_9: _Spec(lambda _: prism_line_graph(), S33, lambda _: 18, None, None),
    Recipe.COMPONENT_66: _Spec(lambda _: component_66(), S33, lambda _: 15, None, None),
    Recipe.COMPONENT_65: _Spec(lambda _: component_65(), S33, lambda _: 15, None, None),
    Recipe.MAXIMAL_PLANAR: _Spec(maximal_planar, S33, lambda n: 3 * n - 6, 3, 7),
}

_FIXED_ORDER = {
    Recipe.FOUR_REGULAR_8: 8,
    Recipe.FOUR_REGULAR_9: 9,
    Recipe.COMPONENT_66: 7,
    Recipe.COMPONENT_65: 7,
}


@dataclass(frozen=True)
class ConstructionRecipe:
    """
    A recipe and, for the parametrized families, its vertex count
    """

    recipe: Recipe
    n: int | None = None

    def __post_init__(self) -> None:
        spec = _SPECS[self.recipe]
        if self.recipe in _FIXED_ORDER:
            fixed = _FIXED_ORDER[self.recipe]
            if self.n not in (None, fixed):
                raise RecipeRangeError(f"{self.recipe.value} has exactly {fixed} vertices")
            object.__setattr__(self, "n", fixed)
            return
        if self.n is None:
            raise RecipeRangeError(f"{self.recipe.value} needs a vertex count")
        if (spec.low is not None and self.n < spec.low) or (spec.high is not None and self.n > spec.high):
            high = spec.high or "any"
            raise RecipeRangeError(f"{self.recipe.value} needs {spec.low} <= n <= {high}, got {self.n}")

    @classmethod
    def parse(cls, name: str, n: int | None = None) -> ConstructionRecipe:
        try:
            recipe = Recipe(name)
        except ValueError as e:
            raise RecipeRangeError(f"unknown recipe {name!r}; choose from {[r.value for r in Recipe]}") from e
        return cls(recipe, n)

    @property
    def order(self) -> int:
        assert self.n is not None  # set by __post_init__
        return self.n

    @property
    def pattern(self) -> PatternSpec:
        return _SPECS[self.recipe].pattern

    @property
    def expected_edges(self) -> int:
        return _SPECS[self.recipe].edges(self.order)


def verify_construction(g: Graph, pattern: PatternSpec, edges: int) -> None:
    """
    :raises ConstructionError: unless g is planar, pattern-free and has exactly edges edges
    """
    if g.edge_count != edges:
        raise ConstructionError(f"expected {edges} edges, built {g.edge_count}")
    if not is_planar(g):
        raise ConstructionError("construction is not planar")
    if (w := detect_double_star(g, pattern)) is not None:
        raise ConstructionError(f"construction contains {pattern} on edge {w.x}-{w.y}")


def construct(r: ConstructionRecipe) -> Graph:
    spec = _SPECS[r.recipe]
    g = spec.build(r.order)
    verify_construction(g, spec.pattern, r.expected_edges)
    if r.recipe in (Recipe.FOUR_REGULAR_8, Recipe.FOUR_REGULAR_9) and set(g.degrees()) != {4}:
        raise ConstructionError(f"{r.recipe.value} is not 4-regular")
    _log.debug("constructed %s on %d vertices with %d edges", r.recipe.value, g.n, g.edge_count)
    return g


# Sporadic search


@cache
def _catalog(k: int) -> tuple[Graph, ...]:
    """
    The densest planar graphs on k vertices used as building blocks
    """
    if k == 1:
        return (Graph(1),)
    if k == 2:
        return (Graph.from_edges(2, [(0, 1)]),)
    return tuple(maximal_planar_graphs(k))


def _trim(g: Graph, target: int) -> Graph:
    """
    Drop the lexicographically last edges until target remain; both properties are preserved
    """
    keep = list(g.edges())[:target]
    return Graph.from_edges(g.n, keep)


def _accept(g: Graph, p: PatternSpec, target: int) -> Graph | None:
    if g.edge_count < target or not is_planar(g) or detect_double_star(g, p) is not None:
        return None
    return _trim(g, target)


def _partitions(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k, *rest]


def _from_unions(n: int, p: PatternSpec, target: int) -> Graph | None:
    for sizes in _partitions(n, 7):
        if sum(3 * k - 6 if k >= 3 else k - 1 for k in sizes) < target:
            continue
        choices = [[h for h in _catalog(k) if detect_double_star(h, p) is None] for k in sizes]
        for parts in product(*choices):
            g = reduce(Graph.disjoint_union, parts)
            if (found := _accept(g, p, target)) is not None:
                _log.info("found %d-edge graph as a union of parts %s", target, sizes)
                return found
    return None


def _glue(a: Graph, b: Graph, pairs: tuple[tuple[int, int], ...]) -> Graph:
    """
    Identify vertex a_i with b_j for each (i, j) in pairs
    """
    index = {}
    nxt = a.n
    for v in range(b.n):
        match = next((i for i, j in pairs if j == v), None)
        if match is None:
            index[v] = nxt
            nxt += 1
        else:
            index[v] = match
    edges = set(a.edges())
    edges |= {tuple(sorted((index[u], index[v]))) for u, v in b.edges()}
    return Graph.from_edges(nxt, edges)


def _from_gluing(n: int, p: PatternSpec, target: int) -> Graph | None:
    parts = [component_66(), component_65(), *_catalog(7), *_catalog(6)]
    for a, b in combinations(parts, 2):
        shared = a.n + b.n - n
        if not 1 <= shared <= 3:
            continue
        low_a = [v for v in range(a.n) if a.degree(v) <= 3]
        low_b = [v for v in range(b.n) if b.degree(v) <= 3]
        for left in combinations(low_a, shared):
            for right in combinations(low_b, shared):
                if (found := _accept(_glue(a, b, tuple(zip(left, right))), p, target)) is not None:
                    _log.info("found %d-edge graph by gluing over %d vertices", target, shared)
                    return found
    return None


def _greedy(n: int, p: PatternSpec, target: int, budget: int, seed: int) -> Graph | None:
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(budget):
        rng.shuffle(pairs)
        b = GraphBuilder(n)
        for u, v in pairs:
            b.add_edge(u, v)
            g = b.build()
            if not is_planar(g) or detect_double_star(g, p) is not None:
                b.remove_edge(u, v)
        if (found := _accept(b.build(), p, target)) is not None:
            _log.info("found %d-edge graph by greedy augmentation", target)
            return found
    return None


def _exhaustive(n: int, p: PatternSpec, target: int) -> Graph | None:
    found: list[Graph] = []

    def keep(g: Graph) -> None:
        if not found:
            found.append(g)

    enumerate_graphs(EnumConstraints(n, target, target, require_planar=True, forbid=p), keep)
    return found[0] if found else None


def search_extremal(
    n: int, p: PatternSpec, target_edges: int, *, budget: int = 200, seed: int = 0
) -> Graph | None:
    """
    Look for a planar p-free graph on n vertices with exactly target_edges edges
    Tries disjoint unions of triangulations, then gluing catalog components over low-degree
    vertices, then greedy augmentation; for n <= 10 an exhaustive enumeration settles the rest
    :param budget: Greedy restarts
    :return: A verified graph, or None if none was found
    """
    if n > SEARCH_LIMIT:
        raise GuardError(f"extremal search is limited to {SEARCH_LIMIT} vertices, got {n}")
    if n < 1 or target_edges < 0 or target_edges > (3 * n - 6 if n >= 3 else n * (n - 1) // 2):
        return None
    for attempt in (
        lambda: _from_unions(n, p, target_edges),
        lambda: _from_gluing(n, p, target_edges),
        lambda: _greedy(n, p, target_edges, budget, seed),
    ):
        if (g := attempt()) is not None:
            verify_construction(g, p, target_edges)
            return g
    if n <= EXHAUSTIVE_LIMIT:
        g = _exhaustive(n, p, target_edges)
        if g is not None:
            verify_construction(g, p, target_edges)
        return g
    _log.info("no %d-edge graph on %d vertices within budget", target_edges, n)
    return None
