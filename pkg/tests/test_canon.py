# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring
from itertools import combinations
import unittest
import random

import networkx as nx

from planturan.canon import canonical_form, canonical_labeling, same_orbit
from planturan.extremal import component_65, double_wheel, prism_line_graph
from planturan.formats import to_graph6
from planturan.graph import Graph


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


class TestCanonicalForm(unittest.TestCase):

    def test_relabel_invariant(self) -> None:
        rng = random.Random(11)
        for g in (double_wheel(9), prism_line_graph(), component_65(), Graph(4)):
            expected = canonical_form(g).encoding
            for _ in range(10):
                self.assertEqual(expected, canonical_form(shuffled(g, rng)).encoding)

    def test_separates_classes(self) -> None:
        rng = random.Random(5)
        graphs = [
            Graph.from_edges(7, [e for e in combinations(range(7), 2) if rng.random() < 0.4])
            for _ in range(40)
        ]
        for a, b in combinations(graphs, 2):
            same = canonical_form(a).encoding == canonical_form(b).encoding
            self.assertEqual(nx.is_isomorphic(a.to_networkx(), b.to_networkx()), same)

    def test_graph(self) -> None:
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        cf = canonical_form(g)
        self.assertEqual(cf.encoding, to_graph6(cf.graph(g)))
        self.assertEqual(sorted(cf.perm), [0, 1, 2, 3])

    def test_colors_respected(self) -> None:
        path = Graph.from_edges(3, [(0, 1), (1, 2)])
        end = canonical_labeling(path, [1, 0, 0])[0]
        self.assertEqual(end, canonical_labeling(path, [0, 0, 1])[0])
        self.assertNotEqual(end, canonical_labeling(path, [0, 1, 0])[0])


class TestSameOrbit(unittest.TestCase):

    def test_path(self) -> None:
        path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        self.assertTrue(same_orbit(path, 0, 3))
        self.assertTrue(same_orbit(path, 1, 2))
        self.assertFalse(same_orbit(path, 0, 1))
        self.assertTrue(same_orbit(path, 2, 2))

    def test_double_wheel(self) -> None:
        g = double_wheel(8)
        self.assertTrue(same_orbit(g, 0, 1))
        self.assertTrue(same_orbit(g, 2, 5))
        self.assertFalse(same_orbit(g, 0, 2))

    def test_equal_degree_other_orbit(self) -> None:
        # a triangle with a pendant path: vertices 1 and 3 both have degree 2
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
        self.assertFalse(same_orbit(g, 1, 3))
        self.assertTrue(same_orbit(g, 1, 2))


if __name__ == "__main__":
    unittest.main()
