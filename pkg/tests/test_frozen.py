# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring,attribute-defined-outside-init
import unittest
import pickle

from planturan.frozen import frozen
from planturan.graph import Graph


@frozen
class Point:
    """
    A point
    """

    def __init__(self, x: int) -> None:
        self.x = x
        self.y = 2 * x


class TestFrozen(unittest.TestCase):

    def test_init_may_assign(self) -> None:
        p = Point(3)
        self.assertEqual((3, 6), (p.x, p.y))

    def test_immutable_after_init(self) -> None:
        p = Point(1)
        with self.assertRaises(AttributeError):
            p.x = 2
        with self.assertRaises(AttributeError):
            del p.y
        with self.assertRaises(AttributeError):
            p.z = 0

    def test_metadata_kept(self) -> None:
        self.assertEqual("__init__", Point.__init__.__name__)
        self.assertEqual("A point", Point.__doc__.strip())

    def test_graph(self) -> None:
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        with self.assertRaises(AttributeError):
            g.n = 4
        with self.assertRaises(AttributeError):
            g.adj = (0, 0, 0)
        h = g.with_vertex(0b101)
        self.assertEqual((3, 2), (g.n, g.edge_count))
        self.assertEqual((4, 4), (h.n, h.edge_count))

    def test_pickled_graph_stays_frozen(self) -> None:
        g = pickle.loads(pickle.dumps(Graph.from_edges(2, [(0, 1)])))
        self.assertEqual(1, g.edge_count)
        with self.assertRaises(AttributeError):
            g.edge_count = 0


if __name__ == "__main__":
    unittest.main()
