# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring
from itertools import combinations
import unittest
import io

import networkx as nx

from planturan.errors import FormatError, GuardError
from planturan.extremal import component_66, glued_stars
from planturan.formats import (
    PlanarCode,
    from_graph6,
    read_graph6,
    read_planar_code,
    to_dot,
    to_graph6,
    write_graph6,
    write_planar_code,
)
from planturan.graph import Graph
from planturan.planarity import check_planarity


K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


class TestGraph6(unittest.TestCase):

    def test_known_encodings(self) -> None:
        self.assertEqual(b"Bw", to_graph6(K3))
        self.assertEqual(b"@", to_graph6(Graph(1)))
        self.assertEqual(K3, from_graph6("Bw"))
        self.assertEqual(K3, from_graph6(b">>graph6<<Bw\n"))

    def test_preserves_graph(self) -> None:
        for g in (glued_stars(12), component_66(), Graph(5)):
            self.assertEqual(g, from_graph6(to_graph6(g)))

    def test_malformed(self) -> None:
        for bad in ("", "   ", "B"):
            with self.assertRaises(FormatError):
                from_graph6(bad)

    def test_too_large(self) -> None:
        big = to_graph6(Graph(64)).decode()
        self.assertEqual(64, from_graph6(big).n)
        huge = nx.to_graph6_bytes(nx.empty_graph(65), header=False)
        with self.assertRaises(GuardError):
            from_graph6(huge)

    def test_streams(self) -> None:
        out = io.StringIO()
        self.assertEqual(2, write_graph6([K3, component_66()], out))
        text = out.getvalue()
        self.assertEqual(2, text.count("\n"))
        graphs = list(read_graph6(io.StringIO("\n" + text + "\n\n")))
        self.assertEqual([K3, component_66()], graphs)
        self.assertEqual([K3], list(read_graph6(io.BytesIO(b"Bw\n"))))


class TestPlanarCode(unittest.TestCase):

    def test_decode(self) -> None:
        data = b">>planar_code<<" + bytes([3, 2, 3, 0, 3, 1, 0, 1, 2, 0])
        (record,) = list(read_planar_code(data))
        self.assertEqual(K3, record.graph)
        self.assertEqual(((1, 2), (2, 0), (0, 1)), record.rotation)

    def test_embedding_survives(self) -> None:
        k4 = Graph.from_edges(4, list(combinations(range(4), 2)))
        emb = check_planarity(k4).embedding
        assert emb is not None
        out = io.BytesIO()
        write_planar_code([PlanarCode(k4, emb.rotation), PlanarCode(K3, ((1, 2), (2, 0), (0, 1)))], out)
        records = list(read_planar_code(out.getvalue()))
        self.assertEqual([k4, K3], [r.graph for r in records])
        self.assertEqual(emb.rotation, records[0].rotation)

    def test_headerless(self) -> None:
        out = io.BytesIO()
        write_planar_code([PlanarCode(K3, ((1, 2), (2, 0), (0, 1)))], out, header=False)
        self.assertEqual(bytes([3, 2, 3, 0, 3, 1, 0, 1, 2, 0]), out.getvalue())

    def test_malformed(self) -> None:
        with self.assertRaises(FormatError):
            list(read_planar_code(b">>planar_code"))
        with self.assertRaises(FormatError):
            list(read_planar_code(bytes([3, 2, 3, 0, 3])))
        with self.assertRaises(FormatError):
            list(read_planar_code(bytes([2, 3, 0, 1, 0])))
        with self.assertRaises(FormatError):
            list(read_planar_code(bytes([2, 2, 0, 0])))
        with self.assertRaises(GuardError):
            list(read_planar_code(bytes([0, 0, 1])))
        with self.assertRaises(GuardError):
            list(read_planar_code(bytes([65])))


class TestDot(unittest.TestCase):

    def test_dot(self) -> None:
        g = Graph.from_edges(3, [(1, 0)])
        self.assertEqual("graph H {\n  2;\n  0 -- 1;\n}\n", to_dot(g, "H"))


if __name__ == "__main__":
    unittest.main()
