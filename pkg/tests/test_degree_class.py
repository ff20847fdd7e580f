# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring
import unittest

from planturan.degree_class import degree_class_report
from planturan.extremal import double_wheel, glued_stars, prism_line_graph, square_antiprism
from planturan.graph import Graph


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


class TestDegreeClassReport(unittest.TestCase):

    def test_four_regular(self) -> None:
        r = degree_class_report(prism_line_graph())
        self.assertEqual((0, 9, 0, 0), (r.m3, r.m4, r.m5, r.m6))
        self.assertEqual(0, r.x)
        self.assertTrue(r.reduced)
        self.assertEqual(("36", "36"), (r.check("edge_identity").lhs, r.check("edge_identity").rhs))
        self.assertTrue(r.ok)
        self.assertTrue(degree_class_report(square_antiprism()).check("edge_identity").holds)

    def test_glued_stars(self) -> None:
        r = degree_class_report(glued_stars(12))
        self.assertEqual((10, 0, 0, 2), (r.m3, r.m4, r.m5, r.m6))
        self.assertEqual(20, r.e_bc)
        self.assertFalse(r.preconditions["no_3_3_edge"])
        self.assertTrue(r.preconditions["min_degree_3"])
        self.assertFalse(r.reduced)
        bipartite = r.check("bc_planar_bipartite")
        self.assertTrue(bipartite.applies and bipartite.holds)
        self.assertEqual(("20", "20"), (bipartite.lhs, bipartite.rhs))
        self.assertFalse(r.check("bc_count").applies)
        self.assertFalse(r.check("edge_identity").applies)
        self.assertFalse(r.check("chain").applies)
        self.assertTrue(r.ok)

    def test_low_minimum_degree(self) -> None:
        r = degree_class_report(cycle(5))
        self.assertFalse(r.preconditions["min_degree_3"])
        self.assertFalse(r.reduced)
        applied = {c.name for c in r.checks if c.applies}
        self.assertEqual({"bc_count"}, applied)
        self.assertTrue(r.ok)

    def test_single_hub(self) -> None:
        star = Graph.from_edges(7, [(0, i) for i in range(1, 7)])
        r = degree_class_report(star)
        self.assertEqual(1, r.m6)
        hub = r.check("bc_single_hub")
        self.assertTrue(hub.applies and hub.holds)
        self.assertFalse(r.check("bc_planar_bipartite").applies)

    def test_bipyramid_observation(self) -> None:
        r = degree_class_report(double_wheel(7))
        self.assertTrue(r.reduced)
        self.assertEqual((0, 5, 2, 0), (r.m3, r.m4, r.m5, r.m6))
        self.assertEqual(("30", "30"), (r.check("edge_identity").lhs, r.check("edge_identity").rhs))
        (observed,) = r.observations
        self.assertEqual("five_two_low", observed.name)
        self.assertTrue(observed.applies)
        self.assertFalse(observed.holds)
        count = r.check("five_count")
        self.assertEqual(("4", "20"), (count.lhs, count.rhs))
        self.assertTrue(r.ok)
        self.assertFalse(r.to_json()["observations"]["five_two_low"]["holds"])


if __name__ == "__main__":
    unittest.main()
