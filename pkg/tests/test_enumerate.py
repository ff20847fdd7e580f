# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring
from itertools import combinations
import contextlib
import unittest
import io
import os

import networkx as nx

from planturan.canon import canonical_form
from planturan.enumerate import (
    EnumConstraints,
    EnumStats,
    enumerate_graphs,
    enumerate_parallel,
    maximal_planar_graphs,
    write_stream,
)
from planturan.errors import GuardError
from planturan.formats import to_graph6
from planturan.graph import Graph, PatternSpec, S33, detect_double_star
from planturan.planarity import is_planar


SLOW = os.environ.get("PLANTURAN_SLOW") == "1"


def collect(c: EnumConstraints) -> list[Graph]:
    ret: list[Graph] = []
    enumerate_graphs(c, ret.append)
    return ret


def labeled_classes(n: int) -> set[bytes]:
    """
    Every labeled graph on n vertices, deduplicated by canonical form
    """
    pairs = list(combinations(range(n), 2))
    ret = set()
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        ret.add(canonical_form(g).encoding)
    return ret


class TestConstraints(unittest.TestCase):

    def test_defaults(self) -> None:
        c = EnumConstraints(5)
        self.assertEqual(10, c.upper)
        self.assertEqual(4, EnumConstraints(5, max_edges=4).upper)

    def test_invalid(self) -> None:
        bad = (
            {"n": 0},
            {"n": 4, "min_edges": 5, "max_edges": 4},
            {"n": 3, "max_edges": 4},
            {"n": 3, "min_edges": -1},
        )
        for kwargs in bad:
            with self.assertRaises(ValueError):
                EnumConstraints(**kwargs)

    def test_guard(self) -> None:
        with self.assertRaises(GuardError):
            enumerate_graphs(EnumConstraints(13))
        with self.assertRaises(GuardError):
            enumerate_parallel(EnumConstraints(13), 2)


class TestCounts(unittest.TestCase):

    def test_all_graphs(self) -> None:
        counts = [len(collect(EnumConstraints(n))) for n in range(1, 8)]
        self.assertEqual([1, 2, 4, 11, 34, 156, 1044], counts)

    def test_against_labeled_oracle(self) -> None:
        for n in range(1, 7):
            with self.subTest(n=n):
                found = {canonical_form(g).encoding for g in collect(EnumConstraints(n))}
                self.assertEqual(labeled_classes(n), found)

    @unittest.skipUnless(SLOW, "set PLANTURAN_SLOW=1")
    def test_against_labeled_oracle_7(self) -> None:
        found = {canonical_form(g).encoding for g in collect(EnumConstraints(7))}
        self.assertEqual(labeled_classes(7), found)

    def test_no_duplicates(self) -> None:
        graphs = collect(EnumConstraints(7))
        self.assertEqual(len(graphs), len({canonical_form(g).encoding for g in graphs}))

    def test_connected(self) -> None:
        counts = [len(collect(EnumConstraints(n, require_connected=True))) for n in range(1, 7)]
        self.assertEqual([1, 1, 2, 6, 21, 112], counts)

    def test_planar(self) -> None:
        counts = [len(collect(EnumConstraints(n, require_planar=True))) for n in range(1, 8)]
        self.assertEqual([1, 2, 4, 11, 33, 142, 822], counts)

    def test_edge_window(self) -> None:
        per_edge = [len(collect(EnumConstraints(5, e, e))) for e in range(11)]
        self.assertEqual([1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1], per_edge)
        self.assertEqual(18, len(collect(EnumConstraints(5, 4, 6))))

    def test_forbidden_pattern(self) -> None:
        graphs = collect(EnumConstraints(4, forbid=PatternSpec(1, 1)))
        self.assertEqual(6, len(graphs))
        self.assertTrue(all(detect_double_star(g, PatternSpec(1, 1)) is None for g in graphs))

    def test_emitted_graphs_satisfy(self) -> None:
        c = EnumConstraints(7, 12, 15, require_planar=True, forbid=S33)
        for g in collect(c):
            self.assertTrue(12 <= g.edge_count <= 15)
            self.assertTrue(is_planar(g))
            self.assertIsNone(detect_double_star(g, S33))

    def test_planar_matches_networkx_filter(self) -> None:
        planar = {canonical_form(g).encoding for g in collect(EnumConstraints(6, require_planar=True))}
        everything = collect(EnumConstraints(6))
        expected = {canonical_form(g).encoding for g in everything if nx.check_planarity(g.to_networkx())[0]}
        self.assertEqual(expected, planar)

    def test_maximal_planar(self) -> None:
        self.assertEqual([1, 1, 1, 2, 5], [len(maximal_planar_graphs(n)) for n in range(3, 8)])
        with self.assertRaises(ValueError):
            maximal_planar_graphs(2)


class TestStats(unittest.TestCase):

    def test_counters(self) -> None:
        stats = enumerate_graphs(EnumConstraints(6, 7, 9, require_planar=True, forbid=PatternSpec(2, 2)))
        self.assertEqual(set(EnumStats().to_json()), set(stats.to_json()))
        self.assertGreater(stats.visited, stats.emitted)
        self.assertGreater(stats.pruned_pattern, 0)
        self.assertGreater(stats.pruned_edges, 0)
        self.assertEqual(0, stats.pruned_planarity)

    def test_planarity_pruned(self) -> None:
        stats = enumerate_graphs(EnumConstraints(6, require_planar=True))
        self.assertGreater(stats.pruned_planarity, 0)

    def test_merge(self) -> None:
        a = EnumStats(visited=3, emitted=1)
        a.merge(EnumStats(visited=2, pruned_edges=4))
        self.assertEqual(EnumStats(visited=5, emitted=1, pruned_edges=4), a)


class TestParallel(unittest.TestCase):

    def check(self, c: EnumConstraints, workers: int) -> None:
        serial: list[bytes] = []
        serial_stats = enumerate_graphs(c, lambda g: serial.append(to_graph6(g)))
        stats, results = enumerate_parallel(c, workers, to_graph6)
        self.assertEqual(sorted(serial), sorted(results))
        self.assertEqual(serial_stats, stats)

    def test_matches_serial(self) -> None:
        self.check(EnumConstraints(7), 2)
        self.check(EnumConstraints(7, 10, 15, require_planar=True, forbid=S33), 3)
        self.check(EnumConstraints(2), 2)

    def test_single_worker(self) -> None:
        stats, results = enumerate_parallel(EnumConstraints(4), 1)
        self.assertEqual(11, len(results))
        self.assertEqual(11, stats.emitted)
        with self.assertRaises(ValueError):
            enumerate_parallel(EnumConstraints(4), 0)

    def test_progress_bar(self) -> None:
        for workers in (1, 2):
            with self.subTest(workers=workers):
                err = io.StringIO()
                with contextlib.redirect_stderr(err):
                    _, results = enumerate_parallel(EnumConstraints(5), workers, progress=True)
                self.assertEqual(34, len(results))
                self.assertIn("enumerate n=5", err.getvalue())
        quiet = io.StringIO()
        with contextlib.redirect_stderr(quiet):
            enumerate_parallel(EnumConstraints(5), 2)
        self.assertEqual("", quiet.getvalue())

    @unittest.skipUnless(SLOW, "set PLANTURAN_SLOW=1")
    def test_matches_serial_n8(self) -> None:
        self.check(EnumConstraints(8, require_planar=True), 4)


class TestWriteStream(unittest.TestCase):

    def test_graph6_lines(self) -> None:
        for workers in (1, 2):
            out = io.StringIO()
            stats = write_stream(EnumConstraints(5, require_connected=True), out, workers=workers)
            lines = out.getvalue().splitlines()
            self.assertEqual(21, stats.emitted)
            self.assertEqual(21, len(lines))


if __name__ == "__main__":
    unittest.main()
