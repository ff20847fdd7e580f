"""
Degree-class counting for S_{3,3}-free planar graphs

Vertices split into A (degree 4 or 5), B (degree 3) and C (degree at least 6). Once the graph has
minimum degree 3, no 3-3 edge, no 6-6, 6-5 or 6-4 edge and no 7+-4+ edge, every edge meets B or
lies inside A, which turns the edge count into a function of the class sizes and the A-B edges.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .starblock import Check


@dataclass(frozen=True)
class DegreeClassReport:
    """
    x counts A-B edges and e_bc counts B-C edges, both measured directly
    observations are reported but not required to hold; a degree 5 vertex may see no low neighbor
    even in a reduced graph, as in the pentagonal bipyramid
    """

    m3: int
    m4: int
    m5: int
    m6: int
    x: int
    e_bc: int
    preconditions: dict[str, bool]
    checks: tuple[Check, ...]
    observations: tuple[Check, ...] = ()

    @property
    def reduced(self) -> bool:
        return all(self.preconditions.values())

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks if c.applies)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {
            "m3": self.m3,
            "m4": self.m4,
            "m5": self.m5,
            "m6": self.m6,
            "x": self.x,
            "e_bc": self.e_bc,
            "preconditions": dict(self.preconditions),
            "checks": {c.name: c.to_json() for c in self.checks},
            "observations": {c.name: c.to_json() for c in self.observations},
            "ok": self.ok,
        }


def _degree_class(d: int) -> str:
    if d == 3:
        return "B"
    if d in (4, 5):
        return "A"
    return "C" if d >= 6 else "-"


def _edge_kinds(g: Graph) -> dict[str, bool]:
    deg = g.degrees()
    has = {"33": False, "6heavy": False, "7_4": False}
    for u, v in g.edges():
        lo, hi = sorted((deg[u], deg[v]))
        has["33"] |= lo == 3 and hi == 3
        has["6heavy"] |= hi == 6 and lo in (4, 5, 6)
        has["7_4"] |= hi >= 7 and lo >= 4
    return has


def degree_class_report(g: Graph) -> DegreeClassReport:
    """
    Count the classes and evaluate whichever edge-count relations apply to g
    """
    deg = g.degrees()
    m = g.n
    e = g.edge_count
    m3 = deg.count(3)
    m4 = deg.count(4)
    m5 = deg.count(5)
    m6 = sum(1 for d in deg if d >= 6)
    pairs = [frozenset((_degree_class(deg[u]), _degree_class(deg[v]))) for u, v in g.edges()]
    x = pairs.count(frozenset("AB"))
    e_bc = pairs.count(frozenset("BC"))
    kinds = _edge_kinds(g)
    pre = {
        "min_degree_3": g.min_degree() >= 3,
        "no_3_3_edge": not kinds["33"],
        "no_6_4plus_edge": not kinds["6heavy"],
        "no_7plus_4plus_edge": not kinds["7_4"],
    }
    reduced = all(pre.values())
    by_class = 6 * m3 + 4 * m4 + 5 * m5 - x
    bipartite = 2 * (m3 + m6) - 4
    checks = [
        Check("bc_count", str(e_bc), str(3 * m3 - x), not kinds["33"], kinds["33"] or e_bc <= 3 * m3 - x),
        Check("edge_identity", str(2 * e), str(by_class), reduced, 2 * e == by_class),
        Check("bc_planar_bipartite", str(e_bc), str(bipartite), m6 >= 2, m6 < 2 or e_bc <= bipartite),
        Check("bc_single_hub", str(e_bc), str(m3), m6 == 1, m6 != 1 or e_bc <= m3),
    ]
    if m6 >= 2:
        bound = Fraction(5 * m, 2) - Fraction(3 * m6, 2) - Fraction(m4, 2) - 2
    else:
        bound = Fraction(5 * m, 2) - Fraction(m3, 2) - Fraction(m4, 2) - Fraction(5, 2)
    chain_applies = reduced and m6 >= 1
    checks.append(Check("chain", str(e), str(bound), chain_applies, not chain_applies or e <= bound))
    flat = reduced and m6 == 0
    low_fives = all(
        sum(1 for u in g.neighbors(v) if deg[u] <= 3) >= 2 for v in range(g.n) if deg[v] == 5
    )
    observed = Check("five_two_low", str(low_fives), "True", flat, not flat or low_fives)
    low = 3 * m3 + 4 * m4
    checks.append(Check("five_count", str(2 * m5), str(low), flat, not flat or 2 * m5 <= low))
    return DegreeClassReport(m3, m4, m5, m6, x, e_bc, pre, tuple(checks), (observed,))
