"""
Star-block decompositions of S_{3,3}-free planar graphs and their weight certificates

Every vertex of degree at least 5 is placed in exactly one elementary star-block, scanned in a fixed
priority order. Blocks may then absorb potential vertices while a block exceeds its weight bound.
The audit recomputes every weight identity and inequality from the graph and the base alone.
"""

from __future__ import annotations
from dataclasses import dataclass
from collections.abc import Iterator, Sequence
from enum import Enum
from fractions import Fraction
from itertools import combinations
import logging

from .errors import BaseConstructionError, CertificateError, NotPlanarError, PatternFoundError
from .graph import Graph, S33, detect_double_star, iter_bits, to_mask
from .log.trace import TRACE
from .planarity import check_planarity, is_planar
from .weight import QuarterWeight, ZERO


_log = logging.getLogger(__name__)


class BlockKind(Enum):
    STAR5PLUS_3MINUS = "Star5Plus3Minus"
    STAR5_4MINUS = "Star5_4Minus"
    EDGE66 = "Edge66"
    EDGE65 = "Edge65"
    EDGE64 = "Edge64"
    EDGE55 = "Edge55"
    PATH545 = "Path545"


class BlockClass(Enum):
    """
    B0: no shared vertex; B2: some vertex lies in three blocks; B1: shared, but no such vertex
    """

    B0 = "B0"
    B1 = "B1"
    B2 = "B2"


# Blocks


def _w0_quarters(g: Graph, mask: int) -> int:
    return 2 * sum(g.degree(v) for v in iter_bits(mask))


def peripheral_mask(g: Graph, block: int) -> int:
    """
    A block vertex is peripheral if it has degree <= 3 and a neighbor outside the block,
    or degree 4 and exactly two neighbors outside
    """
    ret = 0
    for v in iter_bits(block):
        d = g.degree(v)
        out = (g.adj[v] & ~block).bit_count()
        if (d <= 3 and out >= 1) or (d == 4 and out == 2):
            ret |= 1 << v
    return ret


def is_potential(g: Graph, v: int, core: int) -> bool:
    """
    :return: True iff v lies outside core and may be absorbed by a block grown from core
    """
    if core >> v & 1:
        return False
    d = g.degree(v)
    inside = (g.adj[v] & core).bit_count()
    return (d <= 3 and inside >= 1) or (d == 4 and inside == 2)


@dataclass(frozen=True)
class StarBlock:
    """
    One block of a base; everything but kind, centers, core and extension is derived from the base
    w0 and w are quarter-unit exact; w = w0 + s/2 + s'/4 + (1 if a member lies in three blocks)
    """

    kind: BlockKind
    centers: tuple[int, ...]
    core: frozenset[int]
    extension: frozenset[int]
    peripheral: frozenset[int]
    shared_deg_le3: frozenset[int]
    shared_deg4: frozenset[int]
    has_triple_shared: bool
    w0: QuarterWeight
    w: QuarterWeight

    @property
    def vertices(self) -> frozenset[int]:
        return self.core | self.extension

    @property
    def v_count(self) -> int:
        return len(self.core) + len(self.extension)

    @property
    def shared(self) -> frozenset[int]:
        return self.shared_deg_le3 | self.shared_deg4

    @property
    def block_class(self) -> BlockClass:
        if not self.shared:
            return BlockClass.B0
        return BlockClass.B2 if self.has_triple_shared else BlockClass.B1


@dataclass(frozen=True)
class _Part:
    kind: BlockKind
    centers: tuple[int, ...]
    core: int
    extension: int = 0

    @property
    def mask(self) -> int:
        return self.core | self.extension


@dataclass(frozen=True)
class StarBlockBase:
    """
    A star-block base of G1 together with the residual G2 of vertices of degree at most 4
    multiplicity[v] is the number of blocks containing v
    """

    n: int
    blocks: tuple[StarBlock, ...]
    g1_vertices: frozenset[int]
    g2_vertices: frozenset[int]
    multiplicity: tuple[int, ...]
    class_of: tuple[BlockClass, ...]
    t0: int
    t1: int
    t2: int
    r1: int
    r2: int
    r3: int

    @property
    def t(self) -> int:
        return self.t1 + self.t2

    def _parts(self) -> list[_Part]:
        return [_Part(b.kind, b.centers, to_mask(b.core), to_mask(b.extension)) for b in self.blocks]

    def check_invariants(self, g: Graph) -> None:
        """
        Verify coverage, uniqueness, the peripheral intersection condition and the counters
        :raises CertificateError: on the first violation
        """
        masks = [to_mask(b.vertices) for b in self.blocks]
        for v in range(g.n):
            holders = sum(1 for m in masks if m >> v & 1)
            if g.degree(v) >= 5 and holders != 1:
                raise CertificateError(f"vertex {v} of degree {g.degree(v)} lies in {holders} blocks")
            if holders != self.multiplicity[v]:
                raise CertificateError(f"stale multiplicity at vertex {v}")
        if not _intersections_peripheral(g, masks):
            raise CertificateError("two blocks meet in a non-peripheral vertex")
        for v in range(g.n):
            if self.multiplicity[v] >= 2 and not 2 <= g.degree(v) <= 4:
                raise CertificateError(f"shared vertex {v} has degree {g.degree(v)}")
        if to_mask(self.g1_vertices) != _union(masks) or self.g1_vertices & self.g2_vertices:
            raise CertificateError("G1 and G2 do not partition the vertices")
        if any(g.degree(v) > 4 for v in self.g2_vertices):
            raise CertificateError("G2 contains a vertex of degree above 4")
        expected = _counters(g, self.multiplicity)
        if (self.r1, self.r2, self.r3) != expected:
            raise CertificateError(f"r counters {(self.r1, self.r2, self.r3)} should be {expected}")

    def to_json(self) -> dict:
        return {
            "blocks": [
                {
                    "kind": b.kind.value,
                    "centers": list(b.centers),
                    "core": sorted(b.core),
                    "extension": sorted(b.extension),
                    "shared": sorted(b.shared),
                    "class": b.block_class.value,
                    "w0": str(b.w0),
                    "w": str(b.w),
                }
                for b in self.blocks
            ],
            "g2": sorted(self.g2_vertices),
            "t": [self.t0, self.t1, self.t2],
            "r": [self.r1, self.r2, self.r3],
        }


def _union(masks: Sequence[int]) -> int:
    ret = 0
    for m in masks:
        ret |= m
    return ret


def _intersections_peripheral(g: Graph, masks: Sequence[int]) -> bool:
    periph = [peripheral_mask(g, m) for m in masks]
    for i, j in combinations(range(len(masks)), 2):
        common = masks[i] & masks[j]
        if common & ~(periph[i] & periph[j]):
            return False
    return True


def _counters(g: Graph, multiplicity: Sequence[int]) -> tuple[int, int, int]:
    r1 = sum(1 for v, k in enumerate(multiplicity) if k == 2 and g.degree(v) <= 3)
    r2 = sum(1 for v, k in enumerate(multiplicity) if k == 2 and g.degree(v) == 4)
    r3 = sum(1 for k in multiplicity if k >= 3)
    return r1, r2, r3


def _assemble(g: Graph, parts: Sequence[_Part]) -> StarBlockBase:
    multiplicity = [0] * g.n
    for p in parts:
        for v in iter_bits(p.mask):
            multiplicity[v] += 1
    triple = to_mask(v for v, k in enumerate(multiplicity) if k >= 3)
    shared = to_mask(v for v, k in enumerate(multiplicity) if k >= 2)
    blocks = []
    for p in parts:
        mine = p.mask & shared
        le3 = to_mask(v for v in iter_bits(mine) if g.degree(v) <= 3)
        deg4 = mine & ~le3
        w0 = _w0_quarters(g, p.mask)
        bonus = 2 * le3.bit_count() + deg4.bit_count() + (4 if p.mask & triple else 0)
        blocks.append(
            StarBlock(
                kind=p.kind,
                centers=p.centers,
                core=frozenset(iter_bits(p.core)),
                extension=frozenset(iter_bits(p.extension)),
                peripheral=frozenset(iter_bits(peripheral_mask(g, p.mask))),
                shared_deg_le3=frozenset(iter_bits(le3)),
                shared_deg4=frozenset(iter_bits(deg4)),
                has_triple_shared=bool(p.mask & triple),
                w0=QuarterWeight(w0),
                w=QuarterWeight(w0 + bonus),
            )
        )
    g1 = _union([p.mask for p in parts])
    tags = tuple(b.block_class for b in blocks)
    r1, r2, r3 = _counters(g, multiplicity)
    return StarBlockBase(
        n=g.n,
        blocks=tuple(blocks),
        g1_vertices=frozenset(iter_bits(g1)),
        g2_vertices=frozenset(v for v in range(g.n) if not g1 >> v & 1),
        multiplicity=tuple(multiplicity),
        class_of=tags,
        t0=tags.count(BlockClass.B0),
        t1=tags.count(BlockClass.B1),
        t2=tags.count(BlockClass.B2),
        r1=r1,
        r2=r2,
        r3=r3,
    )


# Base construction


def _closed(g: Graph, v: int) -> int:
    return g.adj[v] | 1 << v


def _stars(g: Graph, lo: int, hi: int | None, leaf_cap: int) -> Iterator[tuple[tuple[int, ...], int]]:
    for c in range(g.n):
        d = g.degree(c)
        if d >= lo and (hi is None or d <= hi) and all(g.degree(u) <= leaf_cap for u in iter_bits(g.adj[c])):
            yield (c,), _closed(g, c)


def _edges(g: Graph, du: int, dv: int) -> Iterator[tuple[tuple[int, ...], int]]:
    for u in range(g.n):
        if g.degree(u) != du:
            continue
        for v in iter_bits(g.adj[u]):
            if g.degree(v) == dv and (du != dv or u < v):
                yield (u, v), _closed(g, u) | _closed(g, v)


def _edge64(g: Graph) -> Iterator[tuple[tuple[int, ...], int]]:
    for u in range(g.n):
        if g.degree(u) == 6 and any(g.degree(v) == 4 for v in iter_bits(g.adj[u])):
            yield (u,), _closed(g, u)


def _paths545(g: Graph) -> Iterator[tuple[tuple[int, ...], int]]:
    for mid in range(g.n):
        if g.degree(mid) != 4:
            continue
        fives = [u for u in iter_bits(g.adj[mid]) if g.degree(u) == 5]
        for u, w in combinations(fives, 2):
            if not g.has_edge(u, w):
                yield (u, mid, w), _closed(g, u) | _closed(g, w)


def _kind_of_small_star(g: Graph, c: int) -> BlockKind:
    if all(g.degree(u) <= 3 for u in iter_bits(g.adj[c])):
        return BlockKind.STAR5PLUS_3MINUS
    return BlockKind.STAR5_4MINUS


def elementary_candidates(g: Graph) -> Iterator[tuple[BlockKind, tuple[int, ...], int]]:
    """
    Yield (kind, centers, vertex mask) for every elementary block of g in priority order:
    7+-3- star, 6-6, 6-5, 6-4, 6-3- star, 5-5, 5-4-5 path, 5-4- star
    A block's vertex set is the union of the closed neighborhoods of its vertices of degree >= 5
    """

    def ordered(kind: BlockKind, found: Iterator[tuple[tuple[int, ...], int]]):
        for centers, mask in sorted(found, key=lambda i: (min(i[0]), sorted(iter_bits(i[1])))):
            yield kind, centers, mask

    yield from ordered(BlockKind.STAR5PLUS_3MINUS, _stars(g, 7, None, 3))
    yield from ordered(BlockKind.EDGE66, _edges(g, 6, 6))
    yield from ordered(BlockKind.EDGE65, _edges(g, 6, 5))
    yield from ordered(BlockKind.EDGE64, _edge64(g))
    yield from ordered(BlockKind.STAR5PLUS_3MINUS, _stars(g, 6, 6, 3))
    yield from ordered(BlockKind.EDGE55, _edges(g, 5, 5))
    yield from ordered(BlockKind.PATH545, _paths545(g))
    for _, centers, mask in ordered(BlockKind.STAR5_4MINUS, _stars(g, 5, 5, 4)):
        yield _kind_of_small_star(g, centers[0]), centers, mask


def require_host(g: Graph) -> None:
    """
    :raises PatternFoundError: if g contains S_{3,3}
    :raises NotPlanarError: if g is not planar
    """
    if (witness := detect_double_star(g, S33)) is not None:
        raise PatternFoundError(witness)
    if not is_planar(g):
        raise NotPlanarError(check_planarity(g).kuratowski)


def build_base(g: Graph) -> StarBlockBase:
    """
    Place every vertex of degree at least 5 in exactly one elementary block
    A candidate is accepted iff none of its high-degree vertices is already placed and every
    vertex it shares with an accepted block is peripheral in both
    :raises PatternFoundError: if g contains S_{3,3}
    :raises NotPlanarError: if g is not planar
    :raises BaseConstructionError: if some vertex of degree at least 5 is left unplaced
    """
    require_host(g)
    high = to_mask(v for v in range(g.n) if g.degree(v) >= 5)
    placed = 0
    parts: list[_Part] = []
    for kind, centers, mask in elementary_candidates(g):
        if mask & high & placed:
            continue
        if not _intersections_peripheral(g, [p.mask for p in parts] + [mask]):
            continue
        parts.append(_Part(kind, centers, mask))
        placed |= mask
        _log.debug("accepted %s block at %s", kind.value, centers)
    if orphans := high & ~placed:
        raise BaseConstructionError(f"vertices {list(iter_bits(orphans))} fit no elementary star-block")
    return _assemble(g, parts)


# Weights


def primary_weight(g: Graph, h: frozenset[int] | Sequence[int]) -> QuarterWeight:
    """
    w0(H) = e(H) + e[H, G - H]/2 = (sum of degrees over H)/2
    :raises CertificateError: if the two forms disagree
    """
    mask = to_mask(h)
    by_degree = _w0_quarters(g, mask)
    inner = sum((g.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2
    boundary = sum((g.adj[v] & ~mask).bit_count() for v in iter_bits(mask))
    if 4 * inner + 2 * boundary != by_degree:
        raise CertificateError("primary weight forms disagree")
    return QuarterWeight(by_degree)


def modified_weight(g: Graph, base: StarBlockBase, b: StarBlock) -> QuarterWeight:
    """
    Recompute w(B) = w0(B) + s/2 + s'/4 + 1_B from g and the base multiplicities
    """
    if b not in base.blocks:
        raise ValueError("block does not belong to this base")
    shared = [v for v in b.vertices if base.multiplicity[v] >= 2]
    s = sum(1 for v in shared if g.degree(v) <= 3)
    s4 = sum(1 for v in shared if g.degree(v) == 4)
    triple = any(base.multiplicity[v] >= 3 for v in b.vertices)
    bonus = QuarterWeight.from_halves(s) + QuarterWeight(s4)
    return primary_weight(g, b.vertices) + bonus + (QuarterWeight.from_int(1) if triple else ZERO)


@dataclass(frozen=True)
class Classification:
    tags: tuple[BlockClass, ...]
    t0: int
    t1: int
    t2: int

    @property
    def t(self) -> int:
        return self.t1 + self.t2


def classify(base: StarBlockBase) -> Classification:
    tags = tuple(b.block_class for b in base.blocks)
    counts = [tags.count(c) for c in (BlockClass.B0, BlockClass.B1, BlockClass.B2)]
    return Classification(tags, *counts)


def lemma1_exact(b_class: BlockClass, v_count: int, t: int) -> Fraction:
    """
    The class bound: 5v/2 - 5/2 (B0), 5v/2 - 5/t (B1), 5v/2 - 1 (B2)
    :raises ValueError: for B1 with t < 1
    """
    base = Fraction(5 * v_count, 2)
    if b_class is BlockClass.B0:
        return base - Fraction(5, 2)
    if b_class is BlockClass.B2:
        return base - 1
    if t < 1:
        raise ValueError("the B1 bound needs t >= 1")
    return base - Fraction(5, t)


def lemma1_bound(b_class: BlockClass, v_count: int, t: int) -> QuarterWeight:
    """
    The class bound floored to quarter-units; for a quarter-unit weight w, w <= this iff w meets
    the exact bound
    """
    return QuarterWeight.floor(lemma1_exact(b_class, v_count, t))


def block_passes(base: StarBlockBase) -> tuple[bool, ...]:
    t = base.t
    return tuple(b.w <= lemma1_bound(b.block_class, b.v_count, t) for b in base.blocks)


def single_block_bound(n: int) -> int:
    """
    The edge bound for S_{3,3}-free planar graphs on n >= 7 vertices with exactly one block
    """
    if n < 7:
        raise ValueError("the single-block bound starts at 7 vertices")
    return {7: 15, 8: 16, 9: 18}.get(n, (5 * n - 10) // 2)


# Refinement


@dataclass(frozen=True)
class RefineOutcome:
    """
    The last base reached, the rounds spent, and per-block pass flags
    unresolved lists the blocks still above their bound
    """

    base: StarBlockBase
    rounds: int
    passes: tuple[bool, ...]

    @property
    def unresolved(self) -> tuple[StarBlock, ...]:
        return tuple(b for b, ok in zip(self.base.blocks, self.passes) if not ok)

    @property
    def resolved(self) -> bool:
        return all(self.passes)


def is_refinement(old: StarBlockBase, new: StarBlockBase) -> bool:
    """
    Same block count, each block contained in its successor, every w/v weakly smaller and one strictly
    """
    if len(old.blocks) != len(new.blocks):
        return False
    strict = False
    for a, b in zip(old.blocks, new.blocks):
        if not a.vertices <= b.vertices:
            return False
        lhs, rhs = b.w.value * a.v_count, a.w.value * b.v_count
        if lhs > rhs:
            return False
        strict |= lhs < rhs
    return strict


def _absorb(g: Graph, base: StarBlockBase, index: int) -> StarBlockBase | None:
    parts = base._parts()  # pylint: disable=protected-access
    part = parts[index]
    for v in range(g.n):
        if part.mask >> v & 1 or not is_potential(g, v, part.core):
            continue
        trial = list(parts)
        trial[index] = _Part(part.kind, part.centers, part.core, part.extension | 1 << v)
        if not _intersections_peripheral(g, [p.mask for p in trial]):
            continue
        grown = _assemble(g, trial)
        if is_refinement(base, grown):
            _log.log(TRACE, "block %d absorbs vertex %d", index, v)
            return grown
    return None


def refine_until_bounded(g: Graph, base: StarBlockBase, max_rounds: int = 4) -> RefineOutcome:
    """
    Grow failing blocks with potential vertices until every block meets its class bound
    Each round visits the failing blocks in order; a block absorbs the lowest-index potential
    vertex that keeps a valid base and yields a refinement, repeatedly, until it passes or stalls
    :raises PatternFoundError: if g contains S_{3,3}
    :raises NotPlanarError: if g is not planar
    """
    require_host(g)
    current = base
    rounds = 0
    while rounds < max_rounds:
        failing = [i for i, ok in enumerate(block_passes(current)) if not ok]
        if not failing:
            break
        rounds += 1
        progress = False
        for i in failing:
            while not block_passes(current)[i]:
                if (grown := _absorb(g, current, i)) is None:
                    break
                current, progress = grown, True
        if not progress:
            break
    passes = block_passes(current)
    if not all(passes):
        _log.warning("refinement left %d block(s) above their bound", passes.count(False))
    return RefineOutcome(current, rounds, passes)


# Audit


@dataclass(frozen=True)
class BlockRecord:
    kind: BlockKind
    vertices: tuple[int, ...]
    w0: QuarterWeight
    w: QuarterWeight
    block_class: BlockClass
    bound: QuarterWeight
    passes: bool

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "vertices": list(self.vertices),
            "w0": str(self.w0),
            "w": str(self.w),
            "class": self.block_class.value,
            "bound": str(self.bound),
            "pass": self.passes,
        }


@dataclass(frozen=True)
class Check:
    """
    One audited relation: both sides as exact strings, and whether it applies and holds
    """

    name: str
    lhs: str
    rhs: str
    applies: bool
    holds: bool

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "applies": self.applies, "holds": self.holds}


@dataclass(frozen=True)
class WeightAudit:
    blocks: tuple[BlockRecord, ...]
    checks: tuple[Check, ...]
    degree2_shared: int

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    @property
    def identities_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.applies)

    @property
    def blocks_pass(self) -> bool:
        return all(b.passes for b in self.blocks)

    def to_json(self) -> dict:
        return {
            "blocks": [b.to_json() for b in self.blocks],
            "checks": {c.name: c.to_json() for c in self.checks},
            "degree2_shared": self.degree2_shared,
            "ok": self.identities_hold and self.blocks_pass,
        }


def audit(g: Graph, base: StarBlockBase) -> WeightAudit:
    """
    Recompute every block weight and the base-level relations:
    edge identity, ledger, bipartite bound, two-block edge bound, single-block edge bound,
    G1 chain bound and the empty-base bound
    """
    n, e = g.n, g.edge_count
    t = base.t
    records = []
    for b in base.blocks:
        w = modified_weight(g, base, b)
        if w != b.w:
            raise CertificateError(f"stale weight on {b.kind.value} block at {b.centers}")
        bound = lemma1_bound(b.block_class, b.v_count, t)
        vertices = tuple(sorted(b.vertices))
        records.append(BlockRecord(b.kind, vertices, b.w0, w, b.block_class, bound, w <= bound))

    w0_g1 = primary_weight(g, base.g1_vertices)
    w0_g2 = primary_weight(g, base.g2_vertices)
    identity = Check("edge_identity", str(e), str(w0_g1 + w0_g2), True, 4 * e == (w0_g1 + w0_g2).value)

    block_sum = sum((b.w0 for b in base.blocks), ZERO)
    shared_terms = QuarterWeight.from_halves(3 * base.r1) + QuarterWeight.from_int(2 * base.r2 + 3 * base.r3)
    formula = w0_g1 + shared_terms
    deg2 = sum(1 for v in range(n) if base.multiplicity[v] >= 2 and g.degree(v) == 2)
    triples_ok = all(g.degree(v) == 3 for v in range(n) if base.multiplicity[v] >= 3)
    overfull = any(k > 3 for k in base.multiplicity)
    ledger = Check(
        "ledger",
        str(block_sum),
        str(formula),
        True,
        (formula - block_sum).value == 2 * deg2 and triples_ok and not overfull,
    )

    bipartite = Check(
        "bipartite",
        f"r3={base.r3}",
        f"2*t2-4={2 * base.t2 - 4}",
        base.t2 > 0,
        base.t2 == 0 or (base.r3 <= 2 * base.t2 - 4 and base.t2 >= 3),
    )
    many = len(base.blocks) >= 2
    two_block = Check(
        "two_block_edges", str(e), str(Fraction(5 * n, 2) - 5), many, not many or 2 * e <= 5 * n - 10
    )
    single = len(base.blocks) == 1 and n >= 7
    limit = single_block_bound(n) if single else 0
    one_block = Check(
        "single_block_edges", str(e), str(limit) if single else "-", single, not single or e <= limit
    )
    v1 = len(base.g1_vertices)
    chain = Check(
        "g1_chain",
        str(w0_g1),
        str(Fraction(5 * v1, 2) - 5),
        many,
        not many or w0_g1.value <= 10 * v1 - 20,
    )
    empty = not base.blocks
    no_blocks = Check("empty_base_edges", str(e), str(2 * n), empty, not empty or e <= 2 * n)
    checks = (identity, ledger, bipartite, two_block, one_block, chain, no_blocks)
    ret = WeightAudit(tuple(records), checks, deg2)
    if _log.isEnabledFor(logging.DEBUG):
        failed = [c.name for c in checks if c.applies and not c.holds]
        _log.debug("audit of %d block(s): failed=%s", len(records), failed)
    return ret
