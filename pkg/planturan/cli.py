"""
The planturan command line: compute, verify, construct, search, decompose, detect, enumerate, audit
"""

from __future__ import annotations
from dataclasses import dataclass
from collections.abc import Callable, Iterator, Sequence
from pathlib import Path
import argparse
import logging
import json
import sys
import os

from . import __version__
from .ansi import Color
from .codes import ExitCode, exit_code_for
from .degree_class import degree_class_report
from .enumerate import EnumConstraints, enumerate_parallel, write_stream
from .errors import NotPlanarError, PatternFoundError, PlanTuranError
from .extremal import ConstructionRecipe, Recipe, construct, search_extremal
from .formats import from_graph6, read_graph6, to_dot, to_graph6, write_graph6
from .graph import Graph, PatternSpec, S33, detect_double_star
from .log import CuteFormatter, TRACE, trace
from .starblock import audit, build_base, refine_until_bounded
from .turan import compute_planar_turan, verify_corpus_lemmas, verify_theorem


FORMATS = ("table", "json", "graph6", "dot")
WORKERS_ENV = "TURAN_WORKERS"

_log = logging.getLogger(__name__)


class UsageError(PlanTuranError, ValueError):
    """
    Malformed flags or environment
    """


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(message)


@dataclass(frozen=True)
class CliConfig:
    """
    Everything an invocation needs besides the command's own arguments
    """

    workers: int
    fmt: str
    source: Path | None
    unsafe_large: bool
    color: bool
    verbosity: int

    @classmethod
    def from_args(cls, ns: argparse.Namespace, default_fmt: str) -> CliConfig:
        workers = ns.workers if ns.workers is not None else _default_workers()
        if workers < 1:
            raise UsageError(f"workers must be positive, got {workers}")
        return cls(
            workers=workers,
            fmt=ns.format or default_fmt,
            source=getattr(ns, "input", None),
            unsafe_large=ns.unsafe_large,
            color=not ns.no_color,
            verbosity=ns.verbose - ns.quiet,
        )

    @property
    def progress(self) -> bool:
        return self.verbosity >= 0 and sys.stderr.isatty()

    def paint(self, color: Color, text: str) -> str:
        return color(text) if self.color and sys.stdout.isatty() else text


def _default_workers() -> int:
    if (raw := os.environ.get(WORKERS_ENV)) is None:
        return os.cpu_count() or 1
    try:
        return int(raw)
    except ValueError as e:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from e


# Output


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, indent=2, sort_keys=True))


def _emit_graphs(config: CliConfig, graphs: Sequence[Graph]) -> None:
    if config.fmt == "dot":
        _emit("".join(to_dot(g, f"G{i}") for i, g in enumerate(graphs)))
    else:
        write_graph6(graphs, sys.stdout)


def _inputs(config: CliConfig) -> Iterator[Graph]:
    if config.source is None:
        yield from read_graph6(sys.stdin)
        return
    with config.source.open("rb") as f:
        yield from read_graph6(f)


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(str(c).rjust(w) for c, w in zip(header, widths))]
    lines.extend("  ".join(str(c).rjust(w) for c, w in zip(r, widths)) for r in rows)
    return "\n".join(lines)


# Commands


def cmd_compute(ns: argparse.Namespace, config: CliConfig) -> int:
    result = compute_planar_turan(
        ns.n, ns.pattern, workers=config.workers, witness_cap=ns.witnesses, allow_large=config.unsafe_large
    )
    if config.fmt == "json":
        _emit_json(result.to_json())
    elif config.fmt in ("graph6", "dot"):
        _emit_graphs(config, [from_graph6(w) for w in result.witnesses])
    else:
        _emit(f"ex_P({result.n}, {result.pattern}) = {result.value}")
        _emit(f"extremal classes: {result.witness_count}")
    return ExitCode.OK


def cmd_verify(ns: argparse.Namespace, config: CliConfig) -> int:
    rows = verify_theorem(ns.n_max, ms=tuple(ns.m), workers=config.workers, progress=config.progress)
    if config.fmt == "json":
        _emit_json({"rows": [r.to_json() for r in rows], "ok": all(r.ok for r in rows)})
    else:
        body = []
        for r in rows:
            verdict = "match" if r.match else ("mismatch" if r.in_range else "out of range")
            painted = config.paint(Color.green if r.ok else Color.bold_red, verdict)
            bound = "-" if r.lower_bound is None else str(r.lower_bound)
            body.append([str(r.n), str(r.m), str(r.computed), str(r.predicted), bound, painted])
        _emit(_table(["n", "m", "computed", "predicted", "construction", "verdict"], body))
    return ExitCode.OK if all(r.ok for r in rows) else ExitCode.USAGE


def cmd_construct(ns: argparse.Namespace, config: CliConfig) -> int:
    recipe = ConstructionRecipe.parse(ns.recipe, ns.n)
    g = construct(recipe)
    if config.fmt == "json":
        _emit_json(
            {
                "recipe": recipe.recipe.value,
                "n": g.n,
                "edges": g.edge_count,
                "pattern": str(recipe.pattern),
                "graph6": to_graph6(g).decode("ascii"),
            }
        )
    elif config.fmt == "table":
        _emit(f"{recipe.recipe.value}: {g.n} vertices, {g.edge_count} edges, {recipe.pattern}-free, planar")
    else:
        _emit_graphs(config, [g])
    return ExitCode.OK


def cmd_search(ns: argparse.Namespace, config: CliConfig) -> int:
    g = search_extremal(ns.n, ns.pattern, ns.edges, budget=ns.budget, seed=ns.seed)
    if g is None:
        _log.warning("no graph found")
        if config.fmt == "json":
            _emit_json({"found": False, "n": ns.n, "edges": ns.edges})
        return ExitCode.OK
    if config.fmt == "json":
        _emit_json({"found": True, "n": ns.n, "edges": ns.edges, "graph6": to_graph6(g).decode("ascii")})
    elif config.fmt == "table":
        _emit(f"found {to_graph6(g).decode('ascii')}")
    else:
        _emit_graphs(config, [g])
    return ExitCode.OK


def _decomposition(g: Graph) -> dict:
    base = build_base(g)
    base.check_invariants(g)
    refined = refine_until_bounded(g, base)
    report = audit(g, refined.base)
    return {
        "graph6": to_graph6(g).decode("ascii"),
        "n": g.n,
        "edges": g.edge_count,
        "base": refined.base.to_json(),
        "refinement": {"rounds": refined.rounds, "resolved": refined.resolved},
        "audit": report.to_json(),
        "degree_class": degree_class_report(g).to_json(),
    }


def cmd_decompose(_: argparse.Namespace, config: CliConfig) -> int:
    results = []
    code = ExitCode.OK
    for g in _inputs(config):
        try:
            results.append(_decomposition(g))
        except PatternFoundError as e:
            _log.error("%s", e)
            results.append({"graph6": to_graph6(g).decode("ascii"), "pattern_found": e.witness.to_json()})
            code = max(code, ExitCode.PATTERN_FOUND)
        except NotPlanarError as e:
            _log.error("%s", e)
            witness = None if e.kuratowski is None else e.kuratowski.to_json()
            results.append({"graph6": to_graph6(g).decode("ascii"), "not_planar": witness})
            code = max(code, ExitCode.NOT_PLANAR)
    if config.fmt == "table":
        for r in results:
            if "audit" not in r:
                _emit(f"{r['graph6']}: rejected")
                continue
            _emit(f"{r['graph6']}: {len(r['audit']['blocks'])} block(s), audit ok={r['audit']['ok']}")
            for b in r["audit"]["blocks"]:
                _emit(f"  {b['kind']} {b['class']} w={b['w']} bound={b['bound']} pass={b['pass']}")
    else:
        _emit_json(results[0] if len(results) == 1 else results)
    return code


def cmd_detect(ns: argparse.Namespace, config: CliConfig) -> int:
    found = []
    for g in _inputs(config):
        w = detect_double_star(g, ns.pattern)
        found.append({"graph6": to_graph6(g).decode("ascii"), "witness": None if w is None else w.to_json()})
    if config.fmt == "json":
        _emit_json(found[0] if len(found) == 1 else found)
    else:
        for r in found:
            w = r["witness"]
            _emit("not found" if w is None else f"found on edge {w['x']}-{w['y']}")
    return ExitCode.PATTERN_FOUND if any(r["witness"] for r in found) else ExitCode.OK


def cmd_enumerate(ns: argparse.Namespace, config: CliConfig) -> int:
    c = EnumConstraints(
        ns.n,
        ns.min_edges,
        ns.max_edges,
        require_planar=ns.planar,
        forbid=ns.forbid,
        require_connected=ns.connected,
    )
    if config.fmt == "graph6":
        stats = write_stream(c, sys.stdout, workers=config.workers, allow_large=config.unsafe_large)
        _log.info("emitted %d graph(s)", stats.emitted)
        return ExitCode.OK
    stats, graphs = enumerate_parallel(c, config.workers, allow_large=config.unsafe_large)
    if config.fmt == "json":
        _emit_json({"n": ns.n, "count": len(graphs), "stats": stats.to_json()})
    elif config.fmt == "dot":
        _emit_graphs(config, graphs)
    else:
        _emit(_table(list(stats.to_json()), [[str(v) for v in stats.to_json().values()]]))
    return ExitCode.OK


def cmd_audit(ns: argparse.Namespace, config: CliConfig) -> int:
    report = verify_corpus_lemmas(ns.n, workers=config.workers, progress=config.progress)
    if config.fmt == "json":
        _emit_json(report.to_json())
    else:
        rows = [[k, str(v), str(report.failed[k])] for k, v in sorted(report.applied.items())]
        _emit(f"{report.graphs} S_{{3,3}}-free planar graph(s) on {ns.n} vertices")
        _emit(_table(["item", "applied", "failed"], rows))
    return ExitCode.OK if report.ok else ExitCode.USAGE


# Parsing


def _pattern(text: str) -> PatternSpec:
    try:
        return PatternSpec.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _m_list(text: str) -> list[int]:
    try:
        return [int(i) for i in text.split(",") if i.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from e


def _parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="Output format")
    workers_help = f"Worker processes (default: ${WORKERS_ENV} or cpu count)"
    common.add_argument("--workers", type=int, default=None, help=workers_help)
    common.add_argument("--unsafe-large", action="store_true", help="Lift the size guards")
    common.add_argument("--no-color", action="store_true", help="Disable colored output")
    common.add_argument("-v", "--verbose", action="count", default=0, help="More logging; repeat for TRACE")
    common.add_argument("-q", "--quiet", action="count", default=0, help="Only log warnings and errors")

    parser = _Parser(prog="planturan", description="Planar Turan numbers of double stars")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable[[argparse.Namespace, CliConfig], int], fmt: str, help_: str):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func, default_fmt=fmt)
        return p

    p = add("compute", cmd_compute, "table", "Exact ex_P(n, S_{m,l}) by enumeration")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", "--pattern", type=_pattern, default=S33, help="m,l (default 3,3)")
    p.add_argument("--witnesses", type=int, default=100, help="Maximum extremal graphs to report")

    p = add("verify", cmd_verify, "table", "Compare computed values with the closed forms")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m", type=_m_list, default=[1, 2, 3, 4], help="Comma separated arms (default 1,2,3,4)")

    p = add("construct", cmd_construct, "graph6", "Build a verified extremal construction")
    p.add_argument("recipe", choices=[r.value for r in Recipe])
    p.add_argument("-n", type=int, default=None)

    p = add("search", cmd_search, "graph6", "Search for a planar pattern-free graph with a given edge count")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", "--pattern", type=_pattern, default=S33)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--budget", type=int, default=200, help="Greedy restarts")
    p.add_argument("--seed", type=int, default=0)

    for name, func, fmt, help_ in (
        ("decompose", cmd_decompose, "json", "Star-block base, refinement and weight audit"),
        ("detect", cmd_detect, "table", "Find a double star in each input graph"),
    ):
        p = add(name, func, fmt, help_)
        p.add_argument("input", type=Path, nargs="?", default=None, help="graph6 file (default: stdin)")
        if name == "detect":
            p.add_argument("-p", "--pattern", type=_pattern, default=S33)

    p = add("enumerate", cmd_enumerate, "graph6", "Isomorph-free enumeration")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--min-edges", type=int, default=0)
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--planar", action="store_true")
    p.add_argument("--forbid", type=_pattern, default=None)
    p.add_argument("--connected", action="store_true")

    p = add("audit", cmd_audit, "json", "Run the star-block pipeline over every S_{3,3}-free planar graph")
    p.add_argument("-n", type=int, required=True)
    return parser


_HANDLER_TAG = "_planturan_cli"


def _configure_logging(config: CliConfig) -> None:
    trace.ensure_installed()
    level = {-1: logging.WARNING, 0: logging.INFO, 1: logging.DEBUG}.get(config.verbosity)
    if level is None:
        level = logging.WARNING if config.verbosity < 0 else TRACE
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(CuteFormatter.for_stream(sys.stderr, color=config.color))
    setattr(handler, _HANDLER_TAG, True)
    logger = logging.getLogger("planturan")
    logger.handlers = [h for h in logger.handlers if not getattr(h, _HANDLER_TAG, False)] + [handler]
    logger.setLevel(level)


def main(argv: Sequence[str] | None = None) -> int:
    """
    :return: The process exit code
    """
    try:
        ns = _parser().parse_args(argv)
        config = CliConfig.from_args(ns, ns.default_fmt)
    except UsageError as e:
        sys.stderr.write(f"planturan: {e}\n")
        return ExitCode.USAGE
    _configure_logging(config)
    try:
        code = ns.func(ns, config)
    except (PlanTuranError, ValueError) as e:
        _log.error("%s", e)
        code = exit_code_for(e)
    _log.debug("%s exits with %s", ns.command, ExitCode.name_of(code))
    return code
