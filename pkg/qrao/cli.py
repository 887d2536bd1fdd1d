"""
Command-line entry point: ``python -m qrao <command>``.

Commands: solve, benchmark, color, encode, shadows, fixtures. Every command writes to
stdout or ``--out`` and exits with 0, 2 (invalid input), 3 (size limit) or
4 (non-convergence).
"""

import argparse
import io
import json
import sys
from pathlib import Path
from typing import Any, List, Optional

import pandas as pd

from qrao import __version__
from qrao.config import Settings
from qrao.encoding import dump_hamiltonian, relaxed_energy
from qrao.errors import InvalidArgumentError, QraoError
from qrao.graph import write_edge_list
from qrao.logging_utils import configure_logging, get_logger
from qrao.pipeline import (
    RELAX_METHODS,
    ROUNDING_METHODS,
    PipelineConfig,
    encode_graph,
    load_graph,
    relax,
    run_benchmark,
    run_pipeline,
    summarize_benchmark,
)
from qrao.problems import FIXTURE_NAMES, fixture, fixture_optimum
from qrao.shadows import collect_shadows, estimate_hamiltonian

logger = get_logger(__name__)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")


def _json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def _graph_source(args: argparse.Namespace) -> str:
    if args.fixture:
        return args.fixture
    if args.graph:
        return args.graph
    raise InvalidArgumentError("pass --fixture NAME or --graph PATH")


def cmd_solve(args: argparse.Namespace, settings: Settings) -> str:
    config = PipelineConfig(
        d=args.d,
        method=args.method,
        rounding=args.rounding,
        samples=args.samples,
        seed=args.seed,
        depth=args.depth,
        iterations=args.iterations,
    )
    report = run_pipeline(_graph_source(args), config, settings)
    if args.format == "csv":
        rows = [
            {"method": method, "sample": i, "cut": cut}
            for method, summary in report["rounding"].items()
            for i, cut in enumerate(summary["cuts"])
        ]
        return _csv(pd.DataFrame(rows, columns=["method", "sample", "cut"]))
    return _json(report)


def cmd_benchmark(args: argparse.Namespace, settings: Settings) -> str:
    frame = run_benchmark(
        sizes=args.sizes,
        graphs_per_size=args.graphs,
        samples=args.samples,
        d=args.d,
        seed=args.seed,
        workers=args.workers,
        settings=settings,
    )
    if args.format == "json":
        return _json(
            {
                "version": __version__,
                "seed": args.seed,
                "summary": summarize_benchmark(frame).to_dict(orient="records"),
                "rows": frame.to_dict(orient="records"),
            }
        )
    return _csv(frame)


def cmd_color(args: argparse.Namespace, settings: Settings) -> str:
    relaxation = encode_graph(load_graph(_graph_source(args), settings.data_dir), args.d)
    mapping = relaxation.mapping
    rows = [
        {
            "vertex": v,
            "color": relaxation.coloring.color_of[v],
            "qubit": slot.qubit,
            "axis": slot.axis.value,
        }
        for v, slot in enumerate(mapping.slot_of)
    ]
    if args.format == "csv":
        return _csv(pd.DataFrame(rows, columns=["vertex", "color", "qubit", "axis"]))
    return _json(
        {
            "version": __version__,
            "num_colors": relaxation.coloring.num_colors,
            "num_qubits": mapping.num_qubits,
            "d": mapping.d,
            "vertices": rows,
        }
    )


def cmd_encode(args: argparse.Namespace, settings: Settings) -> str:
    h = encode_graph(load_graph(_graph_source(args), settings.data_dir), args.d).hamiltonian
    if args.format == "json":
        return _json(
            {
                "version": __version__,
                "num_qubits": h.num_qubits,
                "constant": h.constant,
                "terms": [[coeff, str(term)] for coeff, term in h.terms],
            }
        )
    return dump_hamiltonian(h)


def cmd_shadows(args: argparse.Namespace, settings: Settings) -> str:
    relaxation = encode_graph(load_graph(_graph_source(args), settings.data_dir), args.d)
    state, _ = relax(relaxation, PipelineConfig(d=args.d, seed=args.seed), settings)
    records = collect_shadows(state, args.shots, args.seed)
    if args.format == "csv":
        return _csv(records.to_frame())
    return _json(
        {
            "version": __version__,
            "seed": args.seed,
            "shots": args.shots,
            "exact_energy": relaxed_energy(relaxation.hamiltonian, state),
            "estimated_energy": estimate_hamiltonian(records, relaxation.hamiltonian),
        }
    )


def cmd_fixtures(args: argparse.Namespace, settings: Settings) -> str:
    if args.name:
        return write_edge_list(fixture(args.name, settings.data_dir))
    rows = []
    for name in FIXTURE_NAMES:
        g = fixture(name, settings.data_dir)
        rows.append(
            {
                "name": name,
                "vertices": g.num_vertices,
                "edges": g.num_edges,
                "total_weight": g.total_weight,
                "optimal_cut": fixture_optimum(name),
            }
        )
    if args.format == "csv":
        return _csv(pd.DataFrame(rows))
    return _json(rows)


def _add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--fixture", choices=FIXTURE_NAMES, type=str.upper)
    source.add_argument("--graph", help="edge-list file")
    parser.add_argument("--d", type=int, default=3, choices=(1, 2, 3))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="qrao", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, help=help_text, parents=[common])

    solve = command("solve", "relax and round one graph")
    _add_graph_arguments(solve)
    solve.add_argument("--method", choices=RELAX_METHODS, default="exact")
    solve.add_argument("--rounding", choices=ROUNDING_METHODS, default="both")
    solve.add_argument("--samples", type=int, default=100)
    solve.add_argument("--depth", type=int, default=2)
    solve.add_argument("--iterations", type=int, default=500)
    solve.set_defaults(handler=cmd_solve, default_format="json")

    benchmark = command("benchmark", "random regular ensemble")
    benchmark.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16])
    benchmark.add_argument("--graphs", type=int, default=20)
    benchmark.add_argument("--samples", type=int, default=200)
    benchmark.add_argument("--d", type=int, default=3, choices=(1, 2, 3))
    benchmark.add_argument("--workers", type=int, default=1)
    benchmark.set_defaults(handler=cmd_benchmark, default_format="csv")

    color = command("color", "coloring and qubit assignment")
    _add_graph_arguments(color)
    color.set_defaults(handler=cmd_color, default_format="json")

    encode = command("encode", "relaxed Hamiltonian")
    _add_graph_arguments(encode)
    encode.set_defaults(handler=cmd_encode, default_format="text")

    shadows = command("shadows", "shadow estimate of the maximal energy")
    _add_graph_arguments(shadows)
    shadows.add_argument("--shots", type=int, default=1000)
    shadows.set_defaults(handler=cmd_shadows, default_format="json")

    fixtures = command("fixtures", "list fixtures or print one")
    fixtures.add_argument("name", nargs="?", type=str.upper, choices=FIXTURE_NAMES)
    fixtures.set_defaults(handler=cmd_fixtures, default_format="json")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        settings = Settings.from_env()
        configure_logging(settings)
        _emit(args.handler(args, settings), args.out)
    except QraoError as exc:
        logger.debug("command failed", extra={"command": args.command, "exit_code": exc.exit_code})
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    return 0
