"""
End-to-end runs: color, encode, relax, round, and the random-graph benchmark.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from tqdm import tqdm

from qrao import __version__
from qrao.config import Settings
from qrao.encoding import (
    RelaxedHamiltonian,
    VertexPauliMap,
    assign_paulis,
    build_hamiltonian,
    check_deformation,
    compression_ratio,
)
from qrao.errors import InvalidArgumentError, NotFoundError, SizeLimitError
from qrao.graph import Coloring, Graph, brute_force_maxcut, ldf_coloring, random_regular, read_edge_list
from qrao.logging_utils import get_logger
from qrao.problems import FIXTURE_NAMES, fixture, fixture_optimum
from qrao.rounding import (
    approximation_ratio,
    expected_rounded_energy,
    magic_round_batch,
    pauli_round,
    rounding_report,
)
from qrao.simulator import AnsatzSpec, extremal_eigenstate
from qrao.spsa import SpsaConfig
from qrao.statevector import Statevector
from qrao.vqe import vqe_relax

logger = get_logger(__name__)

RELAX_METHODS = ("exact", "vqe")
ROUNDING_METHODS = ("magic", "pauli", "both")
BENCHMARK_COLUMNS = ["size", "graph_seed", "method", "gamma"]

GraphSource = Union[Graph, str, Path]


@dataclass(frozen=True)
class PipelineConfig:
    d: int = 3
    method: str = "exact"
    rounding: str = "both"
    samples: int = 100
    seed: int = 0
    depth: int = 2
    iterations: int = 500

    def __post_init__(self):
        check_deformation(self.d)
        if self.method not in RELAX_METHODS:
            raise InvalidArgumentError(f"method must be one of {RELAX_METHODS}, got {self.method!r}")
        if self.rounding not in ROUNDING_METHODS:
            raise InvalidArgumentError(
                f"rounding must be one of {ROUNDING_METHODS}, got {self.rounding!r}"
            )
        if self.samples < 1:
            raise InvalidArgumentError("samples must be >= 1")
        if self.depth < 1 or self.iterations < 0:
            raise InvalidArgumentError("depth must be >= 1 and iterations >= 0")


@dataclass(frozen=True)
class Relaxation:
    graph: Graph
    coloring: Coloring
    mapping: VertexPauliMap
    hamiltonian: RelaxedHamiltonian


def load_graph(source: GraphSource, data_dir: Optional[Path] = None) -> Graph:
    """A fixture name or an edge-list path."""
    if isinstance(source, Graph):
        return source
    if isinstance(source, str) and source.upper() in FIXTURE_NAMES:
        return fixture(source, data_dir)
    path = Path(source)
    if not path.is_file():
        raise NotFoundError(f"no fixture or edge-list file named {str(source)!r}")
    return read_edge_list(path)


def encode_graph(g: Graph, d: int) -> Relaxation:
    coloring = ldf_coloring(g)
    mapping = assign_paulis(g, coloring, d)
    return Relaxation(g, coloring, mapping, build_hamiltonian(g, mapping))


def relax(
    relaxation: Relaxation, config: PipelineConfig, settings: Settings
) -> Tuple[Statevector, float]:
    """High-energy state of the relaxed Hamiltonian, exactly or variationally."""
    h = relaxation.hamiltonian
    if h.num_qubits > settings.eigensolver_max_qubits:
        raise SizeLimitError(
            f"{h.num_qubits} qubits exceed the simulator cap of {settings.eigensolver_max_qubits}"
        )
    if config.method == "exact":
        return extremal_eigenstate(h, settings=settings, seed=config.seed)
    result = vqe_relax(
        h,
        AnsatzSpec(h.num_qubits, config.depth),
        SpsaConfig(iterations=config.iterations, seed=config.seed),
    )
    return result.state, result.energy


def reference_optimum(
    g: Graph, source: GraphSource, settings: Settings
) -> Tuple[Optional[float], Optional[str]]:
    """Optimal cut and where it came from, if either brute force or a reference knows it."""
    if g.num_vertices <= settings.brute_force_max_vertices:
        _, best = brute_force_maxcut(g, settings.brute_force_max_vertices)
        return best, "brute_force"
    if isinstance(source, str) and source.upper() in FIXTURE_NAMES:
        return fixture_optimum(source), "reference"
    return None, None


def run_pipeline(
    source: GraphSource,
    config: Optional[PipelineConfig] = None,
    settings: Optional[Settings] = None,
) -> Dict[str, Any]:
    """
    Solve MaxCut on one graph through relaxation and rounding.

    Args:
        source: Graph, fixture name or edge-list path.
        config: Deformation, relaxation method, rounding and seeds.
        settings: Size limits; read from the environment when omitted.

    Returns:
        A JSON-ready report. ``gamma`` entries are present when the optimal cut is known.
    """
    config = config or PipelineConfig()
    settings = settings or Settings.from_env()
    g = load_graph(source, settings.data_dir)
    return solve_relaxation(encode_graph(g, config.d), source, config, settings)


def solve_relaxation(
    relaxation: Relaxation,
    source: GraphSource,
    config: PipelineConfig,
    settings: Settings,
) -> Dict[str, Any]:
    """Relax, round and report for an already encoded graph."""
    if relaxation.mapping.d != config.d:
        raise InvalidArgumentError(
            f"graph was encoded with d={relaxation.mapping.d}, config asks for d={config.d}"
        )
    g = relaxation.graph
    state, energy = relax(relaxation, config, settings)
    optimum, optimum_source = reference_optimum(g, source, settings)

    report: Dict[str, Any] = {
        "version": __version__,
        "seed": config.seed,
        "config": asdict(config),
        "graph": {
            "source": str(source) if not isinstance(source, Graph) else "<graph>",
            "vertices": g.num_vertices,
            "edges": g.num_edges,
            "total_weight": g.total_weight,
        },
        "num_colors": relaxation.coloring.num_colors,
        "num_qubits": relaxation.mapping.num_qubits,
        "compression_ratio": compression_ratio(relaxation.mapping),
        "relaxed_energy": energy,
        "optimal_cut": optimum,
        "optimal_source": optimum_source,
        "rounding": {},
        "gamma": {},
    }

    if config.rounding in ("magic", "both"):
        best, cuts = magic_round_batch(state, relaxation.mapping, g, config.samples, config.seed)
        magic = rounding_report("magic", cuts, best, optimum)
        magic["expected_cut"] = expected_rounded_energy(relaxation.hamiltonian, state, config.d)
        report["rounding"]["magic"] = magic
        if optimum:
            report["gamma"]["magic"] = magic["mean_gamma"]
            report["gamma"]["magic_best"] = approximation_ratio(best.cut, optimum)
    if config.rounding in ("pauli", "both"):
        sample = pauli_round(
            state,
            relaxation.mapping,
            g,
            settings.pauli_zero_tol,
            np.random.default_rng([config.seed, 1]),
        )
        report["rounding"]["pauli"] = rounding_report("pauli", [sample.cut], sample, optimum)
        if optimum:
            report["gamma"]["pauli"] = approximation_ratio(sample.cut, optimum)

    logger.info(
        "pipeline finished",
        extra={"qubits": report["num_qubits"], "energy": energy, "gamma": report["gamma"]},
    )
    return report


def graph_seed(seed: int, size: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, size, index]).generate_state(1)[0])


def _benchmark_graph(
    size: int, gseed: int, degree: int, samples: int, d: int, settings: Settings
) -> List[Dict[str, Any]]:
    g = random_regular(size, degree, gseed)
    relaxation = encode_graph(g, d)
    if relaxation.mapping.num_qubits > settings.eigensolver_max_qubits:
        logger.warning(
            "skipping graph beyond the eigensolver cap",
            extra={"size": size, "qubits": relaxation.mapping.num_qubits},
        )
        return []
    state, _ = extremal_eigenstate(relaxation.hamiltonian, settings=settings, seed=gseed)
    _, optimum = brute_force_maxcut(g, settings.brute_force_max_vertices)
    _, cuts = magic_round_batch(state, relaxation.mapping, g, samples, gseed)
    pauli = pauli_round(
        state, relaxation.mapping, g, settings.pauli_zero_tol, np.random.default_rng([gseed, 1])
    )
    rows = [
        {"size": size, "graph_seed": gseed, "method": "magic", "gamma": approximation_ratio(c, optimum)}
        for c in cuts
    ]
    rows.append(
        {"size": size, "graph_seed": gseed, "method": "pauli", "gamma": approximation_ratio(pauli.cut, optimum)}
    )
    return rows


def run_benchmark(
    sizes: Sequence[int],
    graphs_per_size: int,
    samples: int,
    d: int = 3,
    seed: int = 0,
    degree: int = 3,
    workers: int = 1,
    settings: Optional[Settings] = None,
    progress: bool = False,
) -> pd.DataFrame:
    """
    Rounding quality on random regular graphs.

    Every graph gets its exact maximal eigenstate, ``samples`` magic roundings (one row
    each) and one Pauli rounding, all scored against the brute-force optimum.

    Returns:
        Rows ``size, graph_seed, method, gamma`` ordered by size then graph index.
    """
    check_deformation(d)
    settings = settings or Settings.from_env()
    tasks = []
    for size in sorted(sizes):
        if (size * degree) % 2:
            raise InvalidArgumentError(f"size {size} times degree {degree} must be even")
        if size > settings.brute_force_max_vertices:
            logger.warning("skipping size beyond the brute-force cap", extra={"size": size})
            continue
        tasks.extend((size, graph_seed(seed, size, j)) for j in range(graphs_per_size))

    args = [(size, gseed, degree, samples, d, settings) for size, gseed in tasks]
    if workers > 1 and args:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(tqdm(pool.map(_benchmark_graph, *zip(*args)), total=len(args), disable=not progress))
    else:
        chunks = [_benchmark_graph(*a) for a in tqdm(args, disable=not progress)]

    rows = [row for chunk in chunks for row in chunk]
    return pd.DataFrame(rows, columns=BENCHMARK_COLUMNS)


def summarize_benchmark(frame: pd.DataFrame) -> pd.DataFrame:
    """Mean and minimum gamma per (size, method)."""
    return (
        frame.groupby(["size", "method"])["gamma"]
        .agg(["mean", "min", "count"])
        .reset_index()
    )


def write_benchmark_csv(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    return path
