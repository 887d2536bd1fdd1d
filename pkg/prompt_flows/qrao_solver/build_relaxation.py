"""
Build relaxation node for Prompt Flow
Colors the graph, places its vertices on qubits and renders the relaxed Hamiltonian
"""

import sys
from pathlib import Path

from dotenv import load_dotenv
from promptflow.core import tool

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))
load_dotenv(project_root / ".env")

from qrao.config import Settings
from qrao.encoding import compression_ratio, dump_hamiltonian
from qrao.errors import QraoError, SizeLimitError
from qrao.graph import write_edge_list
from qrao.logging_utils import get_logger
from qrao.pipeline import encode_graph, load_graph

logger = get_logger("flows.build_relaxation")


@tool
def build_relaxation(graph: str, d: int = 3) -> dict:
    """
    Encode a graph for the solver node.

    Args:
        graph: Fixture name or edge-list path
        d: Vertices per qubit

    Returns:
        Encoding summary with the edge list and Hamiltonian as text, or an error record
    """
    try:
        settings = Settings.from_env()
        g = load_graph(graph, settings.data_dir)
        relaxation = encode_graph(g, d)
        num_qubits = relaxation.mapping.num_qubits
        if num_qubits > settings.eigensolver_max_qubits:
            raise SizeLimitError(
                f"{num_qubits} qubits exceed the simulator cap of {settings.eigensolver_max_qubits}"
            )

        return {
            "status": "success",
            "graph": graph,
            "d": d,
            "num_vertices": g.num_vertices,
            "num_edges": g.num_edges,
            "num_colors": relaxation.coloring.num_colors,
            "num_qubits": num_qubits,
            "compression_ratio": round(compression_ratio(relaxation.mapping), 4),
            "edges": write_edge_list(g),
            "hamiltonian": dump_hamiltonian(relaxation.hamiltonian),
        }

    except QraoError as e:
        logger.warning("relaxation failed", extra={"graph": graph, "error": str(e)})
        return {
            "status": "error",
            "graph": graph,
            "d": d,
            "error": str(e),
            "exit_code": e.exit_code,
        }
