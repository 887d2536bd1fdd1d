"""
Solve and round node for Prompt Flow
Finds a high-energy relaxed state and rounds it back to cuts
"""

import json
import sys
from pathlib import Path

from promptflow.core import tool

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from qrao.config import Settings
from qrao.errors import QraoError
from qrao.graph import parse_edge_list
from qrao.logging_utils import get_logger
from qrao.pipeline import PipelineConfig, encode_graph, solve_relaxation

logger = get_logger("flows.solve_and_round")


@tool
def solve_and_round(
    relaxation: dict,
    method: str = "exact",
    rounding: str = "both",
    samples: int = 100,
    seed: int = 0,
    depth: int = 2,
    iterations: int = 500,
) -> str:
    """
    Run the relaxation and rounding steps on an encoded graph.

    Args:
        relaxation: Output of the build_relaxation node
        method: exact eigensolver or vqe
        rounding: magic, pauli or both
        samples: Magic rounding repetitions
        seed: Seed for every random step
        depth: Ansatz depth (vqe only)
        iterations: SPSA iterations (vqe only)

    Returns:
        JSON report as string
    """
    if relaxation.get("status") != "success":
        return json.dumps(
            {
                "status": "error",
                "graph": relaxation.get("graph"),
                "error": relaxation.get("error", "relaxation step failed"),
            },
            indent=2,
            sort_keys=True,
        )

    try:
        settings = Settings.from_env()
        g = parse_edge_list(relaxation["edges"], source=relaxation["graph"])
        config = PipelineConfig(
            d=relaxation["d"],
            method=method,
            rounding=rounding,
            samples=samples,
            seed=seed,
            depth=depth,
            iterations=iterations,
        )
        report = solve_relaxation(encode_graph(g, config.d), relaxation["graph"], config, settings)
        report["status"] = "success"

    except QraoError as e:
        logger.warning("solve failed", extra={"graph": relaxation["graph"], "error": str(e)})
        report = {
            "status": "error",
            "graph": relaxation["graph"],
            "error": str(e),
            "exit_code": e.exit_code,
        }

    # Prompt Flow string output
    return json.dumps(report, indent=2, sort_keys=True)
