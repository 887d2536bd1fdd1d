"""
Score the rounding results of a solver report against the optimal cut
"""

import json
import sys
from pathlib import Path

from promptflow.core import tool

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from qrao.errors import InvalidArgumentError
from qrao.rounding import approximation_ratio, magic_bound


@tool
def evaluate_rounding(report: str, optimal_cut: float = 0.0) -> dict:
    """
    Approximation ratios of every rounding method in a solver report.

    Args:
        report: JSON report from the solver flow
        optimal_cut: Reference optimum; 0 falls back to the report's optimal_cut

    Returns:
        Per-method gamma, the worst-case bound for the report's d and whether the
        magic-rounding mean meets it
    """
    try:
        parsed = json.loads(report)
    except json.JSONDecodeError as e:
        return {"status": "error", "error": f"report is not JSON: {e}"}

    if parsed.get("status", "success") != "success":
        return {"status": "error", "error": parsed.get("error", "solver failed")}

    optimum = optimal_cut or parsed.get("optimal_cut")
    if not optimum:
        return {"status": "error", "error": "no optimal cut known for this graph"}

    d = parsed["config"]["d"]
    result = {
        "status": "success",
        "graph": parsed["graph"]["source"],
        "d": d,
        "optimal_cut": float(optimum),
        "relaxed_energy": parsed["relaxed_energy"],
        "bound": magic_bound(d),
    }
    try:
        for method, summary in parsed["rounding"].items():
            cuts = summary["cuts"]
            result[f"gamma_{method}"] = approximation_ratio(sum(cuts) / len(cuts), optimum)
            result[f"best_gamma_{method}"] = approximation_ratio(summary["best_cut"], optimum)
    except InvalidArgumentError as e:
        return {"status": "error", "error": str(e)}

    if "gamma_magic" in result:
        result["meets_bound"] = result["gamma_magic"] >= result["bound"]
    return result
