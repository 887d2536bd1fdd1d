"""
Calculate the overall approximation ratio of one evaluated report
"""

from promptflow.core import tool


@tool
def calculate_score(evaluation_result: dict) -> str:
    """
    Best approximation ratio among the rounding methods.

    Args:
        evaluation_result: Output of the evaluate_rounding node

    Returns:
        Overall gamma as string (0.0 for failed evaluations)
    """
    if evaluation_result.get("status") != "success":
        return "0.0"

    ratios = [
        float(value)
        for key, value in evaluation_result.items()
        if key.startswith("gamma_")
    ]
    overall = round(max(ratios), 4) if ratios else 0.0

    # Prompt Flow string output
    return str(overall)
