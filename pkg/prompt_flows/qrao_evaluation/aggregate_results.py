"""
Aggregate approximation ratios across all evaluated reports
"""

from typing import List

from promptflow.core import log_metric, tool

# worst-case expected ratio of magic rounding at d=3
PASS_THRESHOLD = round(5 / 9, 4)


@tool
def aggregate_results(scores: List[str]) -> dict:
    """
    Aggregate gamma values from all evaluated reports.

    Args:
        scores: Overall gamma of every report

    Returns:
        Average, pass rate against the 5/9 bound, min and max
    """
    if not scores:
        return {
            "average_gamma": 0.0,
            "pass_rate": 0.0,
            "total_cases": 0,
            "passed_cases": 0,
        }

    gammas = [float(score) for score in scores]
    average_gamma = round(sum(gammas) / len(gammas), 4)
    passed_cases = sum(1 for gamma in gammas if gamma >= PASS_THRESHOLD)
    pass_rate = round(passed_cases / len(gammas) * 100, 2)

    log_metric(key="average_gamma", value=average_gamma)
    log_metric(key="pass_rate", value=pass_rate)
    log_metric(key="total_cases", value=len(gammas))
    log_metric(key="passed_cases", value=passed_cases)

    return {
        "average_gamma": average_gamma,
        "pass_rate": pass_rate,
        "total_cases": len(gammas),
        "passed_cases": passed_cases,
        "min_gamma": round(min(gammas), 4),
        "max_gamma": round(max(gammas), 4),
        "pass_threshold": PASS_THRESHOLD,
    }
