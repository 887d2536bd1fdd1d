"""
Test script for qrao_evaluation flow
"""

import json
import sys
from pathlib import Path

import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

pytest.importorskip("promptflow.core")

from prompt_flows.qrao_evaluation.aggregate_results import PASS_THRESHOLD, aggregate_results
from prompt_flows.qrao_evaluation.calculate_score import calculate_score
from prompt_flows.qrao_evaluation.evaluate_rounding import evaluate_rounding

SAMPLE_REPORT = {
    "status": "success",
    "config": {"d": 3},
    "graph": {"source": "PETERSEN"},
    "relaxed_energy": 12.5,
    "optimal_cut": 12.0,
    "rounding": {
        "magic": {"cuts": [9.0, 10.0, 11.0], "best_cut": 11.0},
        "pauli": {"cuts": [12.0], "best_cut": 12.0},
    },
}


def test_evaluation():
    """Test the evaluation flow with a sample report"""

    print("Testing QRAO Evaluation Flow")
    print("=" * 60)

    # Step 1: Evaluate rounding
    print("\nStep 1: Evaluating rounding...")
    evaluation_result = evaluate_rounding(report=json.dumps(SAMPLE_REPORT))

    print("\nEvaluation Result:")
    for key, value in evaluation_result.items():
        print(f"  {key}: {value}")

    assert evaluation_result["status"] == "success"
    assert evaluation_result["gamma_magic"] == pytest.approx(10 / 12)
    assert evaluation_result["best_gamma_magic"] == pytest.approx(11 / 12)
    assert evaluation_result["gamma_pauli"] == 1.0
    assert evaluation_result["bound"] == pytest.approx(5 / 9)
    assert evaluation_result["meets_bound"] is True

    # Step 2: Calculate overall score
    print("\nStep 2: Calculating overall score...")
    overall_score = calculate_score(evaluation_result)
    print(f"\nOverall gamma: {overall_score}")
    assert overall_score == "1.0"

    status = "PASS ✓" if float(overall_score) >= PASS_THRESHOLD else "FAIL ✗"
    print(f"Status: {status} (threshold: {PASS_THRESHOLD})")

    print("\n" + "=" * 60)
    print("Evaluation test complete!")


def test_explicit_optimum_and_errors():
    result = evaluate_rounding(report=json.dumps(SAMPLE_REPORT), optimal_cut=15.0)
    assert result["gamma_pauli"] == pytest.approx(0.8)

    assert evaluate_rounding(report="not json")["status"] == "error"
    failed = evaluate_rounding(report=json.dumps({"status": "error", "error": "boom"}))
    assert failed == {"status": "error", "error": "boom"}
    assert calculate_score(failed) == "0.0"


def test_aggregation(monkeypatch):
    logged = {}
    monkeypatch.setattr(
        "prompt_flows.qrao_evaluation.aggregate_results.log_metric",
        lambda key, value: logged.__setitem__(key, value),
    )
    summary = aggregate_results(["1.0", "0.5", "0.75"])
    assert summary["average_gamma"] == 0.75
    assert summary["passed_cases"] == 2
    assert summary["pass_rate"] == pytest.approx(66.67)
    assert logged["total_cases"] == 3
    assert aggregate_results([])["total_cases"] == 0


if __name__ == "__main__":
    test_evaluation()
