"""
Run the solver flow on every case of the benchmark dataset and score it with the
evaluation flow
"""

import json
import sys
from datetime import datetime
from pathlib import Path

import jsonlines
from dotenv import load_dotenv

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

# Load environment variables
load_dotenv(project_root / ".env")

from prompt_flows.qrao_evaluation.aggregate_results import aggregate_results
from prompt_flows.qrao_evaluation.calculate_score import calculate_score
from prompt_flows.qrao_evaluation.evaluate_rounding import evaluate_rounding
from prompt_flows.qrao_solver.build_relaxation import build_relaxation
from prompt_flows.qrao_solver.solve_and_round import solve_and_round
from qrao.logging_utils import configure_logging

SOLVER_OPTIONS = ("method", "rounding", "samples", "seed", "depth", "iterations")


def run_case(case: dict) -> dict:
    """
    Solver flow followed by the evaluation flow for one dataset case.

    Args:
        case: Dataset record with graph, d and solver options

    Returns:
        Relaxation summary, report and evaluation for the case
    """
    relaxation = build_relaxation(graph=case["graph"], d=case.get("d", 3))
    options = {key: case[key] for key in SOLVER_OPTIONS if key in case}
    report = solve_and_round(relaxation=relaxation, **options)
    evaluation = evaluate_rounding(report=report, optimal_cut=case.get("optimal_cut", 0.0))
    return {
        "relaxation": {k: v for k, v in relaxation.items() if k not in ("edges", "hamiltonian")},
        "report": json.loads(report),
        "evaluation": evaluation,
        "gamma": float(calculate_score(evaluation)),
    }


def main():
    configure_logging()

    dataset_path = project_root / "evaluation" / "benchmark_dataset.jsonl"
    output_dir = project_root / "evaluation" / "results"
    output_dir.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    output_path = output_dir / f"flow_benchmark_{timestamp}.json"

    print(f"Loading dataset from: {dataset_path}")
    print(f"Output will be saved to: {output_path}")
    print("-" * 80)

    with jsonlines.open(dataset_path) as reader:
        cases = list(reader)
    print(f"Loaded {len(cases)} cases")
    print("-" * 80)

    results = []
    for i, case in enumerate(cases, 1):
        print(f"\n[{i}/{len(cases)}] {case['graph']} d={case.get('d', 3)} "
              f"method={case.get('method', 'exact')} rounding={case.get('rounding', 'both')}")
        result = run_case(case)
        evaluation = result["evaluation"]

        if evaluation["status"] == "success":
            print(f"  → Qubits: {result['relaxation']['num_qubits']}")
            print(f"  → Relaxed energy: {evaluation['relaxed_energy']:.4f}")
            for key in sorted(k for k in evaluation if k.startswith("gamma_")):
                print(f"     - {key}: {evaluation[key]:.4f}")
        else:
            print(f"  → Error: {evaluation['error']}")

        results.append({"test_number": i, "case": case, **result})

    summary = aggregate_results([str(r["gamma"]) for r in results])

    output_data = {
        "timestamp": timestamp,
        "dataset": str(dataset_path),
        "total_cases": len(cases),
        "summary": summary,
        "results": results,
    }
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(output_data, f, indent=2, ensure_ascii=False)

    print("\n" + "=" * 80)
    print("BENCHMARK COMPLETE")
    print("=" * 80)
    print(f"Total cases: {len(cases)}")
    print(f"Average gamma: {summary['average_gamma']:.4f}")
    print(f"Pass rate (≥{summary.get('pass_threshold', 0)}): {summary['pass_rate']:.1f}% "
          f"({summary['passed_cases']}/{summary['total_cases']})")
    print(f"\nResults saved to: {output_path}")
    print("=" * 80)


if __name__ == "__main__":
    main()
