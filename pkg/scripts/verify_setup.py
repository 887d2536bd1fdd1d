"""
Verification script for the QRAO MaxCut toolkit
Checks configuration, shipped data and the numeric stack, then solves one edge.
"""

import importlib
import sys
from datetime import datetime
from pathlib import Path

from dotenv import load_dotenv

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))
load_dotenv(project_root / ".env")

# Color codes for terminal output
GREEN = '\033[92m'
RED = '\033[91m'
YELLOW = '\033[93m'
BLUE = '\033[94m'
RESET = '\033[0m'

REQUIRED_PACKAGES = ["numpy", "scipy", "networkx", "pandas", "yaml", "pythonjsonlogger", "tqdm", "jsonlines"]


def print_header(text):
    print(f"\n{BLUE}{'=' * 80}{RESET}")
    print(f"{BLUE}{text.center(80)}{RESET}")
    print(f"{BLUE}{'=' * 80}{RESET}\n")


def print_success(text):
    print(f"{GREEN}✓ {text}{RESET}")


def print_error(text):
    print(f"{RED}✗ {text}{RESET}")


def print_warning(text):
    print(f"{YELLOW}⚠ {text}{RESET}")


def print_info(text):
    print(f"  {text}")


def check_environment_file():
    """Load settings from .env (optional) and the environment."""
    print_header("STEP 1: Checking Configuration")

    env_path = project_root / ".env"
    if env_path.exists():
        print_success(".env file found")
    else:
        print_warning(".env file not found, using defaults (see .env.example)")

    from qrao.config import Settings
    from qrao.errors import QraoError

    try:
        settings = Settings.from_env()
    except QraoError as e:
        print_error(f"Invalid configuration: {e}")
        return False

    print_success("Settings loaded")
    print_info(f"Brute force cap: {settings.brute_force_max_vertices} vertices")
    print_info(f"Dense eigensolver cap: {settings.dense_max_qubits} qubits")
    print_info(f"Eigensolver cap: {settings.eigensolver_max_qubits} qubits")
    print_info(f"Data directory: {settings.data_dir}")
    return True


def check_packages():
    print_header("STEP 2: Checking Python Packages")

    all_present = True
    for name in REQUIRED_PACKAGES:
        try:
            module = importlib.import_module(name)
            print_success(f"{name} {getattr(module, '__version__', '')}".rstrip())
        except ImportError:
            print_error(f"{name} not installed. Run: pip install -r requirements.txt")
            all_present = False
    return all_present


def check_data_files():
    """Fixtures and the ply specification."""
    print_header("STEP 3: Checking Data Files")

    from qrao.errors import QraoError
    from qrao.problems import FIXTURE_NAMES, composite_ply_spec, fixture

    ok = True
    for name in FIXTURE_NAMES:
        try:
            g = fixture(name)
            print_success(f"{name}: {g.num_vertices} vertices, {g.num_edges} edges")
        except QraoError as e:
            print_error(f"{name}: {e}")
            ok = False

    try:
        spec = composite_ply_spec()
        print_success(f"Ply specification: {spec.num_plies} plies, {len(spec.constraints)} constraints")
    except QraoError as e:
        print_error(f"Ply specification: {e}")
        ok = False
    return ok


def check_evaluation_dataset():
    print_header("STEP 4: Checking Benchmark Dataset")

    import jsonlines

    dataset_path = project_root / "evaluation" / "benchmark_dataset.jsonl"
    if not dataset_path.exists():
        print_error("Benchmark dataset not found!")
        return False
    with jsonlines.open(dataset_path) as reader:
        cases = list(reader)
    print_success(f"Benchmark dataset found with {len(cases)} cases")
    print_info(f"Location: {dataset_path}")
    return True


def test_single_edge_solve():
    """The single unit edge has maximal relaxed energy 2 and expected rounded cut 2/3."""
    print_header("STEP 5: Solving a Single Edge")

    from qrao.graph import Graph
    from qrao.pipeline import encode_graph
    from qrao.rounding import expected_rounded_energy
    from qrao.simulator import extremal_eigenstate

    relaxation = encode_graph(Graph(2, [(0, 1, 1.0)]), 3)
    state, energy = extremal_eigenstate(relaxation.hamiltonian)
    expected = expected_rounded_energy(relaxation.hamiltonian, state, 3)
    print_info(f"Maximal relaxed energy: {energy:.10f}")
    print_info(f"Expected rounded cut: {expected:.10f}")

    if abs(energy - 2.0) < 1e-9 and abs(expected - 2.0 / 3.0) < 1e-9:
        print_success("Single-edge relaxation matches the analytic values")
        return True
    print_error("Single-edge relaxation does not match the analytic values")
    return False


def check_folders():
    print_header("STEP 6: Checking Project Structure")

    required_folders = {
        'qrao': 'Library package',
        'data': 'Fixtures and ply data',
        'config': 'Benchmark configuration',
        'evaluation': 'Benchmark datasets',
        'scripts': 'Utility scripts',
        'prompt_flows': 'Prompt Flow configurations',
        'tests': 'Test suite',
    }

    all_exist = True
    for folder, description in required_folders.items():
        if (project_root / folder).exists():
            print_success(f"{description} folder exists: {folder}/")
        else:
            print_warning(f"{description} folder missing: {folder}/")
            all_exist = False
    return all_exist


def main():
    print(f"\n{BLUE}╔{'═' * 78}╗{RESET}")
    print(f"{BLUE}║{'QRAO MAXCUT TOOLKIT - SETUP VERIFICATION'.center(78)}║{RESET}")
    print(f"{BLUE}╚{'═' * 78}╝{RESET}")
    print(f"\nTimestamp: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}\n")

    checks = [
        ("Configuration", check_environment_file),
        ("Python Packages", check_packages),
        ("Data Files", check_data_files),
        ("Benchmark Dataset", check_evaluation_dataset),
        ("Project Structure", check_folders),
        ("Single Edge Solve", test_single_edge_solve),
    ]

    results = []
    for name, check_func in checks:
        try:
            results.append((name, check_func()))
        except Exception as e:
            print_error(f"Error during {name} check: {str(e)}")
            results.append((name, False))

    print_header("VERIFICATION SUMMARY")

    passed = sum(1 for _, result in results if result)
    for name, result in results:
        if result:
            print_success(f"{name}: PASSED")
        else:
            print_error(f"{name}: FAILED or INCOMPLETE")

    print(f"\n{BLUE}Overall: {passed}/{len(results)} checks passed{RESET}\n")
    if passed == len(results):
        print_success("All checks passed! Try: python -m qrao solve --fixture PETERSEN")
    else:
        print_warning("Some checks failed. Please review the issues above and fix them.")
    print(f"\n{BLUE}{'=' * 80}{RESET}\n")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
