"""
Simultaneous perturbation stochastic approximation (SPSA), maximizing form.
"""

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from qrao.errors import InvalidArgumentError, OptimizationError
from qrao.logging_utils import get_logger

logger = get_logger(__name__)

Objective = Callable[[np.ndarray], float]

TRACE_COLUMNS = ["iteration", "objective", "best_so_far"]
CALIBRATION_TARGET = 2 * math.pi / 10
LOG_EVERY = 50


@dataclass(frozen=True)
class SpsaConfig:
    """
    Gain schedules ``a_k = a / (k + 1 + A)^alpha`` and ``c_k = c / (k + 1)^gamma``.

    ``stability`` is A; it defaults to 5% of the iteration count. With ``calibrate``
    set, ``a`` is replaced by a value derived from ``calibration_probes`` gradient
    probes at the starting point.
    """

    iterations: int = 500
    a: float = 0.2
    c: float = 0.1
    alpha: float = 0.602
    gamma: float = 0.101
    stability: Optional[float] = None
    seed: int = 0
    calibrate: bool = False
    calibration_probes: int = 25

    def __post_init__(self):
        if self.iterations < 0:
            raise InvalidArgumentError("iterations must be non-negative")
        if min(self.a, self.c, self.alpha, self.gamma) <= 0:
            raise InvalidArgumentError("SPSA gains and exponents must be positive")
        if self.stability is not None and self.stability < 0:
            raise InvalidArgumentError("stability constant must be non-negative")
        if self.calibration_probes < 1:
            raise InvalidArgumentError("calibration needs at least one probe")

    @property
    def big_a(self) -> float:
        return 0.05 * self.iterations if self.stability is None else self.stability

    def learning_rate(self, k: int, a: Optional[float] = None) -> float:
        return (self.a if a is None else a) / (k + 1 + self.big_a) ** self.alpha

    def perturbation(self, k: int) -> float:
        return self.c / (k + 1) ** self.gamma


@dataclass
class SpsaResult:
    best_params: np.ndarray
    best_value: float
    final_params: np.ndarray
    trace: List[float] = field(default_factory=list)
    evaluations: int = 0

    def to_frame(self) -> pd.DataFrame:
        """Trace as ``iteration, objective, best_so_far``; row 0 is the start point."""
        objective = np.asarray(self.trace, dtype=float)
        return pd.DataFrame(
            {
                "iteration": np.arange(len(objective)),
                "objective": objective,
                "best_so_far": np.maximum.accumulate(objective) if len(objective) else objective,
            },
            columns=TRACE_COLUMNS,
        )

    def write_trace_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, index=False)
        return path


def _evaluate(objective: Objective, params: np.ndarray, iteration: int) -> float:
    value = float(objective(params))
    if not math.isfinite(value):
        raise OptimizationError(
            f"objective returned {value} at iteration {iteration}", iteration=iteration
        )
    return value


def _rademacher(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.choice(np.array([-1.0, 1.0]), size=size)


def calibrate_gain(
    objective: Objective, params: np.ndarray, config: SpsaConfig, rng: np.random.Generator
) -> float:
    """Pick ``a`` so the first step has magnitude about 2*pi/10."""
    c0 = config.perturbation(0)
    magnitude = 0.0
    for _ in range(config.calibration_probes):
        delta = _rademacher(rng, params.size)
        plus = _evaluate(objective, params + c0 * delta, 0)
        minus = _evaluate(objective, params - c0 * delta, 0)
        magnitude += abs(plus - minus) / (2 * c0)
    magnitude /= config.calibration_probes
    if magnitude == 0:
        return config.a
    return CALIBRATION_TARGET * (1 + config.big_a) ** config.alpha / magnitude


def spsa_maximize(
    objective: Objective, config: SpsaConfig, initial: Sequence[float]
) -> SpsaResult:
    """
    Maximize ``objective`` starting from ``initial``.

    Each iteration draws a Rademacher perturbation, estimates the gradient from the
    two-sided difference and steps uphill. The objective is evaluated once more at
    every new iterate; those values form the trace and decide the best parameters.

    Raises:
        OptimizationError: The objective returned NaN or infinity.
    """
    rng = np.random.default_rng(config.seed)
    params = np.array(initial, dtype=float)
    if params.ndim != 1:
        raise InvalidArgumentError("initial parameters must be a flat vector")

    a = calibrate_gain(objective, params, config, rng) if config.calibrate else config.a

    value = _evaluate(objective, params, 0)
    result = SpsaResult(
        best_params=params.copy(),
        best_value=value,
        final_params=params.copy(),
        trace=[value],
        evaluations=1,
    )

    for k in range(config.iterations):
        c_k = config.perturbation(k)
        delta = _rademacher(rng, params.size)
        plus = _evaluate(objective, params + c_k * delta, k)
        minus = _evaluate(objective, params - c_k * delta, k)
        gradient = (plus - minus) / (2 * c_k) * delta
        params = params + config.learning_rate(k, a) * gradient

        value = _evaluate(objective, params, k + 1)
        result.trace.append(value)
        result.evaluations += 3
        if value > result.best_value:
            result.best_value = value
            result.best_params = params.copy()
        if (k + 1) % LOG_EVERY == 0:
            logger.debug(
                "spsa progress",
                extra={"iteration": k + 1, "objective": value, "best": result.best_value},
            )

    result.final_params = params
    return result
