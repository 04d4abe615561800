# src/solvers/dp.py

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from src.config import FEASIBILITY_EPS, get_settings
from src.errors import TooLargeForExactError
from src.model.groups import MulticastGroup
from src.solvers.report import SolverReport, check_budget, finish

logger = logging.getLogger(__name__)


@dataclass
class DPConfig:
    # largest gamma * (V + 1) back-trace table accepted
    cell_cap: int = field(default_factory=lambda: get_settings().dp_cell_cap)


class DPSolver:
    """
    Exact multiple-choice knapsack over the value axis.

    After processing the first g groups, ``best_time[v]`` is the least total
    time that delivers exactly v descriptors. The answer is the largest v whose
    time fits the budget; ``choice[g, v]`` records the level that achieved it.
    """

    name = "dp"

    def __init__(self, config: Optional[DPConfig] = None):
        self.config = config or DPConfig()

    def solve(self, groups: Sequence[MulticastGroup], t_lim: float, t: int) -> SolverReport:
        check_budget(t_lim)
        top = t + 1
        value_bound = top * len(groups)
        cells = len(groups) * (value_bound + 1)
        if cells > self.config.cell_cap:
            raise TooLargeForExactError(
                f"value table of {len(groups)} x {value_bound + 1} cells exceeds the cap of {self.config.cell_cap}"
            )

        start = time.perf_counter()
        best_time = np.full(value_bound + 1, np.inf)
        best_time[0] = 0.0
        choice = np.zeros((len(groups), value_bound + 1), dtype=np.min_scalar_type(top))
        iterations = 0

        for g, group in enumerate(groups):
            merged = np.full(value_bound + 1, np.inf)
            picked = np.zeros(value_bound + 1, dtype=choice.dtype)
            for j in range(top + 1):
                cost = group.time_ladder[j]
                if not math.isfinite(cost):
                    break
                candidate = np.full(value_bound + 1, np.inf)
                candidate[j:] = best_time[: value_bound + 1 - j] + cost
                better = candidate < merged
                merged[better] = candidate[better]
                picked[better] = j
                iterations += 1
            best_time = merged
            choice[g] = picked

        # unreachable values keep an infinite time, even against an unbounded budget
        feasible = np.flatnonzero(np.isfinite(best_time) & (best_time <= t_lim + FEASIBILITY_EPS))
        value = int(feasible[-1]) if feasible.size else 0

        levels = [0] * len(groups)
        for g in range(len(groups) - 1, -1, -1):
            j = int(choice[g, value])
            levels[g] = j
            value -= j

        elapsed = time.perf_counter() - start
        return finish(self.name, levels, groups, t_lim, t, elapsed, iterations)


def solve_dp(
    groups: Sequence[MulticastGroup], t_lim: float, t: int, config: Optional[DPConfig] = None
) -> SolverReport:
    return DPSolver(config).solve(groups, t_lim, t)
