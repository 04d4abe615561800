# src/solvers/report.py

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from src.config import FEASIBILITY_EPS
from src.errors import InvalidParameterError
from src.model.groups import MulticastGroup
from src.model.schedule import Schedule, evaluate_schedule

logger = logging.getLogger(__name__)

ALGORITHMS = ("exhaustive", "dp", "sdt", "pdt")


@dataclass(frozen=True)
class SolverReport:
    schedule: Schedule
    algorithm: str
    wall_time: float
    iterations: int

    @property
    def qoe_sum(self) -> int:
        return self.schedule.qoe_sum


def fits(cost: float, budget: float) -> bool:
    """True when a finite ``cost`` fits in ``budget`` up to the feasibility slack."""
    return math.isfinite(cost) and cost <= budget + FEASIBILITY_EPS


def check_budget(t_lim: float) -> None:
    if math.isnan(t_lim) or t_lim < 0:
        raise InvalidParameterError(f"T_lim must be nonnegative, got {t_lim}")


def user_count(groups: Sequence[MulticastGroup]) -> int:
    return max((max(g.members) for g in groups), default=0)


def finish(
    algorithm: str,
    levels: Sequence[int],
    groups: Sequence[MulticastGroup],
    t_lim: float,
    t: int,
    wall_time: float,
    iterations: int,
) -> SolverReport:
    schedule = evaluate_schedule([int(j) for j in levels], groups, user_count(groups), t)
    assert schedule.total_time <= t_lim + FEASIBILITY_EPS, (
        f"{algorithm} overran the budget: {schedule.total_time} > {t_lim}"
    )
    logger.debug(
        f"{algorithm}: groups={len(groups)} T_lim={t_lim} qoe={schedule.qoe_sum} "
        f"iterations={iterations} wall={wall_time:.6f}s"
    )
    return SolverReport(schedule=schedule, algorithm=algorithm, wall_time=wall_time, iterations=iterations)


# ---------------------------------------------------------
# Greedy bookkeeping shared by SDT and PDT
# ---------------------------------------------------------
@dataclass
class GreedyState:
    """
    alpha[g]: current level of group g; beta[g]: candidate cost(s) of its next move;
    remaining_budget: unspent seconds; accumulated_qoe: sum of alpha.
    """

    alpha: list[int]
    beta: list[Any]
    remaining_budget: float
    accumulated_qoe: int = 0
    top: int = field(default=0)

    @classmethod
    def start(cls, group_total: int, t_lim: float, t: int) -> "GreedyState":
        return cls(
            alpha=[0] * group_total,
            beta=[math.inf] * group_total,
            remaining_budget=t_lim,
            top=t + 1,
        )

    def advance(self, index: int, level: int, cost: float) -> None:
        gained = level - self.alpha[index]
        if not 0 < gained <= self.top - self.alpha[index]:
            raise InvalidParameterError(f"cannot move group {index} to level {level}")
        self.alpha[index] = level
        self.accumulated_qoe += gained
        # may dip below zero by at most the feasibility slack
        self.remaining_budget -= cost
