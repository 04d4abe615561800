# src/solvers/exhaustive.py

import logging
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from src.config import get_settings
from src.errors import TooLargeForExactError
from src.model.groups import MulticastGroup
from src.solvers.report import SolverReport, check_budget, finish, fits

logger = logging.getLogger(__name__)


@dataclass
class ExhaustiveConfig:
    # largest (t+2)^gamma search space accepted
    cap: int = field(default_factory=lambda: get_settings().exhaustive_cap)


class ExhaustiveSolver:
    """
    Plain recursive search over every level assignment.

    Groups are peeled off in lexicographic order; the first group takes each
    level 0..t+1 in turn and the rest of the groups share the leftover budget.
    Levels that no longer fit the leftover budget are not explored. No
    memoization: this is the literal reference for optimality.
    """

    name = "exhaustive"

    def __init__(self, config: Optional[ExhaustiveConfig] = None):
        self.config = config or ExhaustiveConfig()
        self._calls = 0

    def solve(self, groups: Sequence[MulticastGroup], t_lim: float, t: int) -> SolverReport:
        check_budget(t_lim)
        space = (t + 2) ** len(groups)
        if space > self.config.cap:
            raise TooLargeForExactError(
                f"exhaustive search over (t+2)^gamma = {t + 2}^{len(groups)} selections "
                f"exceeds the cap of {self.config.cap}"
            )

        start = time.perf_counter()
        self._calls = 0
        ladders = [g.time_ladder for g in groups]
        if ladders:
            _, levels = self._search(ladders, 0, t_lim, t + 1)
        else:
            levels = ()
        elapsed = time.perf_counter() - start
        return finish(self.name, levels, groups, t_lim, t, elapsed, self._calls)

    def _search(self, ladders, pos: int, budget: float, top: int) -> tuple[int, tuple[int, ...]]:
        self._calls += 1
        ladder = ladders[pos]

        if pos == len(ladders) - 1:
            best = 0
            for i in range(1, top + 1):
                if fits(ladder[i], budget):
                    best = i
            return best, (best,)

        best_value, best_levels = -1, ()
        for i in range(top + 1):
            cost = ladder[i]
            if not fits(cost, budget):
                break  # ladders are nondecreasing
            value, rest = self._search(ladders, pos + 1, budget - cost, top)
            value += i
            if value > best_value:
                best_value, best_levels = value, (i,) + rest
        return best_value, best_levels


def solve_exhaustive(
    groups: Sequence[MulticastGroup], t_lim: float, t: int, config: Optional[ExhaustiveConfig] = None
) -> SolverReport:
    return ExhaustiveSolver(config).solve(groups, t_lim, t)
