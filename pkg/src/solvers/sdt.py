# src/solvers/sdt.py

import heapq
import logging
import math
import time
from typing import Sequence

from src.model.groups import MulticastGroup
from src.solvers.report import GreedyState, SolverReport, check_budget, finish, fits

logger = logging.getLogger(__name__)


def _step_cost(group: MulticastGroup, level: int) -> float:
    """beta(S): extra time to serve one more member from ``level``."""
    if level + 1 >= len(group.time_ladder):
        return math.inf
    return group.time_ladder[level + 1] - group.time_ladder[level]


class SDTSolver:
    """
    Step Delivery Time greedy: repeatedly raise by one the group whose next
    single descriptor costs the least extra time, until that cheapest step no
    longer fits. Ties go to the lexicographically smallest group.
    """

    name = "sdt"

    def solve(self, groups: Sequence[MulticastGroup], t_lim: float, t: int) -> SolverReport:
        check_budget(t_lim)
        start = time.perf_counter()

        state = GreedyState.start(len(groups), t_lim, t)
        queue = []
        for index, group in enumerate(groups):
            state.beta[index] = _step_cost(group, 0)
            if math.isfinite(state.beta[index]):
                queue.append((state.beta[index], index))
        heapq.heapify(queue)

        iterations = 0
        while queue:
            cost, index = queue[0]
            if not fits(cost, state.remaining_budget):
                break  # the cheapest step does not fit, so none does
            level = state.alpha[index] + 1
            state.advance(index, level, cost)
            iterations += 1

            state.beta[index] = _step_cost(groups[index], level)
            if math.isfinite(state.beta[index]):
                heapq.heapreplace(queue, (state.beta[index], index))
            else:
                heapq.heappop(queue)

        elapsed = time.perf_counter() - start
        return finish(self.name, state.alpha, groups, t_lim, t, elapsed, iterations)


def solve_sdt(groups: Sequence[MulticastGroup], t_lim: float, t: int) -> SolverReport:
    return SDTSolver().solve(groups, t_lim, t)
