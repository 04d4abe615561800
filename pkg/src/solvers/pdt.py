# src/solvers/pdt.py

import heapq
import logging
import math
import time
from typing import Sequence

from src.model.groups import MulticastGroup
from src.solvers.report import GreedyState, SolverReport, check_budget, finish, fits

logger = logging.getLogger(__name__)


def _actions(group: MulticastGroup, index: int, level: int) -> list[tuple]:
    """
    Every move of group ``index`` from ``level`` to a higher level, keyed by
    perceived delivery time (extra time per extra descriptor).
    Entries: (pdt, group index, target level, source level, extra time).
    """
    ladder = group.time_ladder
    base = ladder[level]
    moves = []
    for target in range(level + 1, len(ladder)):
        cost = ladder[target] - base
        if not math.isfinite(cost):
            break
        moves.append((cost / (target - level), index, target, level, cost))
    return moves


class PDTSolver:
    """
    Perceived Delivery Time greedy: repeatedly apply the feasible action
    A(S, j') with the least (T(S, j') - T(S, j_S)) / (j' - j_S), until no
    action fits the remaining budget. Ties go to the lexicographically
    smallest group, then the smallest j'.

    Candidate actions sit in one heap. An entry is dropped when its group has
    moved since it was pushed, or when it no longer fits: the remaining budget
    only shrinks, so an action that does not fit now never will while its
    group stays put.
    """

    name = "pdt"

    def solve(self, groups: Sequence[MulticastGroup], t_lim: float, t: int) -> SolverReport:
        check_budget(t_lim)
        start = time.perf_counter()

        state = GreedyState.start(len(groups), t_lim, t)
        queue = []
        for index, group in enumerate(groups):
            queue.extend(_actions(group, index, 0))
        heapq.heapify(queue)

        iterations = 0
        while queue:
            _, index, target, source, cost = heapq.heappop(queue)
            if state.alpha[index] != source:
                continue
            if not fits(cost, state.remaining_budget):
                continue
            state.advance(index, target, cost)
            iterations += 1

            for move in _actions(groups[index], index, target):
                heapq.heappush(queue, move)

        elapsed = time.perf_counter() - start
        return finish(self.name, state.alpha, groups, t_lim, t, elapsed, iterations)


def solve_pdt(groups: Sequence[MulticastGroup], t_lim: float, t: int) -> SolverReport:
    return PDTSolver().solve(groups, t_lim, t)
