# src/harness/sweep.py

import logging
import math
from dataclasses import dataclass

from src.config import FEASIBILITY_EPS
from src.errors import InvalidParameterError
from src.model.instance import Instance
from src.solvers import run_solver

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    t_lim: float
    qoe_sum: int
    qoe_per_user: tuple[int, ...]


def sweep_points(start: float, stop: float, step: float) -> list[float]:
    """start, start + step, ... up to and including stop; empty when stop < start."""
    if not step > 0 or not math.isfinite(step):
        raise InvalidParameterError(f"sweep step must be positive, got {step}")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise InvalidParameterError(f"sweep bounds must be finite, got start={start}, stop={stop}")
    if start < 0:
        raise InvalidParameterError(f"sweep start must be nonnegative, got {start}")
    if stop < start:
        return []
    count = math.floor((stop - start) / step + FEASIBILITY_EPS) + 1
    return [float(start + i * step) for i in range(count)]


def sweep_tlim(instance: Instance, solver: str, start: float, stop: float, step: float) -> list[SweepRow]:
    groups = instance.groups
    rows = []
    for t_lim in sweep_points(start, stop, step):
        report = run_solver(solver, groups, t_lim, instance.t)
        rows.append(SweepRow(t_lim, report.qoe_sum, report.schedule.qoe_per_user))
    logger.info(f"sweep with {solver}: {len(rows)} points, K={instance.k}, t={instance.t}")
    return rows
