# src/model/schedule.py

import math
from numbers import Integral
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from src.errors import InvalidParameterError
from src.model.groups import MulticastGroup


@dataclass(frozen=True)
class Schedule:
    """A decision j_S for every group plus the totals it implies."""

    decisions: dict[tuple[int, ...], int]
    total_time: float
    qoe_sum: int
    qoe_per_user: tuple[int, ...]

    def levels(self) -> tuple[int, ...]:
        return tuple(self.decisions.values())


Decisions = Union[Sequence[int], Mapping[tuple[int, ...], int]]


def evaluate_schedule(
    decisions: Decisions, groups: Sequence[MulticastGroup], k: int, t: int
) -> Schedule:
    """
    Fill in total time and QoE counts for ``decisions``.

    ``decisions`` is either aligned with ``groups`` or keyed by group members.
    The budget is not checked here.
    """
    if isinstance(decisions, Mapping):
        try:
            levels = [decisions[g.members] for g in groups]
        except KeyError as exc:
            raise InvalidParameterError(f"no decision for group {exc.args[0]}")
    else:
        levels = list(decisions)
        if len(levels) != len(groups):
            raise InvalidParameterError(
                f"expected {len(groups)} decisions, got {len(levels)}"
            )

    per_user = [0] * k
    times = []
    for group, j in zip(groups, levels):
        if isinstance(j, bool) or not isinstance(j, Integral) or not 0 <= j <= t + 1:
            raise InvalidParameterError(f"decision {j!r} for {group.members} outside [0, {t + 1}]")
        times.append(group.time_ladder[j])
        for user in group.served(j):
            per_user[user - 1] += 1

    return Schedule(
        decisions={g.members: int(j) for g, j in zip(groups, levels)},
        total_time=math.fsum(times),
        qoe_sum=int(sum(levels)),
        qoe_per_user=tuple(per_user),
    )


def demo_reference_assignment() -> tuple[int, ...]:
    """Optimal levels for the five-user demo at T_lim = 10 s."""
    return (3, 2, 2, 1, 1, 1, 0, 0, 0, 0)
