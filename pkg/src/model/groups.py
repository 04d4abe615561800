# src/model/groups.py

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from src.errors import InvalidParameterError
from src.model.instance import CapacityVector


@dataclass(frozen=True)
class MulticastGroup:
    """
    A (t+1)-user set S with its users ranked by capacity.

    ``order[i - 1]`` is k(S, i), ``rates[i - 1]`` is c(S, i) and
    ``time_ladder[j]`` is T(S, j): the time to send the codeword that serves
    the ``j`` strongest members. ``time_ladder[0]`` is 0 (group skipped);
    a zero-rate rank maps to ``math.inf``.
    """

    members: tuple[int, ...]
    order: tuple[int, ...]
    rates: tuple[float, ...]
    time_ladder: tuple[float, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def served(self, j: int) -> tuple[int, ...]:
        return self.order[:j]

    def rate(self, j: int) -> float:
        return self.rates[j - 1]


def enumerate_groups(k: int, t: int) -> list[tuple[int, ...]]:
    """All (t+1)-subsets of users 1..k in lexicographic order."""
    if not 1 <= t <= k - 1:
        raise InvalidParameterError(f"t must lie in [1, K-1], got t={t}, K={k}")
    return list(combinations(range(1, k + 1), t + 1))


def build_group(members: Iterable[int], capacities: CapacityVector, p: int) -> MulticastGroup:
    members = tuple(sorted(members))
    if len(members) < 2:
        raise InvalidParameterError("a multicast group needs at least two members")
    if p < 1:
        raise InvalidParameterError(f"subpacketization must be positive, got {p}")

    # strongest first, equal rates by ascending id
    order = tuple(sorted(members, key=lambda u: (-capacities.of(u), u)))
    rates = tuple(capacities.of(u) for u in order)
    descriptor_size = 1.0 / p
    ladder = (0.0,) + tuple(descriptor_size / c if c > 0 else math.inf for c in rates)
    return MulticastGroup(members=members, order=order, rates=rates, time_ladder=ladder)


def group_count(k: int, t: int) -> int:
    return math.comb(k, t + 1)


def selection_count(k: int, t: int) -> int:
    """Size of the exhaustive search space, (t+2)^C(K, t+1)."""
    return (t + 2) ** group_count(k, t)
