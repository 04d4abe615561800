# src/model/instance.py

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence, Union

import numpy as np

from src.errors import InvalidParameterError


# ---------------------------------------------------------
# Per-user capacity
# ---------------------------------------------------------
def capacity(h: complex, p_t: float, n_0: float, log_base: float = 2.0) -> float:
    """Error-free rate of a user with channel ``h``: log_base(1 + P_T |h|^2 / N_0)."""
    _check_link_params(p_t, n_0, log_base)
    snr = p_t * abs(h) ** 2 / n_0
    return math.log1p(snr) / math.log(log_base)


def capacities_from_channels(
    coefficients: Sequence[complex], p_t: float, n_0: float, log_base: float = 2.0
) -> np.ndarray:
    _check_link_params(p_t, n_0, log_base)
    h = np.asarray(coefficients, dtype=np.complex128)
    return np.log1p(p_t * np.abs(h) ** 2 / n_0) / math.log(log_base)


def _check_link_params(p_t: float, n_0: float, log_base: float) -> None:
    if not p_t > 0:
        raise InvalidParameterError(f"P_T must be positive, got {p_t}")
    if not n_0 > 0:
        raise InvalidParameterError(f"N_0 must be positive, got {n_0}")
    if not log_base > 0 or log_base == 1:
        raise InvalidParameterError(f"log base must be positive and != 1, got {log_base}")


# ---------------------------------------------------------
# Capacity sources
# ---------------------------------------------------------
@dataclass(frozen=True)
class DirectCapacities:
    values: tuple[float, ...]


@dataclass(frozen=True)
class ChannelSpec:
    coefficients: tuple[complex, ...]
    p_t: float
    n_0: float
    log_base: float = 2.0

    def __post_init__(self):
        _check_link_params(self.p_t, self.n_0, self.log_base)


CapacitySource = Union[DirectCapacities, ChannelSpec]


@dataclass(frozen=True, eq=False)
class CapacityVector:
    """Per-user rates in data units per second; user ``k`` lives at ``c[k - 1]``."""

    c: np.ndarray

    def __post_init__(self):
        arr = np.array(self.c, dtype=np.float64)
        if arr.ndim != 1:
            raise InvalidParameterError("capacity vector must be one-dimensional")
        if not np.all(np.isfinite(arr)) or np.any(arr < 0):
            raise InvalidParameterError("capacities must be finite and nonnegative")
        arr.setflags(write=False)
        object.__setattr__(self, "c", arr)

    def __len__(self) -> int:
        return len(self.c)

    def of(self, user: int) -> float:
        return float(self.c[user - 1])

    def permuted(self, perm: Sequence[int]) -> "CapacityVector":
        """Relabel users: new user ``i`` gets the rate of old user ``perm[i - 1]``."""
        return CapacityVector(np.array([self.of(u) for u in perm]))


# ---------------------------------------------------------
# Instance
# ---------------------------------------------------------
@dataclass(frozen=True)
class Instance:
    """
    One delivery-phase problem: ``k`` users, coded-caching gain ``t``,
    time budget ``t_lim`` seconds and the source of per-user capacities.
    ``m`` / ``n`` (cache size / library size in files) are optional and,
    when given, must satisfy t = k * m / n.
    """

    k: int
    t: int
    t_lim: float
    capacity_spec: CapacitySource
    m: Optional[float] = None
    n: Optional[int] = None
    _capacities: CapacityVector = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.k < 2:
            raise InvalidParameterError(f"need at least two users, got K={self.k}")
        if not 1 <= self.t <= self.k - 1:
            raise InvalidParameterError(f"t must lie in [1, K-1], got t={self.t}, K={self.k}")
        if math.isnan(self.t_lim) or self.t_lim < 0:
            raise InvalidParameterError(f"T_lim must be nonnegative, got {self.t_lim}")
        if (self.m is None) != (self.n is None):
            raise InvalidParameterError("M and N must be given together")
        if self.m is not None and self.k * self.m != self.t * self.n:
            raise InvalidParameterError(
                f"t must equal K*M/N exactly: K={self.k}, M={self.m}, N={self.n}, t={self.t}"
            )

        spec = self.capacity_spec
        if isinstance(spec, DirectCapacities):
            if len(spec.values) != self.k:
                raise InvalidParameterError(f"expected {self.k} capacities, got {len(spec.values)}")
            vector = CapacityVector(np.asarray(spec.values, dtype=np.float64))
        elif isinstance(spec, ChannelSpec):
            if len(spec.coefficients) != self.k:
                raise InvalidParameterError(
                    f"expected {self.k} channel coefficients, got {len(spec.coefficients)}"
                )
            vector = CapacityVector(
                capacities_from_channels(spec.coefficients, spec.p_t, spec.n_0, spec.log_base)
            )
        else:
            raise InvalidParameterError(f"unsupported capacity source {type(spec).__name__}")
        object.__setattr__(self, "_capacities", vector)

    @property
    def capacities(self) -> CapacityVector:
        return self._capacities

    @property
    def subpacketization(self) -> int:
        return math.comb(self.k, self.t)

    @cached_property
    def groups(self):
        from src.model.groups import build_group, enumerate_groups

        p = self.subpacketization
        return tuple(build_group(s, self.capacities, p) for s in enumerate_groups(self.k, self.t))

    def with_budget(self, t_lim: float) -> "Instance":
        return Instance(self.k, self.t, t_lim, self.capacity_spec, self.m, self.n)


def demo_instance(t_lim: float = 10.0) -> Instance:
    """Five users, t = 2, c_k = 1/(10k): one descriptor to user k takes k seconds."""
    k = 5
    return Instance(
        k=k,
        t=2,
        t_lim=t_lim,
        capacity_spec=DirectCapacities(tuple(1.0 / (10 * u) for u in range(1, k + 1))),
    )
