# src/harness/channels.py

import math

import numpy as np

from src.errors import InvalidParameterError
from src.model.instance import ChannelSpec, DirectCapacities, Instance


def trial_rng(seed: int, k: int, t: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, K, t, trial); order of execution does not matter."""
    return np.random.default_rng(np.random.SeedSequence([seed, k, t, trial]))


def draw_raw_channels(k: int, rng: np.random.Generator) -> np.ndarray:
    """K i.i.d. circularly-symmetric complex Gaussian coefficients, unit variance."""
    if k < 1:
        raise InvalidParameterError(f"need at least one user, got K={k}")
    return (rng.standard_normal(k) + 1j * rng.standard_normal(k)) / math.sqrt(2.0)


def gen_channels(k: int, rng: np.random.Generator) -> np.ndarray:
    """
    Gaussian channels scaled so the strongest amplitude is exactly one.

    The returned coefficients are the scaled draws times one common phase,
    chosen so the strongest coefficient is exactly the real 1.0. Amplitudes,
    and so capacities, match the plain scaled draws.
    """
    h = draw_raw_channels(k, rng)
    strongest = int(np.argmax(np.abs(h)))
    h = h * (np.conj(h[strongest]) / np.abs(h[strongest]) ** 2)
    h[strongest] = 1.0
    return h


def gen_capacities(k: int, rng: np.random.Generator) -> np.ndarray:
    """Direct mode: rates drawn uniform on (0, 1], rescaled so the largest is one."""
    if k < 1:
        raise InvalidParameterError(f"need at least one user, got K={k}")
    c = 1.0 - rng.random(k)
    return c / c.max()


def snr_linear(snr_db: float) -> float:
    return 10.0 ** (snr_db / 10.0)


def random_instance(
    k: int,
    t: int,
    t_lim: float,
    rng: np.random.Generator,
    capacity_mode: str = "channels",
    snr_db: float = 10.0,
    log_base: float = 2.0,
) -> Instance:
    if capacity_mode == "channels":
        h = gen_channels(k, rng)
        spec = ChannelSpec(
            coefficients=tuple(complex(x) for x in h),
            p_t=snr_linear(snr_db),
            n_0=1.0,
            log_base=log_base,
        )
    elif capacity_mode == "direct":
        spec = DirectCapacities(tuple(float(c) for c in gen_capacities(k, rng)))
    else:
        raise InvalidParameterError(f"unknown capacity mode {capacity_mode!r}")
    return Instance(k=k, t=t, t_lim=t_lim, capacity_spec=spec)
