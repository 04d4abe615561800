# src/config.py

import os
from dataclasses import dataclass

from dotenv import load_dotenv

from src.errors import InvalidParameterError

load_dotenv()

# Absolute slack (seconds) for every budget comparison.
FEASIBILITY_EPS = 1e-9


def _env_number(name: str, default: float, kind=float):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return kind(default)
    try:
        return kind(float(raw)) if kind is int else kind(raw)
    except ValueError:
        raise InvalidParameterError(f"{name} must be numeric, got {raw!r}")


# ---------------------------------------------------------
# Settings
# ---------------------------------------------------------
@dataclass(frozen=True)
class Settings:
    log_level: str = "INFO"
    exhaustive_cap: int = 10**8
    dp_cell_cap: int = 50_000_000
    descriptor_bytes: int = 64
    snr_db: float = 10.0
    runtime_repeats: int = 3

    def __post_init__(self):
        if self.exhaustive_cap < 1:
            raise InvalidParameterError("QOE_EXHAUSTIVE_CAP must be positive")
        if self.dp_cell_cap < 1:
            raise InvalidParameterError("QOE_DP_CELL_CAP must be positive")
        if self.descriptor_bytes < 1:
            raise InvalidParameterError("QOE_DESCRIPTOR_BYTES must be positive")
        if self.runtime_repeats < 1:
            raise InvalidParameterError("QOE_RUNTIME_REPEATS must be positive")

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            log_level=os.getenv("QOE_LOG_LEVEL", "INFO").upper(),
            exhaustive_cap=_env_number("QOE_EXHAUSTIVE_CAP", 10**8, int),
            dp_cell_cap=_env_number("QOE_DP_CELL_CAP", 50_000_000, int),
            descriptor_bytes=_env_number("QOE_DESCRIPTOR_BYTES", 64, int),
            snr_db=_env_number("QOE_SNR_DB", 10.0),
            runtime_repeats=_env_number("QOE_RUNTIME_REPEATS", 3, int),
        )


def get_settings() -> Settings:
    return Settings.from_env()
