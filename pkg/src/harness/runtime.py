# src/harness/runtime.py

import statistics
import time
from typing import Callable, TypeVar

from src.errors import InvalidParameterError

T = TypeVar("T")


def measure_runtime(call: Callable[[], T], repeats: int = 3) -> tuple[T, float]:
    """Run ``call`` ``repeats`` times; return the last result and the median wall time."""
    if repeats < 1:
        raise InvalidParameterError(f"repeats must be positive, got {repeats}")
    durations = []
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = call()
        durations.append(time.perf_counter() - start)
    return result, statistics.median(durations)
