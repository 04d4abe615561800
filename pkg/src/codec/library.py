# src/codec/library.py

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from src.errors import InvalidParameterError, MissingDescriptorError


@dataclass(frozen=True)
class Descriptor:
    """One MDC descriptor W_T(file): an opaque payload indexed by a t-subset of users."""

    file_id: int
    subset_id: int
    payload: bytes

    @property
    def key(self) -> tuple[int, int]:
        return (self.file_id, self.subset_id)


class SubsetIndex:
    """Lexicographic numbering of the t-subsets of users 1..k."""

    def __init__(self, k: int, t: int):
        if not 1 <= t <= k:
            raise InvalidParameterError(f"t must lie in [1, K], got t={t}, K={k}")
        self.k = k
        self.t = t
        self.subsets: tuple[tuple[int, ...], ...] = tuple(combinations(range(1, k + 1), t))
        self._ids = {s: i for i, s in enumerate(self.subsets)}

    def __len__(self) -> int:
        return len(self.subsets)

    def id_of(self, subset: Iterable[int]) -> int:
        key = tuple(sorted(subset))
        try:
            return self._ids[key]
        except KeyError:
            raise InvalidParameterError(f"{key} is not a {self.t}-subset of [1..{self.k}]")

    def subset(self, subset_id: int) -> tuple[int, ...]:
        return self.subsets[subset_id]


@dataclass(frozen=True)
class Library:
    n: int
    k: int
    t: int
    length: int
    descriptors: dict[tuple[int, int], Descriptor]
    index: SubsetIndex = field(repr=False, compare=False)

    def get(self, file_id: int, subset: Iterable[int]) -> Descriptor:
        key = (file_id, self.index.id_of(subset))
        try:
            return self.descriptors[key]
        except KeyError:
            raise MissingDescriptorError(f"library has no descriptor for file {file_id}, subset {tuple(subset)}")

    def without(self, file_id: int, subset: Iterable[int]) -> "Library":
        """Copy of the library with one descriptor removed."""
        key = (file_id, self.index.id_of(subset))
        kept = {k: d for k, d in self.descriptors.items() if k != key}
        return Library(self.n, self.k, self.t, self.length, kept, self.index)


def generate_library(
    n: int, k: int, t: int, length: int, rng: Optional[np.random.Generator] = None
) -> Library:
    """N files of C(K, t) random descriptors of ``length`` bytes each."""
    if n < 1:
        raise InvalidParameterError(f"library needs at least one file, got N={n}")
    if length < 1:
        raise InvalidParameterError(f"descriptor length must be positive, got {length}")
    rng = rng if rng is not None else np.random.default_rng()
    index = SubsetIndex(k, t)
    descriptors = {}
    for file_id in range(1, n + 1):
        for subset_id in range(len(index)):
            descriptors[(file_id, subset_id)] = Descriptor(file_id, subset_id, rng.bytes(length))
    return Library(n=n, k=k, t=t, length=length, descriptors=descriptors, index=index)


def default_demands(k: int, n: int) -> dict[int, int]:
    """Distinct files while N >= K, otherwise files are reused cyclically."""
    if n < 1:
        raise InvalidParameterError(f"library needs at least one file, got N={n}")
    return {user: (user - 1) % n + 1 for user in range(1, k + 1)}
