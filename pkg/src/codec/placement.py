# src/codec/placement.py

import math
from dataclasses import dataclass, field

from src.codec.library import Descriptor, Library, SubsetIndex
from src.errors import InvalidParameterError, MissingDescriptorError


@dataclass(frozen=True)
class CacheContents:
    user_id: int
    stored: dict[tuple[int, int], Descriptor]
    index: SubsetIndex = field(repr=False, compare=False)

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self.stored

    def __len__(self) -> int:
        return len(self.stored)


def place_caches(library: Library, k: int, t: int) -> list[CacheContents]:
    """User k stores W_T for every file W and every t-subset T containing k."""
    if (library.k, library.t) != (k, t):
        raise InvalidParameterError(
            f"library was built for K={library.k}, t={library.t}, not K={k}, t={t}"
        )
    expected = library.n * len(library.index)
    if len(library.descriptors) != expected:
        missing = [
            (f, s)
            for f in range(1, library.n + 1)
            for s in library.index.subsets
            if (f, library.index.id_of(s)) not in library.descriptors
        ]
        raise MissingDescriptorError(
            f"library holds {len(library.descriptors)} of {expected} descriptors; "
            f"first missing (file, subset): {missing[:1]}"
        )

    caches = []
    for user in range(1, k + 1):
        stored = {
            key: d
            for key, d in library.descriptors.items()
            if user in library.index.subset(d.subset_id)
        }
        caches.append(CacheContents(user_id=user, stored=stored, index=library.index))

    per_cache = library.n * math.comb(k - 1, t - 1)
    assert all(len(c) == per_cache for c in caches), "placement size mismatch"
    return caches
