# src/codec/codeword.py

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from src.codec.library import Descriptor, Library
from src.codec.placement import CacheContents
from src.errors import (
    InvalidParameterError,
    NotARecipientError,
    PlacementViolationError,
)
from src.model.groups import MulticastGroup


@dataclass(frozen=True)
class Codeword:
    """Y_j(S): XOR of the descriptors wanted by the ``j`` strongest members of the group."""

    group: MulticastGroup
    j: int
    payload: bytes
    rate: float

    @property
    def recipients(self) -> tuple[int, ...]:
        return self.group.served(self.j)


def xor_payloads(payloads: list[bytes]) -> bytes:
    if not payloads:
        raise InvalidParameterError("nothing to combine")
    arrays = np.stack([np.frombuffer(p, dtype=np.uint8) for p in payloads])
    return np.bitwise_xor.reduce(arrays, axis=0).tobytes()


def _term_subset(group: MulticastGroup, user: int) -> tuple[int, ...]:
    return tuple(u for u in group.members if u != user)


def build_codeword(
    group: MulticastGroup, j: int, demands: Mapping[int, int], library: Library
) -> Codeword:
    if not 1 <= j <= group.size:
        raise InvalidParameterError(f"j must lie in [1, {group.size}], got {j}")
    absent = [u for u in group.members if u not in demands]
    if absent:
        raise InvalidParameterError(f"no demand given for users {absent}")

    terms = [
        library.get(demands[user], _term_subset(group, user)).payload
        for user in group.served(j)
    ]
    return Codeword(group=group, j=j, payload=xor_payloads(terms), rate=group.rate(j))


def decode(
    user_id: int, codeword: Codeword, cache: CacheContents, demands: Mapping[int, int]
) -> Descriptor:
    """Cancel every other served user's term with cached data and return what ``user_id`` asked for."""
    if cache.user_id != user_id:
        raise InvalidParameterError(f"cache belongs to user {cache.user_id}, not {user_id}")
    recipients = codeword.recipients
    if user_id not in recipients:
        raise NotARecipientError(
            f"user {user_id} is not among the {codeword.j} served users {recipients}"
        )

    group = codeword.group
    index_of = cache.index.id_of
    parts = [codeword.payload]
    for other in recipients:
        if other == user_id:
            continue
        key = (demands[other], index_of(_term_subset(group, other)))
        if key not in cache:
            raise PlacementViolationError(
                f"user {user_id} cannot cancel W{key} sent for user {other}: not cached"
            )
        parts.append(cache.stored[key].payload)

    wanted = _term_subset(group, user_id)
    return Descriptor(
        file_id=demands[user_id],
        subset_id=index_of(wanted),
        payload=xor_payloads(parts),
    )

