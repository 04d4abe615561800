# src/codec/delivery.py

import logging
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from src.codec.codeword import Codeword, build_codeword, decode
from src.codec.library import Descriptor, Library
from src.codec.placement import CacheContents
from src.model.groups import MulticastGroup
from src.model.schedule import Schedule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeliveryOutcome:
    codewords: tuple[Codeword, ...]
    received: dict[int, tuple[Descriptor, ...]]
    mismatches: tuple[tuple[int, tuple[int, ...]], ...] = field(default=())

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(self.received[u]) for u in sorted(self.received))

    @property
    def intact(self) -> bool:
        return not self.mismatches


def simulate_delivery(
    schedule: Schedule,
    groups: Sequence[MulticastGroup],
    demands: Mapping[int, int],
    library: Library,
    caches: Sequence[CacheContents],
) -> DeliveryOutcome:
    """
    Transmit every scheduled codeword, decode it at each served user and
    compare the result with the library original.
    """
    by_user = {c.user_id: c for c in caches}
    received: dict[int, list[Descriptor]] = {u: [] for u in by_user}
    codewords = []
    mismatches = []

    for group in groups:
        j = schedule.decisions[group.members]
        if j == 0:
            continue
        codeword = build_codeword(group, j, demands, library)
        codewords.append(codeword)
        for user in codeword.recipients:
            got = decode(user, codeword, by_user[user], demands)
            wanted = library.descriptors[got.key]
            if got.payload != wanted.payload:
                mismatches.append((user, group.members))
            received[user].append(got)

    if mismatches:
        logger.error(f"{len(mismatches)} decoded descriptors differ from the library")
    return DeliveryOutcome(
        codewords=tuple(codewords),
        received={u: tuple(d) for u, d in received.items()},
        mismatches=tuple(mismatches),
    )
