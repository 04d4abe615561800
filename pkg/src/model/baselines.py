# src/model/baselines.py

import math

from src.model.instance import Instance


def full_cc_time(instance: Instance) -> float:
    """Delivery time of the plain coded-caching scheme: every group at j = t+1."""
    top = instance.t + 1
    return math.fsum(group.time_ladder[top] for group in instance.groups)


def uncoded_time(instance: Instance) -> float:
    """Unicast baseline: each user pulls its C(K-1, t) missing descriptors at its own rate."""
    missing = math.comb(instance.k - 1, instance.t)
    descriptor_size = 1.0 / instance.subpacketization
    rates = instance.capacities.c
    if any(c == 0 for c in rates):
        return math.inf
    return math.fsum(missing * descriptor_size / float(c) for c in rates)
