from src.model.baselines import full_cc_time, uncoded_time
from src.model.groups import (
    MulticastGroup,
    build_group,
    enumerate_groups,
    group_count,
    selection_count,
)
from src.model.instance import (
    CapacityVector,
    ChannelSpec,
    DirectCapacities,
    Instance,
    capacities_from_channels,
    capacity,
    demo_instance,
)
from src.model.schedule import Schedule, demo_reference_assignment, evaluate_schedule

__all__ = [
    "CapacityVector",
    "ChannelSpec",
    "DirectCapacities",
    "Instance",
    "MulticastGroup",
    "Schedule",
    "build_group",
    "capacities_from_channels",
    "capacity",
    "demo_instance",
    "demo_reference_assignment",
    "enumerate_groups",
    "evaluate_schedule",
    "full_cc_time",
    "group_count",
    "selection_count",
    "uncoded_time",
]
