"""
Partitioning package for the BCP coprocessor simulator.

Greedy clause partitioning into coprocessor-sized groups plus the
global/local variable renaming the host needs to hot-swap them.
"""

from src.partitioning.partition import Partition, PartitionConfig, PartitionPlan, format_plan
from src.partitioning.partitioner import (
    PlanViolation,
    UnpartitionableClauseError,
    partition,
    validate_plan,
)

__all__ = [
    'Partition',
    'PartitionConfig',
    'PartitionPlan',
    'format_plan',
    'PlanViolation',
    'UnpartitionableClauseError',
    'partition',
    'validate_plan',
]
