"""Greedy formula partitioner

Splits a formula into coprocessor-sized partitions: start with one empty
partition and walk the clauses in formula order; whenever adding a clause to
the last partition would exceed the clause threshold C or the
distinct-variable threshold V, open a new last partition first. The result
depends on clause order and is deterministic for a given order.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from src.cnf.formula import Formula, var_of
from src.partitioning.partition import Partition, PartitionConfig, PartitionPlan

logger = logging.getLogger(__name__)


class UnpartitionableClauseError(ValueError):
    """A clause has more distinct variables than a partition can hold."""

    def __init__(self, clause_index: int, num_vars: int, limit: int):
        self.clause_index = clause_index
        self.num_vars = num_vars
        self.limit = limit
        super().__init__(
            f"Clause {clause_index} has {num_vars} distinct variables, "
            f"more than the partition limit V={limit}"
        )


class _OpenPartition:
    """Mutable accumulator for the partition currently being filled."""

    def __init__(self):
        self.clause_refs: List[int] = []
        self.variables: List[int] = []
        self.var_set = set()

    def would_exceed(self, clause_vars, config: PartitionConfig) -> bool:
        if len(self.clause_refs) + 1 > config.max_clauses:
            return True
        new_vars = sum(1 for v in clause_vars if v not in self.var_set)
        return len(self.variables) + new_vars > config.max_vars

    def add(self, index: int, clause_vars) -> None:
        self.clause_refs.append(index)
        for var in clause_vars:
            if var not in self.var_set:
                self.var_set.add(var)
                self.variables.append(var)

    def freeze(self, partition_id: int) -> Partition:
        return Partition(partition_id, tuple(self.clause_refs), tuple(self.variables))


def partition(formula: Formula, config: PartitionConfig) -> PartitionPlan:
    """Partition a formula greedily.

    Args:
        formula: Preprocessed formula
        config: Clause and variable thresholds

    Returns:
        PartitionPlan whose partitions cover every clause exactly once in order

    Raises:
        UnpartitionableClauseError: A clause has more than V distinct variables
    """
    open_partitions = [_OpenPartition()]
    for index, clause in enumerate(formula.clauses):
        clause_vars = [var_of(lit) for lit in clause]
        if len(set(clause_vars)) > config.max_vars:
            raise UnpartitionableClauseError(index, len(set(clause_vars)), config.max_vars)
        if open_partitions[-1].would_exceed(clause_vars, config):
            open_partitions.append(_OpenPartition())
        open_partitions[-1].add(index, clause_vars)

    partitions = tuple(p.freeze(i) for i, p in enumerate(open_partitions))
    plan = PartitionPlan(partitions, PartitionPlan.build_var_index(partitions))
    logger.info(
        f"Partitioned {formula.num_clauses} clauses into {len(plan)} partitions "
        f"(C={config.max_clauses}, V={config.max_vars}, "
        f"{len(plan.shared_variables())} shared variables)"
    )
    return plan


@dataclass(frozen=True)
class PlanViolation:
    """One broken plan invariant; ``partition_id`` is None for plan-wide issues."""

    partition_id: Optional[int]
    kind: str
    reason: str


def validate_plan(plan: PartitionPlan, formula: Formula,
                  config: PartitionConfig) -> List[PlanViolation]:
    """Check every PartitionPlan invariant.

    Returns:
        List of violations; empty when the plan is valid
    """
    violations: List[PlanViolation] = []
    num_clauses = formula.num_clauses
    covered: List[int] = []

    for p in plan.partitions:
        if len(p.clause_refs) > config.max_clauses:
            violations.append(PlanViolation(
                p.id, 'clause_threshold',
                f"{len(p.clause_refs)} clauses exceeds C={config.max_clauses}"))
        if len(p.variables) > config.max_vars:
            violations.append(PlanViolation(
                p.id, 'variable_threshold',
                f"{len(p.variables)} variables exceeds V={config.max_vars}"))

        first_occurrence: List[int] = []
        seen = set()
        for ref in p.clause_refs:
            if not 0 <= ref < num_clauses:
                violations.append(PlanViolation(
                    p.id, 'cover', f"clause index {ref} is out of range"))
                continue
            covered.append(ref)
            for lit in formula.clauses[ref]:
                var = var_of(lit)
                if var not in seen:
                    seen.add(var)
                    first_occurrence.append(var)
        if list(p.variables) != first_occurrence:
            if set(p.variables) != seen:
                reason = "var_map does not cover exactly the partition's variables"
            else:
                reason = "local ids are not dense in first-occurrence order"
            violations.append(PlanViolation(p.id, 'var_map', reason))

    if sorted(covered) != list(range(num_clauses)):
        missing = sorted(set(range(num_clauses)) - set(covered))
        duplicated = sorted({r for r in covered if covered.count(r) > 1})
        violations.append(PlanViolation(
            None, 'cover', f"missing clauses {missing}, duplicated clauses {duplicated}"))
    elif covered != sorted(covered):
        violations.append(PlanViolation(
            None, 'order', "clause order across partitions differs from formula order"))

    expected_index: Dict[int, tuple] = PartitionPlan.build_var_index(plan.partitions)
    if {v: tuple(sorted(ids)) for v, ids in plan.var_index.items()} != expected_index:
        violations.append(PlanViolation(
            None, 'var_index', "var_index is inconsistent with partition var_maps"))

    for v in violations:
        logger.debug(f"Plan violation [{v.kind}] partition={v.partition_id}: {v.reason}")
    return violations
