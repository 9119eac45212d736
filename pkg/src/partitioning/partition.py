"""Partition data types

A Partition is an ordered group of clause indices into the source formula
together with its global-to-local variable renaming. Local ids are dense and
assigned by first occurrence inside the partition, so the renaming is stored
as the ordered tuple of global variables: local id ``i`` maps to
``variables[i - 1]``.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from src.cnf.formula import Clause, Literal, var_of


@dataclass(frozen=True)
class PartitionConfig:
    """Coprocessor capacity used for partitioning.

    Attributes:
        max_clauses: C, clauses per partition
        max_vars: V, distinct variables per partition
    """

    max_clauses: int
    max_vars: int

    def __post_init__(self):
        if self.max_clauses < 1:
            raise ValueError(f"max_clauses must be >= 1, got {self.max_clauses}")
        if self.max_vars < 1:
            raise ValueError(f"max_vars must be >= 1, got {self.max_vars}")


@dataclass(frozen=True)
class Partition:
    id: int
    clause_refs: Tuple[int, ...]
    variables: Tuple[int, ...]
    _local_ids: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, '_local_ids', {var: i + 1 for i, var in enumerate(self.variables)}
        )

    @property
    def var_map(self) -> Dict[int, int]:
        """Global variable id -> local variable id."""
        return dict(self._local_ids)

    def contains_var(self, var: int) -> bool:
        return var in self._local_ids

    def local_id(self, var: int) -> int:
        try:
            return self._local_ids[var]
        except KeyError:
            raise ValueError(f"Variable {var} is not in partition {self.id}") from None

    def localize_literal(self, literal: Literal) -> Literal:
        local = self.local_id(var_of(literal))
        return local if literal > 0 else -local

    def globalize_literal(self, literal: Literal) -> Literal:
        local = var_of(literal)
        if not 1 <= local <= len(self.variables):
            raise ValueError(f"Local variable {local} is not in partition {self.id}")
        var = self.variables[local - 1]
        return var if literal > 0 else -var

    def localize_clause(self, clause: Sequence[Literal]) -> Clause:
        return tuple(self.localize_literal(lit) for lit in clause)

    def globalize_clause(self, clause: Sequence[Literal]) -> Clause:
        return tuple(self.globalize_literal(lit) for lit in clause)


@dataclass(frozen=True)
class PartitionPlan:
    """Ordered partitions plus the variable -> partition ids index.

    ``var_index`` lists partition ids in ascending order, which is the order
    the host visits them during cross-partition propagation.
    """

    partitions: Tuple[Partition, ...]
    var_index: Dict[int, Tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.partitions)

    def partitions_for(self, var: int) -> Tuple[int, ...]:
        return self.var_index.get(var, ())

    def shared_variables(self) -> List[int]:
        """Variables occurring in more than one partition."""
        return sorted(var for var, ids in self.var_index.items() if len(ids) > 1)

    def max_vars_per_partition(self) -> int:
        return max((len(p.variables) for p in self.partitions), default=0)

    @staticmethod
    def build_var_index(partitions: Sequence[Partition]) -> Dict[int, Tuple[int, ...]]:
        index: Dict[int, List[int]] = {}
        for partition in partitions:
            for var in partition.variables:
                index.setdefault(var, []).append(partition.id)
        return {var: tuple(sorted(ids)) for var, ids in index.items()}


def format_plan(plan: PartitionPlan) -> str:
    """One line per partition: ``partition <id>: clauses=<idx list> vars=<global ids>``."""
    lines = []
    for partition in plan.partitions:
        clauses = ','.join(str(i) for i in partition.clause_refs)
        variables = ','.join(str(v) for v in partition.variables)
        lines.append(f"partition {partition.id}: clauses={clauses} vars={variables}")
    return '\n'.join(lines)
