"""Software unit propagation

Naive scan-all-clauses BCP: repeatedly walk the clause list applying the
unit rule until nothing changes or a clause is falsified. It is the oracle
every coprocessor-path result is checked against and the BCP engine of the
software baseline solver.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.cnf.formula import Assignment, ClauseState, Literal, clause_status


@dataclass(frozen=True)
class PropagationResult:
    implications: Tuple[Literal, ...]
    conflict: bool

    @property
    def implication_set(self) -> frozenset:
        return frozenset(self.implications)


def unit_propagate(clauses: Sequence[Sequence[Literal]], assignment: Assignment,
                   seed: Optional[Literal] = None) -> PropagationResult:
    """Apply the unit rule to fixpoint.

    The caller's assignment is left untouched; propagation runs on a copy.

    Args:
        clauses: Clauses to propagate over
        assignment: Current assignment
        seed: Literal to assign first; None runs a plain scan, which picks up
            unit clauses of the input (level-0 propagation)

    Returns:
        PropagationResult with implications in the order they were found
        (seed excluded); conflict is True iff some clause became falsified
    """
    working = assignment.copy()
    if seed is not None:
        if working.value_of(seed) is False:
            return PropagationResult((), True)
        working.assign(seed)

    implications: List[Literal] = []
    changed = True
    while changed:
        changed = False
        for clause in clauses:
            status = clause_status(clause, working)
            if status.state is ClauseState.FALSIFIED:
                return PropagationResult(tuple(implications), True)
            if status.state is ClauseState.UNIT:
                working.assign(status.literal)
                implications.append(status.literal)
                changed = True
    return PropagationResult(tuple(implications), False)
