"""Clause processor model

A clause processor (CP) holds exactly one clause as an array of locally
encoded literals and keeps its own copy of each literal's variable value.
Broadcasts reach every CP; each CP compares the broadcast variable against
its own literals, so evaluation never looks clauses up by variable.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from src.cnf.formula import Literal, var_of


class CpState(Enum):
    SATISFIED = 'satisfied'
    FALSIFIED = 'falsified'
    UNIT = 'unit'
    UNRESOLVED = 'unresolved'
    EMPTY_SLOT = 'empty_slot'


@dataclass(frozen=True)
class CpResult:
    state: CpState
    literal: Optional[Literal] = None


CP_SATISFIED = CpResult(CpState.SATISFIED)
CP_FALSIFIED = CpResult(CpState.FALSIFIED)
CP_UNRESOLVED = CpResult(CpState.UNRESOLVED)
CP_EMPTY = CpResult(CpState.EMPTY_SLOT)


class ClauseProcessor:
    """One CP slot: literals plus the matching local variable values."""

    __slots__ = ('literals', 'values')

    def __init__(self):
        self.literals: List[Literal] = []
        self.values: List[Optional[bool]] = []

    @property
    def is_empty(self) -> bool:
        return not self.literals

    def load(self, literals: Sequence[Literal]) -> None:
        """Overwrite the slot with a new clause; local values start unassigned."""
        self.literals = list(literals)
        self.values = [None] * len(self.literals)

    def append(self, literal: Literal) -> None:
        if any(var_of(lit) == var_of(literal) for lit in self.literals):
            raise ValueError(f"Variable {var_of(literal)} already stored in this CP")
        self.literals.append(literal)
        self.values.append(None)

    def empty(self) -> None:
        self.literals = []
        self.values = []

    def broadcast(self, var: int, value: Optional[bool]) -> None:
        for i, lit in enumerate(self.literals):
            if var_of(lit) == var:
                self.values[i] = value

    def clear(self) -> None:
        self.values = [None] * len(self.literals)

    def evaluate(self) -> CpResult:
        """Apply the unit rule to the stored clause under the CP-local values."""
        if not self.literals:
            return CP_EMPTY
        free = None
        free_count = 0
        for lit, value in zip(self.literals, self.values):
            if value is None:
                free_count += 1
                free = lit
            elif value == (lit > 0):
                return CP_SATISFIED
        if free_count == 0:
            return CP_FALSIFIED
        if free_count == 1:
            return CpResult(CpState.UNIT, free)
        return CP_UNRESOLVED


def cp_evaluate(cp: ClauseProcessor) -> CpResult:
    return cp.evaluate()
