"""CNF data model for the BCP coprocessor simulator

Literals follow the DIMACS convention end-to-end: a non-zero signed integer,
positive for the variable asserted true and negative for its negation.
Variables are 1-based.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

Literal = int
Clause = Tuple[Literal, ...]

logger = logging.getLogger(__name__)


def var_of(literal: Literal) -> int:
    """Return the variable index of a literal."""
    return literal if literal > 0 else -literal


def preprocess_clause(literals: Iterable[Literal]) -> Optional[Clause]:
    """Remove duplicate literals and detect tautologies.

    Args:
        literals: Raw clause literals in input order

    Returns:
        The deduplicated clause (first occurrence order kept), or None if the
        clause contains both a literal and its negation.
    """
    seen = set()
    kept = []
    for lit in literals:
        if lit in seen:
            continue
        if -lit in seen:
            return None
        seen.add(lit)
        kept.append(lit)
    return tuple(kept)


@dataclass(frozen=True)
class Formula:
    """A preprocessed CNF instance.

    Clause order is exactly the input order; the partitioner depends on it.
    ``trivially_unsat`` is set when the input contained an empty clause, which
    is not stored among ``clauses``. ``notes`` records preprocessing actions and
    does not take part in equality.
    """

    num_vars: int
    clauses: Tuple[Clause, ...] = ()
    trivially_unsat: bool = False
    notes: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError(f"num_vars must be >= 0, got {self.num_vars}")
        for index, clause in enumerate(self.clauses):
            if not clause:
                raise ValueError(f"Clause {index} is empty; use trivially_unsat instead")
            for lit in clause:
                if lit == 0 or var_of(lit) > self.num_vars:
                    raise ValueError(
                        f"Clause {index} has literal {lit} outside [1, {self.num_vars}]"
                    )

    @classmethod
    def from_clauses(cls, clauses: Iterable[Sequence[Literal]],
                     num_vars: Optional[int] = None) -> 'Formula':
        """Build a formula applying parse-time preprocessing.

        Args:
            clauses: Raw clauses as literal sequences
            num_vars: Variable count; inferred from the largest index when None

        Returns:
            Formula with duplicates removed, tautologies dropped and empty
            clauses folded into ``trivially_unsat``
        """
        kept: List[Clause] = []
        notes: List[str] = []
        trivially_unsat = False
        max_var = 0
        for index, raw in enumerate(clauses):
            raw = list(raw)
            if not raw:
                trivially_unsat = True
                notes.append(f"clause {index} is empty: formula is trivially UNSAT")
                continue
            max_var = max(max_var, max(var_of(lit) for lit in raw))
            clause = preprocess_clause(raw)
            if clause is None:
                notes.append(f"clause {index} dropped: tautology")
                continue
            kept.append(clause)
        if num_vars is None:
            num_vars = max_var
        return cls(num_vars=num_vars, clauses=tuple(kept),
                   trivially_unsat=trivially_unsat, notes=tuple(notes))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def max_clause_length(self) -> int:
        return max((len(c) for c in self.clauses), default=0)


class Assignment:
    """Tri-state value per variable: True, False or None (unassigned).

    Index 0 is unused so variable ids index the value list directly.
    """

    __slots__ = ('_values',)

    def __init__(self, num_vars: int):
        self._values: List[Optional[bool]] = [None] * (num_vars + 1)

    @classmethod
    def from_literals(cls, num_vars: int, literals: Iterable[Literal]) -> 'Assignment':
        assignment = cls(num_vars)
        for lit in literals:
            assignment.assign(lit)
        return assignment

    @property
    def num_vars(self) -> int:
        return len(self._values) - 1

    def __len__(self) -> int:
        return self.num_vars

    def __eq__(self, other) -> bool:
        if not isinstance(other, Assignment):
            return NotImplemented
        return self._values == other._values

    def __repr__(self) -> str:
        return f"Assignment({self.to_literals()})"

    def value_of_var(self, var: int) -> Optional[bool]:
        return self._values[var]

    def value_of(self, literal: Literal) -> Optional[bool]:
        """Truth value of a literal, or None when its variable is free."""
        value = self._values[var_of(literal)]
        if value is None:
            return None
        return value if literal > 0 else not value

    def is_assigned(self, var: int) -> bool:
        return self._values[var] is not None

    def assign(self, literal: Literal) -> None:
        """Make ``literal`` true."""
        self._values[var_of(literal)] = literal > 0

    def unassign(self, var: int) -> None:
        self._values[var] = None

    def first_unassigned(self) -> Optional[int]:
        """Lowest-indexed free variable, or None if everything is assigned."""
        for var in range(1, len(self._values)):
            if self._values[var] is None:
                return var
        return None

    def to_literals(self) -> List[Literal]:
        """Assigned variables as literals, ascending by variable."""
        return [var if value else -var
                for var, value in enumerate(self._values)
                if var and value is not None]

    def copy(self) -> 'Assignment':
        clone = Assignment.__new__(Assignment)
        clone._values = list(self._values)
        return clone


class ClauseState(Enum):
    SATISFIED = 'satisfied'
    FALSIFIED = 'falsified'
    UNIT = 'unit'
    UNRESOLVED = 'unresolved'


@dataclass(frozen=True)
class ClauseStatus:
    """Status of one clause; ``literal`` is set only for UNIT."""

    state: ClauseState
    literal: Optional[Literal] = None
    free_count: int = 0

    @property
    def is_unit(self) -> bool:
        return self.state is ClauseState.UNIT


_SATISFIED = ClauseStatus(ClauseState.SATISFIED)
_FALSIFIED = ClauseStatus(ClauseState.FALSIFIED)


def clause_status(clause: Sequence[Literal], assignment: Assignment) -> ClauseStatus:
    """Classify a clause under an assignment (unit implication rule)."""
    free_count = 0
    free_literal = None
    for lit in clause:
        value = assignment.value_of(lit)
        if value is None:
            free_count += 1
            free_literal = lit
        elif value:
            return _SATISFIED
    if free_count == 0:
        return _FALSIFIED
    if free_count == 1:
        return ClauseStatus(ClauseState.UNIT, free_literal, 1)
    return ClauseStatus(ClauseState.UNRESOLVED, None, free_count)


class FormulaValue(Enum):
    SATISFIED = 'satisfied'
    FALSIFIED = 'falsified'
    UNDETERMINED = 'undetermined'


def evaluate(formula: Formula, assignment: Assignment) -> FormulaValue:
    """Evaluate a formula: falsified wins over undetermined."""
    if formula.trivially_unsat:
        return FormulaValue.FALSIFIED
    undetermined = False
    for clause in formula.clauses:
        state = clause_status(clause, assignment).state
        if state is ClauseState.FALSIFIED:
            return FormulaValue.FALSIFIED
        if state is not ClauseState.SATISFIED:
            undetermined = True
    return FormulaValue.UNDETERMINED if undetermined else FormulaValue.SATISFIED
