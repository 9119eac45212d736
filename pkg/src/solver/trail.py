"""Assignment trail for chronological backtracking

The trail is the ordered log of assignments with their reason and decision
level. It owns the global Assignment so the two can never drift apart.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional

from src.cnf.formula import Assignment, Literal, var_of


class Reason(Enum):
    DECISION = 'decision'
    IMPLICATION = 'implication'


@dataclass(frozen=True)
class TrailEntry:
    literal: Literal
    reason: Reason
    level: int
    flipped: bool = False


class Trail:
    """Trail plus the assignment it induces."""

    def __init__(self, num_vars: int):
        self.entries: List[TrailEntry] = []
        self.assignment = Assignment(num_vars)
        self.level = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[TrailEntry]:
        return iter(self.entries)

    def literals(self) -> List[Literal]:
        return [entry.literal for entry in self.entries]

    def _push(self, entry: TrailEntry) -> None:
        if self.assignment.is_assigned(var_of(entry.literal)):
            raise ValueError(f"Variable {var_of(entry.literal)} is already on the trail")
        self.entries.append(entry)
        self.assignment.assign(entry.literal)

    def push_decision(self, literal: Literal, flipped: bool = False) -> int:
        """Open a new decision level; returns that level."""
        self.level += 1
        self._push(TrailEntry(literal, Reason.DECISION, self.level, flipped))
        return self.level

    def push_implication(self, literal: Literal) -> None:
        self._push(TrailEntry(literal, Reason.IMPLICATION, self.level))

    def backtrack(self) -> Optional[Literal]:
        """Pop to the most recent decision not yet tried both ways.

        The trail is truncated to just before that decision.

        Returns:
            The inverted decision literal to resume with, or None when every
            decision has been tried both ways (search space exhausted)
        """
        while self.entries:
            entry = self.entries.pop()
            self.assignment.unassign(var_of(entry.literal))
            if entry.reason is Reason.DECISION:
                self.level -= 1
                if not entry.flipped:
                    return -entry.literal
        return None
