"""Implication selector

Chooses a single implication when several CPs report unit clauses in the
same iteration. Priority is the lowest CP index. Opposing implications are
not compared here: the loser's clause is found falsified on the next
evaluation pass.
"""

from typing import Optional, Sequence

from src.cnf.formula import Literal
from src.coprocessor.clause_processor import CpResult, CpState


def select_implication(results: Sequence[CpResult]) -> Optional[Literal]:
    """Return the unit literal of the lowest-indexed unit CP, or None."""
    for result in results:
        if result.state is CpState.UNIT:
            return result.literal
    return None
