"""
Solver package for the BCP coprocessor simulator.

DPLL host side: trail, register-level coprocessor driver, execution trace
and the host solver that hot-swaps partitions through the coprocessor.
"""

from src.solver.solver_base import (
    SatSolver,
    SolveStats,
    SolveStatus,
    Verdict,
    VerdictMismatchError,
)
from src.solver.trail import Reason, Trail, TrailEntry
from src.solver.trace import ExecutionTrace, PhaseTotals
from src.solver.driver import CoprocessorDriver, CoprocessorError, DecideResult
from src.solver.host_solver import HostSolver

__all__ = [
    'SatSolver',
    'SolveStats',
    'SolveStatus',
    'Verdict',
    'VerdictMismatchError',
    'Reason',
    'Trail',
    'TrailEntry',
    'ExecutionTrace',
    'PhaseTotals',
    'CoprocessorDriver',
    'CoprocessorError',
    'DecideResult',
    'HostSolver',
]
