"""
Base class for SAT solvers.

Every solver in the package (coprocessor-backed host, software reference,
brute force) implements this interface so the benchmark harness can run
and cross-check them uniformly.
"""
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Dict, Optional
import logging

from src.cnf.formula import Assignment, Formula, FormulaValue, evaluate

WALL_CLOCK_FIELDS = ('wall_time', 'coproc_wall_time')


class SolveStatus(Enum):
    SAT = 'SAT'
    UNSAT = 'UNSAT'


@dataclass
class SolveStats:
    """Counters of one solve; all monotonically non-decreasing while it runs.

    ``total_model_cycles`` and ``bcp_model_cycles`` count only modeled
    coprocessor cycles. ``wall_time`` covers the full host loop and
    ``coproc_wall_time`` the part of it spent inside the simulator.
    """

    decisions: int = 0
    implications: int = 0
    conflicts: int = 0
    backtracks: int = 0
    partition_swaps: int = 0
    bcp_calls: int = 0
    total_model_cycles: int = 0
    bcp_model_cycles: int = 0
    wall_time: float = 0.0
    coproc_wall_time: float = 0.0

    def to_dict(self, include_wall_clock: bool = True) -> Dict:
        data = asdict(self)
        if not include_wall_clock:
            for name in WALL_CLOCK_FIELDS:
                data.pop(name)
        return data


@dataclass
class Verdict:
    status: SolveStatus
    stats: SolveStats
    model: Optional[Assignment] = None

    @property
    def is_sat(self) -> bool:
        return self.status is SolveStatus.SAT


class VerdictMismatchError(RuntimeError):
    """Two solvers disagreed on the same formula."""


class SatSolver(ABC):
    """
    Abstract base class for solvers.

    Example:
        class MySolver(SatSolver):
            def solve(self, formula: Formula) -> Verdict:
                ...
                return self._sat(formula, model, stats)
    """

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    @abstractmethod
    def solve(self, formula: Formula) -> Verdict:
        """
        Decide satisfiability of a preprocessed formula.

        Args:
            formula: Formula produced by cnf parsing/preprocessing

        Returns:
            Verdict with a verified model when SAT
        """
        pass

    def _sat(self, formula: Formula, model: Assignment, stats: SolveStats) -> Verdict:
        """Build a SAT verdict after checking the model against the formula."""
        if evaluate(formula, model) is not FormulaValue.SATISFIED:
            raise RuntimeError(f"{self.__class__.__name__} produced a non-satisfying model")
        self._log_result(SolveStatus.SAT, stats)
        return Verdict(SolveStatus.SAT, stats, model)

    def _unsat(self, stats: SolveStats) -> Verdict:
        self._log_result(SolveStatus.UNSAT, stats)
        return Verdict(SolveStatus.UNSAT, stats)

    def _log_result(self, status: SolveStatus, stats: SolveStats):
        self.logger.info(
            f"{status.value}: {stats.decisions} decisions, {stats.implications} implications, "
            f"{stats.conflicts} conflicts, {stats.partition_swaps} swaps, "
            f"{stats.wall_time:.4f}s"
        )
