"""
Exhaustive enumeration oracle.

Assignments are encoded as integers (bit ``i`` is the value of variable
``i + 1``) and every clause is evaluated over a block of assignments at once
with numpy bit masks.
"""

import time
from typing import Optional

import numpy as np

from src.cnf.formula import Assignment, Formula
from src.solver.solver_base import SatSolver, SolveStats, Verdict

MAX_BRUTE_FORCE_VARS = 24
BLOCK_BITS = 20


class FormulaTooLargeError(ValueError):
    """Too many variables to enumerate every assignment."""

    def __init__(self, num_vars: int, limit: int = MAX_BRUTE_FORCE_VARS):
        self.num_vars = num_vars
        self.limit = limit
        super().__init__(f"{num_vars} variables exceeds the brute-force limit of {limit}")


class BruteForceSolver(SatSolver):
    """Enumerates all 2^n assignments in ascending integer order."""

    def __init__(self, max_vars: int = MAX_BRUTE_FORCE_VARS):
        super().__init__()
        self.max_vars = max_vars

    def solve(self, formula: Formula) -> Verdict:
        """
        Find the first satisfying assignment, if any.

        Raises:
            FormulaTooLargeError: num_vars above the enumeration limit
        """
        if formula.num_vars > self.max_vars:
            raise FormulaTooLargeError(formula.num_vars, self.max_vars)
        started = time.perf_counter()
        stats = SolveStats()
        if formula.trivially_unsat:
            return self._unsat(self._finish(stats, started))

        masks = []
        for clause in formula.clauses:
            positive = sum(1 << (lit - 1) for lit in clause if lit > 0)
            negative = sum(1 << (-lit - 1) for lit in clause if lit < 0)
            masks.append((np.uint32(positive), np.uint32(negative)))

        index = self._first_satisfying(formula.num_vars, masks)
        stats = self._finish(stats, started)
        if index is None:
            return self._unsat(stats)
        model = Assignment.from_literals(
            formula.num_vars,
            (var if (index >> (var - 1)) & 1 else -var
             for var in range(1, formula.num_vars + 1)),
        )
        return self._sat(formula, model, stats)

    @staticmethod
    def _first_satisfying(num_vars: int, masks) -> Optional[int]:
        total = 1 << num_vars
        block = 1 << BLOCK_BITS
        for start in range(0, total, block):
            candidates = np.arange(start, min(start + block, total), dtype=np.uint32)
            satisfied = np.ones(candidates.shape, dtype=bool)
            for positive, negative in masks:
                satisfied &= ((candidates & positive) != 0) | ((~candidates & negative) != 0)
                if not satisfied.any():
                    break
            hits = np.flatnonzero(satisfied)
            if hits.size:
                return start + int(hits[0])
        return None

    @staticmethod
    def _finish(stats: SolveStats, started: float) -> SolveStats:
        stats.wall_time = time.perf_counter() - started
        return stats


def brute_force(formula: Formula) -> Verdict:
    """Decide a formula by enumeration (num_vars <= 24)."""
    return BruteForceSolver().solve(formula)
