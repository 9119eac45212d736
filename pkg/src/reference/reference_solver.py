"""
Software-only DPLL baseline.

Same decision heuristic and chronological backtracking as the host solver,
with BCP done in software over the whole formula (no partitions). Serves as
the baseline for speedup ratios and as a verdict oracle.
"""

import time

from src.cnf.formula import Formula
from src.reference.propagator import PropagationResult, unit_propagate
from src.solver.solver_base import SatSolver, SolveStats, Verdict
from src.solver.trail import Trail


class ReferenceSolver(SatSolver):
    """
    Vanilla DPLL with naive software unit propagation.

    Example:
        >>> verdict = ReferenceSolver().solve(formula)
        >>> verdict.is_sat
    """

    def solve(self, formula: Formula) -> Verdict:
        started = time.perf_counter()
        stats = SolveStats()
        self.logger.info(
            f"Solving {formula.num_vars} vars / {formula.num_clauses} clauses in software"
        )
        if formula.trivially_unsat:
            return self._unsat(self._finish(stats, started))

        trail = Trail(formula.num_vars)

        def apply(result: PropagationResult) -> bool:
            stats.bcp_calls += 1
            for literal in result.implications:
                trail.push_implication(literal)
                stats.implications += 1
            return not result.conflict

        if not apply(unit_propagate(formula.clauses, trail.assignment)):
            stats.conflicts += 1
            return self._unsat(self._finish(stats, started))

        while True:
            literal = trail.assignment.first_unassigned()
            if literal is None:
                model = trail.assignment.copy()
                return self._sat(formula, model, self._finish(stats, started))

            trail.push_decision(literal)
            stats.decisions += 1
            ok = apply(unit_propagate(formula.clauses, trail.assignment, literal))
            while not ok:
                stats.conflicts += 1
                stats.backtracks += 1
                resume = trail.backtrack()
                if resume is None:
                    return self._unsat(self._finish(stats, started))
                trail.push_decision(resume, flipped=True)
                ok = apply(unit_propagate(formula.clauses, trail.assignment, resume))

    @staticmethod
    def _finish(stats: SolveStats, started: float) -> SolveStats:
        stats.wall_time = time.perf_counter() - started
        return stats


def solve_reference(formula: Formula) -> Verdict:
    """Solve with the software baseline."""
    return ReferenceSolver().solve(formula)
