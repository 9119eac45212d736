"""
Services package for the BCP coprocessor simulator.

Wires configuration, coprocessor model and solvers together so the CLI and
the bench runner never construct the stack by hand.
"""

from src.services.solver_factory import SOLVER_MODES, SolverFactory

__all__ = [
    'SOLVER_MODES',
    'SolverFactory',
]
