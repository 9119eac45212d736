"""
Reference package for the BCP coprocessor simulator.

Software-only oracles: naive unit propagation, a vanilla DPLL baseline and
an exhaustive enumerator.
"""

from src.reference.propagator import PropagationResult, unit_propagate
from src.reference.reference_solver import ReferenceSolver, solve_reference
from src.reference.brute_force import BruteForceSolver, FormulaTooLargeError, brute_force

__all__ = [
    'PropagationResult',
    'unit_propagate',
    'ReferenceSolver',
    'solve_reference',
    'BruteForceSolver',
    'FormulaTooLargeError',
    'brute_force',
]
