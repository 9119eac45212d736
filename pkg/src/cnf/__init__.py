"""
CNF package for the BCP coprocessor simulator.

Data model, DIMACS I/O and clause/formula evaluation shared by every
other package.
"""

from src.cnf.formula import (
    Assignment,
    ClauseState,
    ClauseStatus,
    Formula,
    FormulaValue,
    clause_status,
    evaluate,
    var_of,
)
from src.cnf.dimacs import DimacsParseError, parse_dimacs, write_dimacs

__all__ = [
    'Assignment',
    'ClauseState',
    'ClauseStatus',
    'Formula',
    'FormulaValue',
    'clause_status',
    'evaluate',
    'var_of',
    'DimacsParseError',
    'parse_dimacs',
    'write_dimacs',
]
