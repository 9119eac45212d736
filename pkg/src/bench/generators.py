"""
Benchmark instance generators.

Random uniform k-SAT (numpy RNG, reproducible from a seed) and the
pigeonhole family, used as desk-scale stand-ins for industrial benchmarks.
"""

import itertools
import logging
from typing import List

import numpy as np

from src.cnf.formula import Formula

logger = logging.getLogger(__name__)


def random_ksat(num_vars: int, num_clauses: int, k: int = 3, seed: int = 0) -> Formula:
    """
    Generate a uniform random k-SAT formula.

    Each clause draws k distinct variables and independent fair signs.

    Args:
        num_vars: Number of variables
        num_clauses: Number of clauses
        k: Literals per clause
        seed: RNG seed; the same seed always yields the same formula

    Returns:
        Formula over exactly ``num_vars`` variables

    Raises:
        ValueError: k is not in [1, num_vars] or num_clauses is negative
    """
    if not 1 <= k <= num_vars:
        raise ValueError(f"k must be in [1, {num_vars}], got {k}")
    if num_clauses < 0:
        raise ValueError(f"num_clauses must be >= 0, got {num_clauses}")

    rng = np.random.default_rng(seed)
    clauses: List[List[int]] = []
    for _ in range(num_clauses):
        variables = rng.choice(num_vars, size=k, replace=False) + 1
        signs = rng.choice([-1, 1], size=k)
        clauses.append([int(lit) for lit in variables * signs])
    logger.debug(f"Generated random {k}-SAT: {num_vars} vars, {num_clauses} clauses, seed {seed}")
    return Formula.from_clauses(clauses, num_vars=num_vars)


def pigeonhole(holes: int) -> Formula:
    """
    Pigeonhole formula with ``holes + 1`` pigeons (always UNSAT).

    Variable ``1 + pigeon * holes + hole`` means the pigeon sits in that hole.
    Every pigeon takes some hole; no hole takes two pigeons.

    Raises:
        ValueError: holes < 1
    """
    if holes < 1:
        raise ValueError(f"holes must be >= 1, got {holes}")
    pigeons = holes + 1

    def var(pigeon: int, hole: int) -> int:
        return 1 + pigeon * holes + hole

    clauses = [[var(p, h) for h in range(holes)] for p in range(pigeons)]
    for h in range(holes):
        for p1, p2 in itertools.combinations(range(pigeons), 2):
            clauses.append([-var(p1, h), -var(p2, h)])
    return Formula.from_clauses(clauses, num_vars=pigeons * holes)
