"""Shared pytest fixtures and configuration."""

import pytest

from src.bench.generators import pigeonhole
from src.cnf.formula import Formula
from src.coprocessor.config import CoprocConfig
from src.coprocessor.control_unit import CoprocessorSimulator
from src.coprocessor.registers import RegisterFile
from src.partitioning.partition import PartitionConfig
from tests.fixtures.cnf_samples import WORKED_CLAUSES, WORKED_DIMACS


@pytest.fixture
def worked_formula():
    """The four-clause worked example over variables 1..6 (SAT)."""
    return Formula.from_clauses(WORKED_CLAUSES, num_vars=6)


@pytest.fixture
def hole3_formula():
    """Pigeonhole with 4 pigeons and 3 holes (UNSAT, 12 variables)."""
    return pigeonhole(3)


@pytest.fixture
def split_partition_config():
    """C=2, V=3: splits the worked example into two partitions."""
    return PartitionConfig(max_clauses=2, max_vars=3)


@pytest.fixture
def default_coproc_config():
    """224 CPs, 63 local variables, default cycle model."""
    return CoprocConfig()


@pytest.fixture
def small_coproc_config():
    """A small engine so that modest formulas need several partitions."""
    return CoprocConfig(num_cps=8, max_local_vars=8)


@pytest.fixture
def simulator(default_coproc_config):
    return CoprocessorSimulator(default_coproc_config)


@pytest.fixture
def register_file(simulator):
    return RegisterFile(simulator)


@pytest.fixture
def dimacs_file(tmp_path):
    """Factory writing DIMACS text to a temporary file and returning its path."""
    def _write(text: str = WORKED_DIMACS, name: str = 'instance.cnf') -> str:
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write
