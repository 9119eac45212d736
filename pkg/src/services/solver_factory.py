"""
Solver Factory for the BCP coprocessor simulator.

This factory creates solver instances with proper dependency injection,
wiring coprocessor configuration, simulator, register file and driver
together from a Config.
"""

import logging
from typing import Optional

from src.coprocessor.config import CoprocConfig
from src.coprocessor.control_unit import CoprocessorSimulator
from src.coprocessor.registers import RegisterFile
from src.partitioning.partition import PartitionConfig
from src.reference.brute_force import BruteForceSolver
from src.reference.reference_solver import ReferenceSolver
from src.solver.driver import CoprocessorDriver
from src.solver.host_solver import HostSolver
from src.solver.solver_base import SatSolver
from src.solver.trace import ExecutionTrace
from src.utils.config import Config

SOLVER_MODES = ('coproc', 'reference', 'brute-force')


class SolverFactory:
    """
    Factory for creating solvers with their coprocessor stack.

    Every created solver owns its own simulator, so instances from one
    factory can run on different worker threads.

    Example:
        >>> factory = SolverFactory(Config('settings.json'))
        >>> host = factory.create_host_solver()
        >>> reference = factory.create_reference_solver()
    """

    def __init__(self, config: Optional[Config] = None):
        """
        Initialize SolverFactory from configuration.

        Args:
            config: Settings; defaults are used when omitted

        Raises:
            ValueError: Configured coprocessor or partition values are invalid
        """
        self.config = config or Config()
        self.coproc_config: CoprocConfig = self.config.coproc_config()
        self.partition_config: PartitionConfig = self.config.partition_config()
        self.logger = logging.getLogger(__name__)

        self.logger.info(
            f"SolverFactory initialized: {self.coproc_config.num_cps} CPs, "
            f"{self.coproc_config.max_local_vars} local vars, "
            f"C={self.partition_config.max_clauses}, V={self.partition_config.max_vars}"
        )

    def create_coprocessor(self) -> RegisterFile:
        """Fresh simulator behind its register interface."""
        return RegisterFile(CoprocessorSimulator(self.coproc_config))

    def create_driver(self, trace: Optional[ExecutionTrace] = None) -> CoprocessorDriver:
        return CoprocessorDriver(self.create_coprocessor(), trace)

    def create_host_solver(self) -> HostSolver:
        """
        Create a coprocessor-backed DPLL solver.

        Returns:
            HostSolver building a fresh coprocessor for every solve

        Raises:
            ValueError: Partition thresholds exceed the coprocessor capacity
        """
        self.logger.debug("Creating HostSolver")
        return HostSolver(
            self.coproc_config,
            self.partition_config,
            registers_factory=lambda _config: self.create_coprocessor(),
        )

    def create_reference_solver(self) -> ReferenceSolver:
        return ReferenceSolver()

    def create_brute_force_solver(self) -> BruteForceSolver:
        return BruteForceSolver()

    def create_solver(self, mode: str) -> SatSolver:
        """
        Create a solver by mode name.

        Args:
            mode: One of SOLVER_MODES

        Raises:
            ValueError: Unknown mode
        """
        if mode == 'coproc':
            return self.create_host_solver()
        if mode == 'reference':
            return self.create_reference_solver()
        if mode == 'brute-force':
            return self.create_brute_force_solver()
        raise ValueError(f"Unknown solver mode '{mode}', expected one of {SOLVER_MODES}")
