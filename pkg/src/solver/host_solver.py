"""
DPLL host solver driving BCP through the coprocessor model.

The host side of the system: decisions, chronological backtracking,
partition hot-swapping and cross-partition propagation. BCP itself runs
only on the (simulated) coprocessor, reached through the register driver.
"""

import time
from collections import deque
from typing import Callable, Deque, Dict, List, Optional

from src.cnf.formula import Clause, Formula, Literal, var_of
from src.coprocessor.config import CoprocConfig
from src.coprocessor.control_unit import CoprocessorSimulator
from src.coprocessor.registers import RegisterFile
from src.partitioning.partition import PartitionConfig, PartitionPlan
from src.partitioning.partitioner import partition
from src.solver.driver import CoprocessorDriver
from src.solver.solver_base import SatSolver, SolveStats, Verdict
from src.solver.trace import ExecutionTrace
from src.solver.trail import Trail


class _PropagationConflict(Exception):
    """Unwinds cross-partition propagation when any partition conflicts."""


class HostSolver(SatSolver):
    """
    Vanilla DPLL whose BCP executes on the coprocessor model.

    Decision heuristic: lowest-indexed free variable, positive polarity.
    Only one partition is resident at a time; propagation visits partitions
    FIFO over pending literals and in ascending partition id.

    Example:
        >>> solver = HostSolver(CoprocConfig(), PartitionConfig(2, 3))
        >>> verdict = solver.solve(formula)
        >>> verdict.stats.partition_swaps
    """

    def __init__(self, coproc_config: CoprocConfig,
                 partition_config: Optional[PartitionConfig] = None,
                 registers_factory: Optional[Callable[[CoprocConfig], RegisterFile]] = None):
        """
        Initialize the host solver.

        Args:
            coproc_config: Modeled coprocessor capacity and cycle costs
            partition_config: Partition thresholds; defaults to the coprocessor
                capacity (C = num_cps, V = max_local_vars)
            registers_factory: Builds the register interface for each solve;
                defaults to a fresh simulator per solve

        Raises:
            ValueError: Partition thresholds exceed the coprocessor capacity
        """
        super().__init__()
        self.coproc_config = coproc_config
        self.partition_config = partition_config or PartitionConfig(
            coproc_config.num_cps, coproc_config.max_local_vars
        )
        if self.partition_config.max_clauses > coproc_config.num_cps:
            raise ValueError(
                f"C={self.partition_config.max_clauses} exceeds {coproc_config.num_cps} CPs"
            )
        if self.partition_config.max_vars > coproc_config.max_local_vars:
            raise ValueError(
                f"V={self.partition_config.max_vars} exceeds "
                f"{coproc_config.max_local_vars} local variables"
            )
        self._registers_factory = registers_factory or (
            lambda config: RegisterFile(CoprocessorSimulator(config))
        )

        self.formula: Optional[Formula] = None
        self.plan: Optional[PartitionPlan] = None
        self.trail: Optional[Trail] = None
        self.driver: Optional[CoprocessorDriver] = None
        self.trace = ExecutionTrace()
        self.stats = SolveStats()
        self.pending: Deque[Literal] = deque()
        self.resident: Optional[int] = None
        self.needs_replay = False
        self.swap_counts: Dict[int, int] = {}
        self._resident_values: Dict[int, bool] = {}
        self._localized: List[List[Clause]] = []

    @property
    def simulator(self) -> CoprocessorSimulator:
        return self.driver.registers.simulator

    def prepare(self, formula: Formula) -> None:
        """Partition the formula and reset all per-solve state.

        Raises:
            UnpartitionableClauseError: A clause exceeds the variable threshold
        """
        self.formula = formula
        self.plan = partition(formula, self.partition_config)
        self._localized = [
            [p.localize_clause(formula.clauses[i]) for i in p.clause_refs]
            for p in self.plan.partitions
        ]
        self.trail = Trail(formula.num_vars)
        self.trace = ExecutionTrace()
        self.driver = CoprocessorDriver(self._registers_factory(self.coproc_config), self.trace)
        self.stats = SolveStats()
        self.pending = deque()
        self.resident = None
        self.needs_replay = False
        self.swap_counts = {}
        self._resident_values = {}

    def solve(self, formula: Formula) -> Verdict:
        """Run a complete DPLL search.

        Returns:
            SAT verdict with a verified model, or UNSAT after exhausting the space

        Raises:
            UnpartitionableClauseError: Propagated from the partitioner
        """
        started = time.perf_counter()
        self.prepare(formula)
        self.logger.info(
            f"Solving {formula.num_vars} vars / {formula.num_clauses} clauses "
            f"on {len(self.plan)} partitions"
        )
        if len(self.plan) == 1 and (formula.trivially_unsat or not formula.clauses):
            # no decision would ever load it
            self.swap_in(0)
        if formula.trivially_unsat:
            return self._unsat(self._finish(started))

        if not self._propagate_initial_units():
            self.stats.conflicts += 1
            self.backtrack()
            return self._unsat(self._finish(started))

        while True:
            literal = self.pick_decision()
            if literal is None:
                model = self.trail.assignment.copy()
                return self._sat(formula, model, self._finish(started))

            self.trail.push_decision(literal)
            self.stats.decisions += 1
            self.logger.debug(f"Decision {literal} at level {self.trail.level}")
            ok = self.propagate_global(literal)
            while not ok:
                self.stats.conflicts += 1
                resume = self.backtrack()
                if resume is None:
                    return self._unsat(self._finish(started))
                self.trail.push_decision(resume, flipped=True)
                ok = self.propagate_global(resume)

    def _propagate_initial_units(self) -> bool:
        """Assign and propagate input unit clauses before the first decision."""
        for clause in self.formula.clauses:
            if len(clause) != 1:
                continue
            literal = clause[0]
            value = self.trail.assignment.value_of(literal)
            if value is True:
                continue
            if value is False:
                return False
            self.trail.push_implication(literal)
            self.stats.implications += 1
            if not self.propagate_global(literal):
                return False
        return True

    def _finish(self, started: float) -> SolveStats:
        simulator = self.simulator
        self.stats.wall_time = time.perf_counter() - started
        self.stats.total_model_cycles = simulator.cycles
        self.stats.bcp_model_cycles = simulator.counter.by_kind.get('bcp', 0)
        self.stats.coproc_wall_time = self.trace.simulator_wall_seconds
        return self.stats

    def pick_decision(self) -> Optional[Literal]:
        """Lowest-indexed unassigned variable, positive polarity; None if all assigned."""
        return self.trail.assignment.first_unassigned()

    def propagate_global(self, literal: Literal) -> bool:
        """Propagate an assigned literal through every partition that holds it.

        Implications relayed from a partition are appended to the trail at the
        current level and queued for the remaining partitions.

        Returns:
            True at the fixpoint, False on a conflict in any partition
        """
        self.pending.append(literal)
        try:
            while self.pending:
                current = self.pending.popleft()
                var = var_of(current)
                for partition_id in self.plan.partitions_for(var):
                    self.swap_in(partition_id)
                    if var in self._resident_values:
                        continue
                    self._broadcast(partition_id, current, 'bcp')
        except _PropagationConflict:
            self.pending.clear()
            return False
        return True

    def _broadcast(self, partition_id: int, literal: Literal, phase: str) -> None:
        partition_ = self.plan.partitions[partition_id]
        result = self.driver.decide(partition_.localize_literal(literal), phase)
        self.stats.bcp_calls += 1
        self._resident_values[var_of(literal)] = literal > 0

        assignment = self.trail.assignment
        for local in result.implications:
            implied = partition_.globalize_literal(local)
            self._resident_values[var_of(implied)] = implied > 0
            value = assignment.value_of(implied)
            if value is None:
                self.trail.push_implication(implied)
                self.stats.implications += 1
                self.pending.append(implied)
            elif value is False:
                self.logger.debug(f"Partition {partition_id} implied {implied} against the trail")
                raise _PropagationConflict()
        if result.conflict:
            self.logger.debug(f"Conflict in partition {partition_id} on {literal}")
            raise _PropagationConflict()

    def swap_in(self, partition_id: int) -> int:
        """Make a partition resident and bring its CPs up to the global state.

        Loads the partition's localized clauses unless it is already resident,
        then replays every trail assignment whose variable occurs in it.
        Implications produced by the replay are relayed like any other.

        Returns:
            Modeled cycles consumed (0 when already resident and current)
        """
        if partition_id == self.resident and not self.needs_replay:
            return 0
        before = self.simulator.cycles
        reloaded = partition_id != self.resident
        if reloaded:
            self.driver.load(self._localized[partition_id])
            self.resident = partition_id
            self.stats.partition_swaps += 1
            self.swap_counts[partition_id] = self.swap_counts.get(partition_id, 0) + 1
            self.logger.debug(f"Swapped in partition {partition_id}")
        self.needs_replay = False
        self._resident_values = {}

        partition_ = self.plan.partitions[partition_id]
        phase = 'swap' if reloaded else 'bcp'
        for entry in list(self.trail.entries):
            var = var_of(entry.literal)
            if partition_.contains_var(var) and var not in self._resident_values:
                self._broadcast(partition_id, entry.literal, phase)
        return self.simulator.cycles - before

    def backtrack(self) -> Optional[Literal]:
        """Chronological backtrack after a conflict.

        Returns:
            The inverted decision to resume with, or None when the search space
            is exhausted (UNSAT)
        """
        self.stats.backtracks += 1
        resume = self.trail.backtrack()
        self.pending.clear()
        if self.resident is not None:
            self.driver.clear()
            self.needs_replay = True
            self._resident_values = {}
        self.logger.debug(f"Backtracked to level {self.trail.level}, resume with {resume}")
        return resume
