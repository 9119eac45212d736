"""Coprocessor control unit and clause-processor array

Deterministic, cycle-accounted model of the BCP engine. The control unit
waits in IDLE; LOAD commands overwrite CP slots, a decision starts the BCP
loop (broadcast, evaluate every CP in one parallel step, select one
implication, repeat) which ends in DONE or CONFLICT, and CLEAR wipes the
local assignments for backtracking while keeping clauses loaded.

Cycle model: one loop pass costs ``cycles_per_bcp_iteration`` regardless of
how many CPs are occupied; each loaded literal word or terminator costs
``cycles_per_load_word``; CLEAR costs one cycle. Register transaction
overhead is charged by the register interface. The counter is free-running
and survives RESET.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from src.cnf.formula import Literal, var_of
from src.coprocessor.clause_processor import ClauseProcessor, CpResult, CpState
from src.coprocessor.config import CoprocConfig
from src.coprocessor.implication_selector import select_implication

CLEAR_CYCLES = 1


class ControlState(Enum):
    IDLE = 'idle'
    LOADING = 'loading'
    BCP_RUNNING = 'bcp_running'
    DONE = 'done'
    CONFLICT = 'conflict'


class CoprocessorStateError(RuntimeError):
    """A command arrived in a state that cannot accept it."""


class CoprocessorCapacityError(ValueError):
    """A partition does not fit the CP array or the local variable range."""


@dataclass(frozen=True)
class BcpOutcome:
    """Result of one decision: implications in propagation order (local literals)."""

    implications: Tuple[Literal, ...]
    conflict: bool
    iterations: int
    cycles: int
    conflict_cp: Optional[int] = None


@dataclass
class CoprocCounters:
    """Instrumentation counters (not part of the modeled hardware)."""

    cp_evaluations: int = 0
    iterations: int = 0
    selector_invocations: int = 0
    evaluation_conflicts: int = 0
    decisions: int = 0
    load_words: int = 0
    clears: int = 0


@dataclass
class CycleCounter:
    total: int = 0
    by_kind: Dict[str, int] = field(default_factory=lambda: {
        'bcp': 0, 'load': 0, 'clear': 0, 'transaction': 0,
    })

    def charge(self, kind: str, cycles: int) -> None:
        self.total += cycles
        self.by_kind[kind] = self.by_kind.get(kind, 0) + cycles

    def snapshot(self) -> Dict[str, int]:
        return dict(self.by_kind)


class CoprocessorSimulator:
    """Control unit + CP array + implication selector.

    Example:
        >>> sim = CoprocessorSimulator(CoprocConfig())
        >>> sim.load_partition([(-1, 2, -3), (1, -2, -3)])
        8
        >>> sim.decide(1).implications
        ()
    """

    def __init__(self, config: CoprocConfig):
        self.config = config
        self.cps: List[ClauseProcessor] = [ClauseProcessor() for _ in range(config.num_cps)]
        self.local_assignment: List[Optional[bool]] = [None] * (config.max_local_vars + 1)
        self.state = ControlState.IDLE
        self.counter = CycleCounter()
        self.counters = CoprocCounters()
        self.last_outcome: Optional[BcpOutcome] = None
        self._loading_cp: Optional[int] = None
        self.logger = logging.getLogger(__name__)

    @property
    def cycles(self) -> int:
        return self.counter.total

    @property
    def loaded_clauses(self) -> int:
        return sum(1 for cp in self.cps if not cp.is_empty)

    def reset(self) -> None:
        """Empty every CP slot, clear assignments and return to IDLE."""
        for cp in self.cps:
            cp.empty()
        self.local_assignment = [None] * (self.config.max_local_vars + 1)
        self.state = ControlState.IDLE
        self.last_outcome = None
        self._loading_cp = None

    def _check_local_var(self, var: int) -> None:
        if not 1 <= var <= self.config.max_local_vars:
            raise CoprocessorCapacityError(
                f"Local variable {var} outside [1, {self.config.max_local_vars}]"
            )

    def begin_clause(self, cp_index: int) -> None:
        """Start overwriting CP ``cp_index`` with a new clause."""
        if self.state not in (ControlState.IDLE, ControlState.DONE, ControlState.LOADING):
            raise CoprocessorStateError(f"Cannot load while {self.state.value}")
        if not 0 <= cp_index < self.config.num_cps:
            raise CoprocessorCapacityError(
                f"CP index {cp_index} outside [0, {self.config.num_cps - 1}]"
            )
        self.cps[cp_index].empty()
        self._loading_cp = cp_index
        self.state = ControlState.LOADING

    def load_word(self, literal: Literal) -> None:
        """Append a literal to the CP being loaded; 0 terminates the clause."""
        if self.state is not ControlState.LOADING:
            raise CoprocessorStateError("LOAD_WORD without LOAD_BEGIN")
        self.counter.charge('load', self.config.cycles_per_load_word)
        self.counters.load_words += 1
        if literal == 0:
            self._loading_cp = None
            self.state = ControlState.IDLE
            return
        self._check_local_var(var_of(literal))
        self.cps[self._loading_cp].append(literal)

    def load_partition(self, clauses: Sequence[Sequence[Literal]]) -> int:
        """Hot-swap a partition into the CP array.

        CP ``i`` receives clause ``i``; remaining CPs are emptied and all local
        assignments are cleared.

        Args:
            clauses: Locally encoded clauses

        Returns:
            Cycles consumed: (literal words + one terminator per clause) x
            cycles_per_load_word

        Raises:
            CoprocessorCapacityError: Too many clauses or a local id out of range
        """
        if len(clauses) > self.config.num_cps:
            raise CoprocessorCapacityError(
                f"{len(clauses)} clauses do not fit {self.config.num_cps} clause processors"
            )
        for clause in clauses:
            for lit in clause:
                self._check_local_var(var_of(lit))

        before = self.cycles
        self.reset()
        for index, clause in enumerate(clauses):
            self.begin_clause(index)
            for lit in clause:
                self.load_word(lit)
            self.load_word(0)
        consumed = self.cycles - before
        self.logger.debug(f"Loaded {len(clauses)} clauses in {consumed} cycles")
        return consumed

    def _broadcast(self, literal: Literal) -> None:
        var, value = var_of(literal), literal > 0
        self.local_assignment[var] = value
        for cp in self.cps:
            cp.broadcast(var, value)

    def evaluate_all(self) -> List[CpResult]:
        """One parallel evaluation step across every CP slot."""
        self.counters.cp_evaluations += len(self.cps)
        return [cp.evaluate() for cp in self.cps]

    def decide(self, literal: Literal) -> BcpOutcome:
        """Broadcast a decision and run the BCP loop to a fixpoint or conflict.

        Args:
            literal: Local literal; its sign is the value assigned

        Returns:
            BcpOutcome with implications in propagation order

        Raises:
            CoprocessorStateError: Engine is loading, running, or holds a conflict
            CoprocessorCapacityError: Decision variable outside the local range
        """
        if self.state not in (ControlState.IDLE, ControlState.DONE):
            raise CoprocessorStateError(f"Cannot decide while {self.state.value}")
        self._check_local_var(var_of(literal))

        self.state = ControlState.BCP_RUNNING
        self.counters.decisions += 1
        self._broadcast(literal)

        implications: List[Literal] = []
        iterations = 0
        conflict_cp = None
        while True:
            iterations += 1
            results = self.evaluate_all()
            conflict_cp = next(
                (i for i, r in enumerate(results) if r.state is CpState.FALSIFIED), None
            )
            if conflict_cp is not None:
                self.counters.evaluation_conflicts += 1
                break
            self.counters.selector_invocations += 1
            implied = select_implication(results)
            if implied is None:
                break
            implications.append(implied)
            self._broadcast(implied)

        cycles = iterations * self.config.cycles_per_bcp_iteration
        self.counter.charge('bcp', cycles)
        self.counters.iterations += iterations
        conflict = conflict_cp is not None
        self.state = ControlState.CONFLICT if conflict else ControlState.DONE
        self.last_outcome = BcpOutcome(tuple(implications), conflict, iterations, cycles,
                                       conflict_cp)
        return self.last_outcome

    def backtrack_clear(self) -> int:
        """Unassign every local variable; clauses stay loaded.

        Returns:
            Cycles consumed (fixed cost of one cycle)
        """
        if self.state in (ControlState.BCP_RUNNING, ControlState.LOADING):
            raise CoprocessorStateError(f"Cannot clear while {self.state.value}")
        for cp in self.cps:
            cp.clear()
        self.local_assignment = [None] * (self.config.max_local_vars + 1)
        self.state = ControlState.IDLE
        self.counter.charge('clear', CLEAR_CYCLES)
        self.counters.clears += 1
        return CLEAR_CYCLES
