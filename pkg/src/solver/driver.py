"""Host-side coprocessor driver

Talks to the coprocessor only through register reads and writes, the way a
bus master would: RESET + LOAD_BEGIN/LOAD_WORD sequences to hot-swap a
partition, DECIDE followed by STATUS polling and IMPL draining, CLEAR on
backtrack. Every operation is timed and attributed to a trace phase.
"""

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from src.cnf.formula import Literal
from src.coprocessor.literal_word import decode_value_word, encode_load_word, encode_value_word
from src.coprocessor.registers import Command, Register, RegisterFile, Status
from src.solver.trace import ExecutionTrace

MAX_STATUS_POLLS = 1_000_000


class CoprocessorError(RuntimeError):
    """The coprocessor reported ERROR status or never finished."""


@dataclass(frozen=True)
class DecideResult:
    implications: Tuple[Literal, ...]
    conflict: bool


class CoprocessorDriver:
    """Register-level protocol for one coprocessor instance."""

    def __init__(self, registers: RegisterFile, trace: Optional[ExecutionTrace] = None):
        self.registers = registers
        self.trace = trace if trace is not None else ExecutionTrace()
        self.decides = 0
        self.logger = logging.getLogger(__name__)

    @property
    def config(self):
        return self.registers.simulator.config

    @contextmanager
    def _phase(self, phase: str):
        counter = self.registers.simulator.counter
        before = counter.snapshot()
        started = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - started
            after = counter.snapshot()
            delta = {kind: after[kind] - before.get(kind, 0) for kind in after}
            self.trace.record(phase, elapsed, delta)

    def _write(self, register: Register, word: int) -> None:
        self.registers.write_register(register, word)

    def _command(self, command: Command, arg0: Optional[int] = None) -> None:
        if arg0 is not None:
            self._write(Register.ARG0, arg0)
        self._write(Register.CMD, command)

    def _poll_status(self) -> Status:
        for _ in range(MAX_STATUS_POLLS):
            status = Status(self.registers.read_register(Register.STATUS))
            if status is not Status.BUSY:
                if status is Status.ERROR:
                    raise CoprocessorError("Coprocessor reported ERROR status")
                return status
        raise CoprocessorError(f"Coprocessor still BUSY after {MAX_STATUS_POLLS} polls")

    def load(self, clauses: Sequence[Sequence[Literal]]) -> None:
        """RESET the engine and write every locally encoded clause into its CP."""
        with self._phase('swap'):
            self._command(Command.RESET)
            for cp_index, clause in enumerate(clauses):
                self._command(Command.LOAD_BEGIN, cp_index)
                for lit in clause:
                    self._command(Command.LOAD_WORD, encode_load_word(lit))
                self._command(Command.LOAD_WORD, 0)
            self._poll_status()
        self.logger.debug(f"Loaded {len(clauses)} clauses over the register interface")

    def decide(self, literal: Literal, phase: str = 'bcp') -> DecideResult:
        """Send a decision, poll until the engine settles and drain implications."""
        with self._phase(phase):
            self._command(Command.DECIDE, encode_value_word(literal))
            self.decides += 1
            status = self._poll_status()
            implications = []
            while True:
                word = self.registers.read_register(Register.IMPL)
                if word == 0:
                    break
                implications.append(decode_value_word(word))
        return DecideResult(tuple(implications), status is Status.CONFLICT)

    def clear(self) -> None:
        with self._phase('clear'):
            self._command(Command.CLEAR)
            self._poll_status()

    def read_cycles(self) -> int:
        """Read the 64-bit cycle counter (LO latches HI)."""
        low = self.registers.read_register(Register.CYCLES_LO)
        high = self.registers.read_register(Register.CYCLES_HI)
        return (high << 32) | low
