"""Memory-mapped register interface of the coprocessor

Models the bus subordinate the host talks to. Register map (32-bit words):

    0x00 CMD        write  0=NOP 1=RESET 2=LOAD_BEGIN 3=LOAD_WORD 4=DECIDE 5=CLEAR
    0x04 ARG0       read/write argument for the next command
    0x08 STATUS     read   0=IDLE 1=BUSY 2=DONE 3=CONFLICT 4=ERROR
    0x0C IMPL       read   next implication as a value word, 0 when drained
    0x10 CYCLES_LO  read   low word of the cycle counter (latches the high word)
    0x14 CYCLES_HI  read   high word latched by the last CYCLES_LO read

Every access is charged ``host_transaction_cycles``. Command failures set a
sticky ERROR status that only RESET clears; unknown addresses raise.
"""

import logging
import math
from collections import deque
from enum import IntEnum
from typing import Deque

from src.coprocessor.control_unit import (
    ControlState,
    CoprocessorCapacityError,
    CoprocessorSimulator,
    CoprocessorStateError,
)
from src.coprocessor.literal_word import decode_load_word, decode_value_word, encode_value_word

WORD_MASK = 0xFFFFFFFF


class Register(IntEnum):
    CMD = 0x00
    ARG0 = 0x04
    STATUS = 0x08
    IMPL = 0x0C
    CYCLES_LO = 0x10
    CYCLES_HI = 0x14


class Command(IntEnum):
    NOP = 0
    RESET = 1
    LOAD_BEGIN = 2
    LOAD_WORD = 3
    DECIDE = 4
    CLEAR = 5


class Status(IntEnum):
    IDLE = 0
    BUSY = 1
    DONE = 2
    CONFLICT = 3
    ERROR = 4


_WRITABLE = (Register.CMD, Register.ARG0)


class RegisterAccessError(ValueError):
    """Access to an address outside the register map, or a bad access type."""

    def __init__(self, address: int, message: str):
        self.address = address
        super().__init__(f"0x{address:02x}: {message}")


class RegisterFile:
    """Bus-facing register file in front of a CoprocessorSimulator."""

    def __init__(self, simulator: CoprocessorSimulator):
        self.simulator = simulator
        self.arg0 = 0
        self.error = False
        self.busy_polls = 0
        self.impl_queue: Deque[int] = deque()
        self._cycles_hi_latch = 0
        self.transactions = 0
        self.logger = logging.getLogger(__name__)

    def _charge_transaction(self) -> None:
        self.transactions += 1
        self.simulator.counter.charge(
            'transaction', self.simulator.config.host_transaction_cycles
        )

    def _decode_address(self, addr: int) -> Register:
        try:
            return Register(addr)
        except ValueError:
            raise RegisterAccessError(addr, "unknown register address") from None

    def write_register(self, addr: int, word: int) -> None:
        """Host write transaction.

        Raises:
            RegisterAccessError: Unknown or read-only address
            ValueError: Word outside 32 bits
        """
        register = self._decode_address(addr)
        if register not in _WRITABLE:
            raise RegisterAccessError(addr, f"{register.name} is read-only")
        if not 0 <= word <= WORD_MASK:
            raise ValueError(f"Word {word} does not fit in 32 bits")
        self._charge_transaction()

        if register is Register.ARG0:
            self.arg0 = word
            return
        self._execute(word)

    def read_register(self, addr: int) -> int:
        """Host read transaction; the value is sampled before the access is charged."""
        register = self._decode_address(addr)
        if register is Register.CMD:
            raise RegisterAccessError(addr, "CMD is write-only")

        if register is Register.ARG0:
            value = self.arg0
        elif register is Register.STATUS:
            value = self._status()
        elif register is Register.IMPL:
            value = self.impl_queue.popleft() if self.impl_queue else 0
        elif register is Register.CYCLES_LO:
            cycles = self.simulator.cycles
            self._cycles_hi_latch = (cycles >> 32) & WORD_MASK
            value = cycles & WORD_MASK
        else:
            value = self._cycles_hi_latch
        self._charge_transaction()
        return value

    def _status(self) -> int:
        if self.error:
            return Status.ERROR
        if self.busy_polls > 0:
            self.busy_polls -= 1
            return Status.BUSY
        state = self.simulator.state
        if state is ControlState.DONE:
            return Status.DONE
        if state is ControlState.CONFLICT:
            return Status.CONFLICT
        if state is ControlState.BCP_RUNNING:
            return Status.BUSY
        return Status.IDLE

    def _execute(self, code: int) -> None:
        try:
            command = Command(code)
        except ValueError:
            self._fail(f"unknown command {code}")
            return

        if command is Command.RESET:
            self.simulator.reset()
            self.error = False
            self.busy_polls = 0
            self.impl_queue.clear()
            return
        if command is Command.NOP:
            return
        if self.error:
            self._fail(f"{command.name} rejected: error status is sticky until RESET")
            return
        if self.busy_polls > 0:
            self._fail(f"{command.name} rejected: coprocessor is BUSY")
            return

        try:
            if command is Command.LOAD_BEGIN:
                self.simulator.begin_clause(self.arg0)
            elif command is Command.LOAD_WORD:
                literal = decode_load_word(self.arg0) if self.arg0 else 0
                self.simulator.load_word(literal)
            elif command is Command.DECIDE:
                self._decide()
            elif command is Command.CLEAR:
                self.impl_queue.clear()
                self.simulator.backtrack_clear()
        except (CoprocessorStateError, CoprocessorCapacityError, ValueError) as e:
            self._fail(f"{command.name} failed: {e}")

    def _decide(self) -> None:
        literal = decode_value_word(self.arg0)
        self.impl_queue.clear()
        outcome = self.simulator.decide(literal)
        self.impl_queue.extend(encode_value_word(lit) for lit in outcome.implications)
        self.busy_polls = math.ceil(
            outcome.cycles / self.simulator.config.host_transaction_cycles
        )

    def _fail(self, message: str) -> None:
        self.error = True
        self.logger.warning(f"Coprocessor error: {message}")
