"""Unit tests for the memory-mapped register interface."""

import pytest

from src.coprocessor.literal_word import encode_load_word, encode_value_word
from src.coprocessor.registers import (
    Command,
    Register,
    RegisterAccessError,
    Status,
)


def _load(registers, clauses):
    registers.write_register(Register.CMD, Command.RESET)
    for index, clause in enumerate(clauses):
        registers.write_register(Register.ARG0, index)
        registers.write_register(Register.CMD, Command.LOAD_BEGIN)
        for lit in list(clause) + [0]:
            registers.write_register(Register.ARG0, encode_load_word(lit) if lit else 0)
            registers.write_register(Register.CMD, Command.LOAD_WORD)


def _decide(registers, literal):
    registers.write_register(Register.ARG0, encode_value_word(literal))
    registers.write_register(Register.CMD, Command.DECIDE)


def _drain(registers):
    words = []
    while True:
        word = registers.read_register(Register.IMPL)
        if word == 0:
            return words
        words.append(word)


class TestRegisterMap:
    """Tests for address decoding and access types."""

    def test_unknown_address(self, register_file):
        with pytest.raises(RegisterAccessError) as excinfo:
            register_file.read_register(0x18)

        assert excinfo.value.address == 0x18

    def test_cmd_is_write_only(self, register_file):
        with pytest.raises(RegisterAccessError):
            register_file.read_register(Register.CMD)

    def test_status_is_read_only(self, register_file):
        with pytest.raises(RegisterAccessError):
            register_file.write_register(Register.STATUS, 0)

    def test_word_must_fit_32_bits(self, register_file):
        with pytest.raises(ValueError):
            register_file.write_register(Register.ARG0, 1 << 32)

    def test_arg0_reads_back(self, register_file):
        register_file.write_register(Register.ARG0, 0x2A)

        assert register_file.read_register(Register.ARG0) == 0x2A

    def test_every_access_costs_a_transaction(self, register_file, simulator):
        register_file.write_register(Register.ARG0, 1)
        register_file.read_register(Register.STATUS)

        assert register_file.transactions == 2
        assert simulator.counter.by_kind['transaction'] == 20

    def test_initial_status_idle(self, register_file):
        assert register_file.read_register(Register.STATUS) == Status.IDLE


class TestCommands:
    """Tests for command execution through registers."""

    def test_load_through_registers(self, register_file, simulator):
        _load(register_file, [(-1, 2, -3), (1, -2, -3)])

        assert simulator.cps[0].literals == [-1, 2, -3]
        assert simulator.cps[1].literals == [1, -2, -3]
        assert register_file.read_register(Register.STATUS) == Status.IDLE

    def test_decide_polls_busy_then_done(self, register_file):
        _load(register_file, [(-1, 2, -3), (1, -2, -3)])
        _decide(register_file, 1)

        # one iteration = 3 cycles -> ceil(3 / 10) = 1 busy poll
        assert register_file.read_register(Register.STATUS) == Status.BUSY
        assert register_file.read_register(Register.STATUS) == Status.DONE

    def test_implications_drained_then_zero(self, register_file):
        _load(register_file, [(-1, 2, -3), (1, -2, -3)])
        _decide(register_file, 1)
        register_file.read_register(Register.STATUS)
        register_file.read_register(Register.STATUS)
        _decide(register_file, 3)
        register_file.read_register(Register.STATUS)
        register_file.read_register(Register.STATUS)

        assert _drain(register_file) == [encode_value_word(2)]
        assert register_file.read_register(Register.IMPL) == 0

    def test_conflict_status(self, register_file):
        _load(register_file, [(-1,)])
        _decide(register_file, 1)
        register_file.read_register(Register.STATUS)

        assert register_file.read_register(Register.STATUS) == Status.CONFLICT

    def test_clear_after_conflict(self, register_file, simulator):
        _load(register_file, [(-1,)])
        _decide(register_file, 1)
        register_file.read_register(Register.STATUS)

        register_file.write_register(Register.CMD, Command.CLEAR)

        assert register_file.read_register(Register.STATUS) == Status.IDLE
        assert simulator.loaded_clauses == 1

    def test_nop(self, register_file):
        register_file.write_register(Register.CMD, Command.NOP)

        assert register_file.read_register(Register.STATUS) == Status.IDLE


class TestErrorStatus:
    """Command failures set a sticky ERROR status that only RESET clears."""

    def test_unknown_command(self, register_file):
        register_file.write_register(Register.CMD, 9)

        assert register_file.read_register(Register.STATUS) == Status.ERROR

    def test_decide_after_conflict_errors(self, register_file):
        _load(register_file, [(-1,)])
        _decide(register_file, 1)
        register_file.read_register(Register.STATUS)
        register_file.read_register(Register.STATUS)

        _decide(register_file, -1)

        assert register_file.read_register(Register.STATUS) == Status.ERROR

    def test_error_is_sticky(self, register_file):
        register_file.write_register(Register.CMD, 9)

        register_file.write_register(Register.CMD, Command.CLEAR)

        assert register_file.error is True
        assert register_file.read_register(Register.STATUS) == Status.ERROR

    def test_reset_clears_error(self, register_file):
        register_file.write_register(Register.CMD, 9)

        register_file.write_register(Register.CMD, Command.RESET)

        assert register_file.read_register(Register.STATUS) == Status.IDLE

    def test_command_while_busy_rejected(self, register_file):
        _load(register_file, [(-1, 2)])
        _decide(register_file, 1)

        register_file.write_register(Register.CMD, Command.CLEAR)

        assert register_file.read_register(Register.STATUS) == Status.ERROR


class TestCycleCounter:

    def test_lo_read_latches_hi(self, register_file, simulator):
        simulator.counter.charge('bcp', (5 << 32) + 7)

        low = register_file.read_register(Register.CYCLES_LO)
        simulator.counter.charge('bcp', 1 << 32)
        high = register_file.read_register(Register.CYCLES_HI)

        assert (low, high) == (7, 5)
