"""
Coprocessor package for the BCP coprocessor simulator.

Cycle-accounted model of the BCP engine: clause-processor array,
implication selector, control unit and the memory-mapped register
interface the host drives.
"""

from src.coprocessor.config import CoprocConfig
from src.coprocessor.clause_processor import ClauseProcessor, CpResult, CpState, cp_evaluate
from src.coprocessor.implication_selector import select_implication
from src.coprocessor.control_unit import (
    BcpOutcome,
    ControlState,
    CoprocessorCapacityError,
    CoprocessorSimulator,
    CoprocessorStateError,
)
from src.coprocessor.registers import Command, Register, RegisterAccessError, RegisterFile, Status

__all__ = [
    'CoprocConfig',
    'ClauseProcessor',
    'CpResult',
    'CpState',
    'cp_evaluate',
    'select_implication',
    'BcpOutcome',
    'ControlState',
    'CoprocessorCapacityError',
    'CoprocessorSimulator',
    'CoprocessorStateError',
    'Command',
    'Register',
    'RegisterAccessError',
    'RegisterFile',
    'Status',
]
