"""Coprocessor model configuration"""

from dataclasses import dataclass

from src.coprocessor.literal_word import MAX_WORD_VAR


@dataclass(frozen=True)
class CoprocConfig:
    """Capacity and cycle-cost knobs of the modeled BCP coprocessor.

    Defaults describe a 224-CP, 63-variable engine clocked at 106.66 MHz.
    The cycle costs are model parameters, not measured hardware figures.

    Attributes:
        num_cps: Number of clause processors (clauses resident at once)
        max_local_vars: Local variable capacity per partition
        clock_hz: Modeled clock used to convert cycles to seconds
        cycles_per_bcp_iteration: One broadcast -> evaluate -> select pass
        cycles_per_load_word: One literal word (or terminator) written during load
        host_transaction_cycles: Overhead charged per host register access
    """

    num_cps: int = 224
    max_local_vars: int = 63
    clock_hz: int = 106_660_000
    cycles_per_bcp_iteration: int = 3
    cycles_per_load_word: int = 1
    host_transaction_cycles: int = 10

    def __post_init__(self):
        if self.num_cps < 1:
            raise ValueError(f"num_cps must be >= 1, got {self.num_cps}")
        if not 1 <= self.max_local_vars <= MAX_WORD_VAR:
            raise ValueError(
                f"max_local_vars must be in [1, {MAX_WORD_VAR}], got {self.max_local_vars}"
            )
        if self.clock_hz <= 0:
            raise ValueError(f"clock_hz must be positive, got {self.clock_hz}")
        for name in ('cycles_per_bcp_iteration', 'cycles_per_load_word',
                     'host_transaction_cycles'):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")

    def cycles_to_seconds(self, cycles: int) -> float:
        return cycles / self.clock_hz
