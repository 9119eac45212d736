"""
Execution-time breakdown of a coprocessor-path solve.

Splits the solve into its constituent components: modeled coprocessor BCP,
modeled register transactions, partition swapping (loads plus assignment
replay) and the host's own decision/backtrack logic. Modeled components are
converted with the coprocessor clock; host logic is measured wall time
outside the simulator.
"""

from dataclasses import dataclass
from typing import List, Optional

from src.solver.solver_base import SolveStats
from src.solver.trace import ExecutionTrace

COMPONENTS = (
    'coprocessor_bcp',
    'register_transactions',
    'partition_swapping',
    'host_logic',
)


@dataclass(frozen=True)
class BreakdownRow:
    component: str
    seconds: float
    fraction: float


def emit_breakdown(stats: SolveStats, trace: Optional[ExecutionTrace],
                   clock_hz: int) -> List[BreakdownRow]:
    """
    Per-component time table; fractions sum to 1.

    Args:
        stats: Stats of the traced solve
        trace: Execution trace collected by the driver during that solve
        clock_hz: Modeled coprocessor clock

    Returns:
        One row per component in COMPONENTS order

    Raises:
        ValueError: No trace was collected
    """
    if trace is None:
        raise ValueError("No execution trace collected; run the solve with tracing")

    bcp_cycles = trace.cycles('bcp', 'bcp') + trace.cycles('clear', 'clear')
    transaction_cycles = trace.cycles('bcp', 'transaction') + trace.cycles('clear', 'transaction')
    swap_cycles = trace.cycles('swap')
    seconds = [
        bcp_cycles / clock_hz,
        transaction_cycles / clock_hz,
        swap_cycles / clock_hz,
        max(stats.wall_time - trace.simulator_wall_seconds, 0.0),
    ]
    total = sum(seconds)
    if total <= 0:
        fractions = [0.0, 0.0, 0.0, 1.0]
    else:
        fractions = [s / total for s in seconds]
    return [BreakdownRow(c, s, f) for c, s, f in zip(COMPONENTS, seconds, fractions)]


def fraction_of(rows: List[BreakdownRow], component: str) -> float:
    for row in rows:
        if row.component == component:
            return row.fraction
    raise KeyError(component)


def format_breakdown(rows: List[BreakdownRow]) -> str:
    lines = [f"{'component':<24}{'seconds':>16}{'fraction':>10}"]
    for row in rows:
        lines.append(f"{row.component:<24}{row.seconds:>16.9f}{row.fraction:>10.4f}")
    return '\n'.join(lines)
