"""Per-phase execution trace collected by the coprocessor driver

Each driver operation is attributed to a phase (``swap``, ``bcp`` or
``clear``) together with the wall time spent simulating it and the modeled
cycles it consumed, split by kind (bcp, load, clear, transaction).
"""

from dataclasses import dataclass, field
from typing import Dict, Optional

PHASES = ('swap', 'bcp', 'clear')


@dataclass
class PhaseTotals:
    wall_seconds: float = 0.0
    operations: int = 0
    cycles: Dict[str, int] = field(default_factory=dict)

    def add(self, wall_seconds: float, cycles: Dict[str, int]) -> None:
        self.wall_seconds += wall_seconds
        self.operations += 1
        for kind, count in cycles.items():
            if count:
                self.cycles[kind] = self.cycles.get(kind, 0) + count

    @property
    def total_cycles(self) -> int:
        return sum(self.cycles.values())


@dataclass
class ExecutionTrace:
    phases: Dict[str, PhaseTotals] = field(
        default_factory=lambda: {name: PhaseTotals() for name in PHASES}
    )

    def record(self, phase: str, wall_seconds: float, cycles: Dict[str, int]) -> None:
        self.phases.setdefault(phase, PhaseTotals()).add(wall_seconds, cycles)

    def cycles(self, phase: str, kind: Optional[str] = None) -> int:
        totals = self.phases.get(phase)
        if totals is None:
            return 0
        if kind is None:
            return totals.total_cycles
        return totals.cycles.get(kind, 0)

    @property
    def simulator_wall_seconds(self) -> float:
        return sum(p.wall_seconds for p in self.phases.values())

    @property
    def total_cycles(self) -> int:
        return sum(p.total_cycles for p in self.phases.values())
