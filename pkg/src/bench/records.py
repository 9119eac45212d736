"""
Benchmark records and CSV output.

One BenchRecord per (instance, configuration). Columns are exactly the
record fields, in declaration order, with a header row. Optional values
(no reference run, zero denominators) are written as empty cells.
"""

import csv
import logging
import os
import threading
from dataclasses import asdict, dataclass, fields
from typing import Dict, List, Optional

from src.cnf.formula import Formula
from src.solver.solver_base import Verdict

WALL_CLOCK_COLUMNS = (
    'host_wall_seconds',
    'reference_wall_seconds',
    'bcp_per_wall_second',
    'speedup_vs_reference',
)


@dataclass
class BenchRecord:
    instance: str
    num_vars: int
    num_clauses: int
    partitions: Optional[int]
    swaps: Optional[int]
    decisions: int
    implications: int
    conflicts: int
    verdict: str
    coproc_model_cycles: Optional[int]
    coproc_model_seconds: Optional[float]
    host_wall_seconds: Optional[float]
    reference_wall_seconds: Optional[float]
    bcp_per_model_second: Optional[float]
    bcp_per_wall_second: Optional[float]
    speedup_vs_reference: Optional[float]

    @classmethod
    def columns(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    @classmethod
    def build(cls, instance: str, formula: Formula, clock_hz: int,
              host: Optional[Verdict] = None, partitions: Optional[int] = None,
              reference: Optional[Verdict] = None) -> 'BenchRecord':
        """
        Derive a record from one or both solver runs.

        Search counters come from the host run when there is one, else from
        the reference run.

        Args:
            instance: Instance name
            formula: The solved formula
            clock_hz: Modeled coprocessor clock
            host: Verdict of the coprocessor path
            partitions: Partition count of the host run's plan
            reference: Verdict of the software baseline

        Raises:
            ValueError: Neither run was given
        """
        primary = host or reference
        if primary is None:
            raise ValueError("A bench record needs at least one solver run")
        stats = primary.stats

        record = cls(
            instance=instance,
            num_vars=formula.num_vars,
            num_clauses=formula.num_clauses,
            partitions=partitions if host else None,
            swaps=host.stats.partition_swaps if host else None,
            decisions=stats.decisions,
            implications=stats.implications,
            conflicts=stats.conflicts,
            verdict=primary.status.value,
            coproc_model_cycles=None,
            coproc_model_seconds=None,
            host_wall_seconds=host.stats.wall_time if host else None,
            reference_wall_seconds=reference.stats.wall_time if reference else None,
            bcp_per_model_second=None,
            bcp_per_wall_second=None,
            speedup_vs_reference=None,
        )
        if host is None:
            return record

        cycles = host.stats.total_model_cycles
        model_seconds = cycles / clock_hz
        record.coproc_model_cycles = cycles
        record.coproc_model_seconds = model_seconds
        if model_seconds > 0:
            record.bcp_per_model_second = stats.implications / model_seconds
        if record.host_wall_seconds > 0:
            record.bcp_per_wall_second = stats.implications / record.host_wall_seconds
        if reference is not None:
            system_seconds = system_time(host, clock_hz)
            if system_seconds > 0:
                record.speedup_vs_reference = reference.stats.wall_time / system_seconds
        return record

    def to_row(self, include_wall_clock: bool = True) -> Dict[str, str]:
        row = {}
        for name, value in asdict(self).items():
            if not include_wall_clock and name in WALL_CLOCK_COLUMNS:
                continue
            row[name] = '' if value is None else str(value)
        return row


def system_time(host: Verdict, clock_hz: int) -> float:
    """Host loop time excluding simulation, plus the modeled coprocessor time."""
    stats = host.stats
    host_logic = max(stats.wall_time - stats.coproc_wall_time, 0.0)
    return host_logic + stats.total_model_cycles / clock_hz


class BenchCsvWriter:
    """
    Serialized CSV sink for bench records.

    Writes the header when the file is new or empty. Safe to share between
    worker threads.

    Usage:
        with BenchCsvWriter('results.csv') as writer:
            writer.write(record)
    """

    def __init__(self, path: str, append: bool = False):
        self.path = path
        self.lock = threading.Lock()
        self.rows_written = 0
        self.logger = logging.getLogger(__name__)

        needs_header = not append or not os.path.exists(path) or os.path.getsize(path) == 0
        self._file = open(path, 'a' if append else 'w', newline='', encoding='utf-8')
        self._writer = csv.DictWriter(self._file, fieldnames=BenchRecord.columns())
        if needs_header:
            self._writer.writeheader()
            self._file.flush()

    def write(self, record: BenchRecord) -> None:
        with self.lock:
            self._writer.writerow(record.to_row())
            self._file.flush()
            self.rows_written += 1
        self.logger.info(
            f"{record.instance}: {record.verdict}, {record.implications} implications, "
            f"{record.swaps} swaps"
        )

    def close(self) -> None:
        with self.lock:
            if not self._file.closed:
                self._file.close()
        self.logger.debug(f"Wrote {self.rows_written} rows to {self.path}")

    def __enter__(self) -> 'BenchCsvWriter':
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.close()
