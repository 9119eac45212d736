"""
Benchmark runner.

Builds instance lists (DIMACS corpus, random k-SAT, pigeonhole, sweep
grids), solves each instance on the coprocessor path and optionally on the
software baseline, and emits one BenchRecord per instance. Independent
instances may run on a thread pool; every worker gets its own solvers and
simulator, and records are written serially in submission order.
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from src.bench.generators import pigeonhole, random_ksat
from src.bench.records import BenchCsvWriter, BenchRecord
from src.cnf.dimacs import read_dimacs_file
from src.cnf.formula import Formula
from src.services.solver_factory import SolverFactory
from src.solver.solver_base import VerdictMismatchError

BENCH_MODES = ('both', 'coproc')

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchInstance:
    """A named instance, either generated in memory or read from ``path``."""

    name: str
    formula: Optional[Formula] = None
    path: Optional[str] = None

    def load(self) -> Formula:
        if self.formula is not None:
            return self.formula
        return read_dimacs_file(self.path)


def corpus_instances(paths: Iterable[str]) -> List[BenchInstance]:
    """Expand files and directories (non-recursive, sorted) into instances.

    Missing paths are skipped with a warning.
    """
    instances = []
    for path in paths:
        if os.path.isdir(path):
            for entry in sorted(os.listdir(path)):
                full = os.path.join(path, entry)
                if os.path.isfile(full):
                    instances.append(BenchInstance(entry, path=full))
        elif os.path.isfile(path):
            instances.append(BenchInstance(os.path.basename(path), path=path))
        else:
            logger.warning(f"Skipping {path}: no such file or directory")
    return instances


def random_instances(num_vars: int, num_clauses: int, k: int = 3, seed: int = 0,
                     count: int = 1) -> List[BenchInstance]:
    """``count`` random k-SAT instances with seeds seed, seed+1, ..."""
    return [
        BenchInstance(f"rand-k{k}-v{num_vars}-c{num_clauses}-s{s}",
                      random_ksat(num_vars, num_clauses, k, s))
        for s in range(seed, seed + count)
    ]


def sweep_instances(vars_list: Sequence[int], clauses_list: Sequence[int], k: int = 3,
                    seed: int = 0, count: int = 1) -> List[BenchInstance]:
    """Random instances over the grid vars_list x clauses_list."""
    instances = []
    for num_vars in vars_list:
        for num_clauses in clauses_list:
            instances.extend(random_instances(num_vars, num_clauses, k, seed, count))
    return instances


def pigeonhole_instance(holes: int) -> BenchInstance:
    return BenchInstance(f"php-h{holes}", pigeonhole(holes))


class BenchRunner:
    """
    Solve instances and produce bench records.

    Example:
        >>> runner = BenchRunner(SolverFactory(), mode='both', workers=4)
        >>> with BenchCsvWriter('out.csv') as writer:
        ...     runner.run(instances, writer)
    """

    def __init__(self, factory: SolverFactory, mode: str = 'both', workers: int = 1):
        """
        Args:
            factory: Builds fresh solvers per instance
            mode: 'both' also runs the software baseline and checks agreement
            workers: Thread pool size

        Raises:
            ValueError: Unknown mode or workers < 1
        """
        if mode not in BENCH_MODES:
            raise ValueError(f"Unknown bench mode '{mode}', expected one of {BENCH_MODES}")
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        self.factory = factory
        self.mode = mode
        self.workers = workers
        self.logger = logging.getLogger(__name__)

    def run_instance(self, instance: BenchInstance) -> Optional[BenchRecord]:
        """
        Solve one instance.

        Returns:
            The record, or None when the instance could not be read or partitioned

        Raises:
            VerdictMismatchError: The two paths disagree
        """
        try:
            formula = instance.load()
        except (OSError, ValueError) as e:
            self.logger.warning(f"Skipping {instance.name}: {e}")
            return None

        host_solver = self.factory.create_host_solver()
        try:
            host = host_solver.solve(formula)
        except ValueError as e:
            self.logger.warning(f"Skipping {instance.name}: {e}")
            return None

        reference = None
        if self.mode == 'both':
            reference = self.factory.create_reference_solver().solve(formula)
            if reference.status is not host.status:
                raise VerdictMismatchError(
                    f"{instance.name}: coprocessor path says {host.status.value}, "
                    f"reference says {reference.status.value}"
                )

        return BenchRecord.build(
            instance.name, formula, self.factory.coproc_config.clock_hz,
            host=host, partitions=len(host_solver.plan), reference=reference,
        )

    def run(self, instances: Sequence[BenchInstance],
            writer: Optional[BenchCsvWriter] = None) -> List[BenchRecord]:
        """
        Run every instance, writing records in submission order.

        Returns:
            Records for the instances that were not skipped
        """
        self.logger.info(
            f"Running {len(instances)} instances (mode={self.mode}, workers={self.workers})"
        )
        records = []
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            for record in executor.map(self.run_instance, instances):
                if record is None:
                    continue
                records.append(record)
                if writer is not None:
                    writer.write(record)
        self.logger.info(f"Finished {len(records)}/{len(instances)} instances")
        return records
