"""Unit tests for the benchmark runner."""

import pytest

from src.bench.records import BenchCsvWriter
from src.bench.runner import (
    BenchInstance,
    BenchRunner,
    corpus_instances,
    pigeonhole_instance,
    random_instances,
    sweep_instances,
)
from src.cnf.formula import Formula
from src.services.solver_factory import SolverFactory
from src.solver.solver_base import SolveStats, SolveStatus, Verdict, VerdictMismatchError
from src.utils.config import Config
from tests.fixtures.cnf_samples import XOR_UNSAT_CLAUSES


@pytest.fixture
def factory():
    return SolverFactory(Config())


class TestInstances:

    def test_corpus_expands_directories_sorted(self, tmp_path, dimacs_file):
        dimacs_file(name='b.cnf')
        dimacs_file(name='a.cnf')

        instances = corpus_instances([str(tmp_path)])

        assert [i.name for i in instances] == ['a.cnf', 'b.cnf']

    def test_corpus_skips_missing(self, tmp_path, dimacs_file):
        path = dimacs_file()

        instances = corpus_instances([path, str(tmp_path / 'missing.cnf')])

        assert len(instances) == 1
        assert instances[0].load().num_clauses == 4

    def test_random_names_and_seeds(self):
        instances = random_instances(10, 20, k=3, seed=5, count=2)

        assert [i.name for i in instances] == ['rand-k3-v10-c20-s5', 'rand-k3-v10-c20-s6']
        assert instances[0].formula != instances[1].formula

    def test_sweep_grid(self):
        instances = sweep_instances([10, 20], [30, 40, 50], seed=0)

        assert len(instances) == 6
        assert instances[-1].name == 'rand-k3-v20-c50-s0'

    def test_pigeonhole_instance(self):
        instance = pigeonhole_instance(3)

        assert instance.name == 'php-h3'
        assert instance.load().num_vars == 12


class TestBenchRunner:

    def test_invalid_mode(self, factory):
        with pytest.raises(ValueError):
            BenchRunner(factory, mode='reference')

    def test_invalid_workers(self, factory):
        with pytest.raises(ValueError):
            BenchRunner(factory, workers=0)

    def test_both_mode_fills_reference(self, factory):
        runner = BenchRunner(factory, mode='both')

        record = runner.run_instance(pigeonhole_instance(3))

        assert record.verdict == 'UNSAT'
        assert record.reference_wall_seconds is not None
        assert record.partitions == 1
        assert record.swaps == 1

    def test_coproc_mode_skips_reference(self, factory):
        runner = BenchRunner(factory, mode='coproc')

        record = runner.run_instance(BenchInstance('xor', Formula.from_clauses(XOR_UNSAT_CLAUSES)))

        assert record.reference_wall_seconds is None
        assert record.speedup_vs_reference is None

    def test_unreadable_instance_skipped(self, factory, tmp_path):
        bad = tmp_path / 'bad.cnf'
        bad.write_text('p cnf 1 1\n2 0\n', encoding='utf-8')
        runner = BenchRunner(factory)

        assert runner.run_instance(BenchInstance('bad', path=str(bad))) is None

    def test_unpartitionable_instance_skipped(self):
        factory = SolverFactory(Config(values={'partition': {'max_vars': 2}}))
        runner = BenchRunner(factory, mode='coproc')
        formula = Formula.from_clauses([[1, 2, 3]])

        assert runner.run_instance(BenchInstance('wide', formula)) is None

    def test_disagreement_raises(self, factory, mocker, worked_formula):
        unsat = Verdict(SolveStatus.UNSAT, SolveStats())
        reference = mocker.Mock()
        reference.solve.return_value = unsat
        mocker.patch.object(factory, 'create_reference_solver', return_value=reference)

        with pytest.raises(VerdictMismatchError):
            BenchRunner(factory).run_instance(BenchInstance('worked', worked_formula))

    def test_run_writes_in_order(self, factory, tmp_path):
        instances = random_instances(12, 40, seed=0, count=4)
        path = str(tmp_path / 'out.csv')

        with BenchCsvWriter(path) as writer:
            records = BenchRunner(factory, workers=3).run(instances, writer)

        assert [r.instance for r in records] == [i.name for i in instances]
        assert writer.rows_written == 4
