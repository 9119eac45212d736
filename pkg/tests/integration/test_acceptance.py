"""
End-to-end properties of the coprocessor path and the bench harness.

Covers swap locality, determinism, record arithmetic, the clause/variable
scaling shape and the modeled-versus-software BCP speed direction.
"""

import pytest

from src.bench.breakdown import emit_breakdown, fraction_of
from src.bench.generators import pigeonhole, random_ksat
from src.bench.records import BenchRecord
from src.bench.runner import BenchInstance, BenchRunner, random_instances
from src.cnf.formula import Formula
from src.coprocessor.config import CoprocConfig
from src.reference.reference_solver import solve_reference
from src.services.solver_factory import SolverFactory
from src.solver.host_solver import HostSolver
from src.utils.config import Config

pytestmark = pytest.mark.integration


def _factory(num_cps, max_local_vars):
    return SolverFactory(Config(values={
        'coproc': {'num_cps': num_cps, 'max_local_vars': max_local_vars},
    }))


def _tiled(base: Formula, copies: int) -> Formula:
    """The base clauses repeated ``copies`` times over the same variables."""
    return Formula(num_vars=base.num_vars, clauses=base.clauses * copies)


class TestSwapLocality:

    def test_other_partition_never_loaded(self, default_coproc_config, worked_formula,
                                          split_partition_config):
        solver = HostSolver(default_coproc_config, split_partition_config)
        solver.prepare(worked_formula)
        solver.trail.push_decision(1)

        assert solver.propagate_global(1)

        assert solver.swap_counts.get(1, 0) == 0
        assert solver.simulator.counters.load_words == 8


class TestDeterminism:

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_repeat_solves_match(self, small_coproc_config, seed):
        formula = random_ksat(20, 85, seed=seed)

        first = HostSolver(small_coproc_config).solve(formula)
        second = HostSolver(small_coproc_config).solve(formula)

        assert first.status is second.status
        assert first.stats.to_dict(include_wall_clock=False) == \
            second.stats.to_dict(include_wall_clock=False)
        assert first.model == second.model

    def test_repeat_records_match(self, hole3_formula):
        runner = BenchRunner(_factory(8, 8), mode='coproc')
        instance = BenchInstance('php-h3', hole3_formula)

        first = runner.run_instance(instance).to_row(include_wall_clock=False)
        second = runner.run_instance(instance).to_row(include_wall_clock=False)

        assert first == second


class TestRecordArithmetic:

    def test_seconds_and_throughput_consistent(self):
        factory = _factory(16, 16)
        clock_hz = factory.coproc_config.clock_hz
        records = BenchRunner(factory, workers=2).run(
            random_instances(14, 60, seed=0, count=8))

        assert len(records) == 8
        for record in records:
            cycles = record.coproc_model_cycles
            assert record.coproc_model_seconds * clock_hz == pytest.approx(cycles, rel=1e-12)
            if record.bcp_per_model_second is not None:
                assert record.bcp_per_model_second * record.coproc_model_seconds == \
                    pytest.approx(record.implications, rel=1e-12)


def _swaps_over_tiling(engine: CoprocConfig, base: Formula, tilings):
    swaps = []
    for copies in tilings:
        verdict = HostSolver(engine).solve(_tiled(base, copies))
        swaps.append(verdict.stats.partition_swaps)
    return swaps


def _model_throughput(engine: CoprocConfig, formulas):
    implications = cycles = 0
    for formula in formulas:
        stats = HostSolver(engine).solve(formula).stats
        implications += stats.implications
        cycles += stats.total_model_cycles
    return implications / (cycles / engine.clock_hz)


def _wall_throughput(runner: BenchRunner, num_vars: int, num_clauses: int, seeds: int):
    records = runner.run(random_instances(num_vars, num_clauses, seed=0, count=seeds))
    implications = sum(record.implications for record in records)
    return implications / sum(record.host_wall_seconds for record in records)


class TestScalingShape:
    """Swaps grow with clause count; throughput falls as variables outgrow the engine."""

    def test_single_partition_swap_fraction(self):
        engine = CoprocConfig(num_cps=48, max_local_vars=20)
        solver = HostSolver(engine)
        verdict = solver.solve(pigeonhole(4))

        rows = emit_breakdown(verdict.stats, solver.trace, engine.clock_hz)

        assert verdict.stats.partition_swaps == 1
        assert fraction_of(rows, 'partition_swapping') < 0.1

    def test_swaps_non_decreasing_in_clauses(self):
        engine = CoprocConfig(num_cps=8, max_local_vars=16)

        swaps = _swaps_over_tiling(engine, random_ksat(16, 8, seed=5), (1, 2, 10))

        assert swaps[0] == 1
        assert swaps == sorted(swaps)

    def test_throughput_falls_with_variables(self):
        engine = CoprocConfig(num_cps=16, max_local_vars=8)

        throughput = [
            _model_throughput(engine, [random_ksat(8 * f, 16, seed=s) for s in range(5)])
            for f in (1, 4)
        ]

        assert throughput[1] <= throughput[0]

    @pytest.mark.slow
    def test_full_clause_sweep(self):
        engine = CoprocConfig()

        swaps = _swaps_over_tiling(engine, random_ksat(63, 224, seed=5), (1, 2, 10, 100))

        assert swaps[0] == 1
        assert swaps == sorted(swaps)

    @pytest.mark.slow
    def test_full_variable_sweep(self):
        engine = CoprocConfig()

        throughput = [
            _model_throughput(engine, [random_ksat(63 * f, 224, seed=s) for s in range(2)])
            for f in (1, 4)
        ]

        assert throughput[1] <= throughput[0]

    @pytest.mark.slow
    def test_measured_throughput_falls_with_variables(self):
        runner = BenchRunner(_factory(224, 63), mode='coproc')

        throughput = [_wall_throughput(runner, 63 * f, 224, seeds=2) for f in (1, 2, 4)]

        assert throughput[1] < throughput[0]
        # 2x and 4x sit close together; allow for timer jitter between them
        assert throughput[2] <= throughput[1] * 1.25
        assert throughput[2] < throughput[0]


class TestModeledSpeed:

    @pytest.mark.slow
    def test_modeled_bcp_beats_software_scan(self):
        engine = CoprocConfig(num_cps=1024, max_local_vars=63)
        formula = random_ksat(63, 1000, seed=11)
        solver = HostSolver(engine)

        host = solver.solve(formula)
        reference = solve_reference(formula)

        assert len(solver.plan) == 1
        assert host.status is reference.status
        assert host.stats.bcp_model_cycles / engine.clock_hz <= reference.stats.wall_time

    def test_record_speedup_present(self, worked_formula):
        runner = BenchRunner(_factory(224, 63), mode='both')

        record = runner.run_instance(BenchInstance('worked', worked_formula))

        assert record.swaps == 1
        assert record.speedup_vs_reference is not None
        assert isinstance(record, BenchRecord)
