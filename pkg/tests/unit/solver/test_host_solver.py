"""Unit tests for the coprocessor-backed DPLL host."""

import pytest

from src.bench.generators import random_ksat
from src.cnf.formula import Assignment, Formula
from src.coprocessor.config import CoprocConfig
from src.partitioning.partition import PartitionConfig
from src.partitioning.partitioner import UnpartitionableClauseError
from src.reference.propagator import unit_propagate
from src.solver.host_solver import HostSolver
from src.solver.solver_base import SolveStatus
from tests.fixtures.assertions import assert_model_satisfies
from tests.fixtures.builders import FormulaBuilder
from tests.fixtures.cnf_samples import (
    CHAIN_CLAUSES,
    CONTRADICTION_CLAUSES,
    XOR_UNSAT_CLAUSES,
)


@pytest.fixture
def host(default_coproc_config):
    return HostSolver(default_coproc_config)


class TestConstruction:

    def test_partition_defaults_to_capacity(self, small_coproc_config):
        solver = HostSolver(small_coproc_config)

        assert solver.partition_config == PartitionConfig(8, 8)

    def test_too_many_clauses_per_partition(self, small_coproc_config):
        with pytest.raises(ValueError):
            HostSolver(small_coproc_config, PartitionConfig(9, 8))

    def test_too_many_vars_per_partition(self, small_coproc_config):
        with pytest.raises(ValueError):
            HostSolver(small_coproc_config, PartitionConfig(8, 9))


class TestSolve:
    """End-to-end searches on small formulas."""

    def test_worked_example_sat(self, host, worked_formula):
        verdict = host.solve(worked_formula)

        assert_model_satisfies(worked_formula, verdict)
        assert verdict.stats.partition_swaps == 1
        assert verdict.stats.conflicts == 0

    def test_worked_example_two_partitions(self, default_coproc_config, worked_formula,
                                           split_partition_config):
        solver = HostSolver(default_coproc_config, split_partition_config)

        verdict = solver.solve(worked_formula)

        assert_model_satisfies(worked_formula, verdict)
        assert len(solver.plan) == 2
        assert verdict.stats.partition_swaps == 2
        assert verdict.stats.decisions == 6

    def test_xor_unsat_backtracks(self, host):
        formula = Formula.from_clauses(XOR_UNSAT_CLAUSES)

        verdict = host.solve(formula)

        assert verdict.status is SolveStatus.UNSAT
        assert verdict.stats.backtracks >= 1
        assert verdict.stats.conflicts == 2

    def test_contradicting_units(self, host):
        verdict = host.solve(Formula.from_clauses(CONTRADICTION_CLAUSES))

        assert verdict.status is SolveStatus.UNSAT
        assert verdict.stats.decisions == 0

    def test_empty_clause_is_unsat(self, host):
        formula = FormulaBuilder().with_clause(1, 2).with_clause().build()

        assert host.solve(formula).status is SolveStatus.UNSAT

    def test_clause_free_formula_loads_once(self, host):
        verdict = host.solve(Formula(num_vars=3))

        assert verdict.status is SolveStatus.SAT
        assert verdict.stats.partition_swaps == 1

    def test_trivially_unsat_loads_once(self, host):
        formula = FormulaBuilder().with_clause(1, 2).with_clause().build()

        verdict = host.solve(formula)

        assert verdict.status is SolveStatus.UNSAT
        assert verdict.stats.partition_swaps == 1
        assert host.swap_counts == {0: 1}

    def test_input_units_propagate(self, host):
        formula = FormulaBuilder().with_clause(1).with_chain(1, 3).build()

        verdict = host.solve(formula)

        assert_model_satisfies(formula, verdict)
        assert verdict.stats.decisions == 0
        assert verdict.stats.implications == 4

    def test_pigeonhole_unsat(self, host, hole3_formula):
        verdict = host.solve(hole3_formula)

        assert verdict.status is SolveStatus.UNSAT

    def test_pigeonhole_partitioned(self, default_coproc_config, hole3_formula):
        solver = HostSolver(default_coproc_config, PartitionConfig(5, 6))

        verdict = solver.solve(hole3_formula)

        assert verdict.status is SolveStatus.UNSAT
        assert len(solver.plan) > 1
        assert verdict.stats.partition_swaps > len(solver.plan)

    def test_clause_too_wide(self, default_coproc_config):
        solver = HostSolver(default_coproc_config, PartitionConfig(4, 2))
        formula = Formula.from_clauses([[1, 2, 3]])

        with pytest.raises(UnpartitionableClauseError):
            solver.solve(formula)

    def test_cycle_stats(self, host, worked_formula):
        verdict = host.solve(worked_formula)

        assert verdict.stats.total_model_cycles == host.simulator.cycles
        assert verdict.stats.bcp_model_cycles == host.simulator.counter.by_kind['bcp']
        assert verdict.stats.bcp_model_cycles < verdict.stats.total_model_cycles
        assert verdict.stats.coproc_wall_time <= verdict.stats.wall_time

    def test_solver_is_reusable(self, host, worked_formula, hole3_formula):
        host.solve(hole3_formula)

        verdict = host.solve(worked_formula)

        assert_model_satisfies(worked_formula, verdict)
        assert verdict.stats.partition_swaps == 1


class TestCrossPartitionPropagation:
    """Implications relayed between partitions through the host."""

    @pytest.fixture
    def chain_solver(self, default_coproc_config):
        solver = HostSolver(default_coproc_config, PartitionConfig(1, 2))
        solver.prepare(Formula.from_clauses(CHAIN_CLAUSES))
        return solver

    def test_implication_crosses_partitions(self, chain_solver):
        chain_solver.trail.push_decision(-1)

        assert chain_solver.propagate_global(-1)

        assert chain_solver.trail.literals() == [-1, 2, 3]
        assert chain_solver.stats.partition_swaps == 2
        assert chain_solver.stats.implications == 2

    def test_only_owning_partition_is_loaded(self, default_coproc_config, worked_formula,
                                             split_partition_config):
        solver = HostSolver(default_coproc_config, split_partition_config)
        solver.prepare(worked_formula)
        solver.trail.push_decision(1)

        solver.propagate_global(1)

        assert solver.swap_counts == {0: 1}
        assert solver.resident == 0

    def test_conflict_clears_pending(self, default_coproc_config):
        solver = HostSolver(default_coproc_config, PartitionConfig(1, 2))
        solver.prepare(Formula.from_clauses([[-1, 2], [-2, -1]]))
        solver.trail.push_decision(1)

        assert solver.propagate_global(1) is False
        assert not solver.pending

    def test_swap_in_resident_is_free(self, chain_solver):
        chain_solver.trail.push_decision(-1)
        chain_solver.propagate_global(-1)

        assert chain_solver.swap_in(1) == 0
        assert chain_solver.swap_in(0) > 0
        assert chain_solver.swap_counts == {0: 2, 1: 1}

    def test_backtrack_marks_replay(self, chain_solver):
        chain_solver.trail.push_decision(-1)
        chain_solver.propagate_global(-1)

        resume = chain_solver.backtrack()

        assert resume == 1
        assert chain_solver.needs_replay
        assert len(chain_solver.trail) == 0
        assert chain_solver.simulator.counters.clears == 1

    def test_resume_reloads_owning_partition(self, chain_solver):
        chain_solver.trail.push_decision(-1)
        chain_solver.propagate_global(-1)
        resume = chain_solver.backtrack()
        chain_solver.trail.push_decision(resume, flipped=True)

        assert chain_solver.propagate_global(resume)

        assert chain_solver.stats.partition_swaps == 3
        assert chain_solver.trail.literals() == [1]

    def test_replay_after_backtrack_keeps_resident(self, host, worked_formula):
        host.prepare(worked_formula)
        host.trail.push_decision(1)
        host.propagate_global(1)
        resume = host.backtrack()
        host.trail.push_decision(resume, flipped=True)

        assert host.propagate_global(resume)

        assert host.stats.partition_swaps == 1
        assert not host.needs_replay
        assert host.trace.phases['bcp'].operations == 1


class TestPropagationClosure:
    """The partitioned fixpoint matches unit propagation over the whole formula."""

    @pytest.mark.parametrize('seed', range(40))
    def test_fixpoint_matches_whole_formula(self, default_coproc_config, seed):
        formula = random_ksat(10, 16, k=2 + seed % 2, seed=seed)
        config = PartitionConfig(max_clauses=1 + seed % 4, max_vars=3 + (seed // 4) % 4)
        solver = HostSolver(default_coproc_config, config)
        solver.prepare(formula)
        literal = (1 + seed % 10) * (1 if seed % 3 else -1)
        solver.trail.push_decision(literal)

        ok = solver.propagate_global(literal)

        expected = unit_propagate(formula.clauses, Assignment(10), seed=literal)
        assert ok is not expected.conflict
        if ok:
            assert set(solver.trail.literals()) == {literal} | expected.implication_set

    def test_swap_in_replays_each_trail_variable(self, default_coproc_config, worked_formula,
                                                 split_partition_config):
        solver = HostSolver(default_coproc_config, split_partition_config)
        solver.prepare(worked_formula)
        solver.trail.push_decision(1)
        solver.trail.push_decision(3)
        solver.trail.push_decision(4)

        solver.swap_in(0)

        # 1 and 3 live in partition 0, 4 does not
        assert solver.driver.decides == 2
        assert solver.resident == 0
