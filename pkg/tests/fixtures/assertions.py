"""Custom assertion helpers for validating solver results."""

from src.cnf.formula import Formula, FormulaValue, evaluate
from src.partitioning.partition import PartitionConfig, PartitionPlan
from src.partitioning.partitioner import validate_plan
from src.solver.solver_base import SolveStatus, Verdict


def assert_model_satisfies(formula: Formula, verdict: Verdict) -> None:
    """Validate that a SAT verdict carries a complete satisfying model.

    Raises:
        AssertionError: If the verdict is not SAT or the model is wrong
    """
    assert verdict.status is SolveStatus.SAT, \
        f"Expected SAT, got {verdict.status.value}"
    assert verdict.model is not None, "SAT verdict has no model"
    assert verdict.model.first_unassigned() is None, \
        f"Model leaves variable {verdict.model.first_unassigned()} unassigned"
    assert evaluate(formula, verdict.model) is FormulaValue.SATISFIED, \
        f"Model {verdict.model} does not satisfy the formula"


def assert_plan_valid(plan: PartitionPlan, formula: Formula, config: PartitionConfig) -> None:
    violations = validate_plan(plan, formula, config)
    assert not violations, \
        "Plan violations: " + '; '.join(f"[{v.kind}] {v.reason}" for v in violations)


def assert_same_verdicts(*verdicts: Verdict) -> None:
    statuses = [v.status for v in verdicts]
    assert len(set(statuses)) == 1, \
        f"Solvers disagree: {[s.value for s in statuses]}"
