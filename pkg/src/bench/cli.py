"""
Command-line front end.

Subcommands:
    solve      solve one DIMACS file (SAT-competition output and exit codes)
    partition  dump the partition plan of a DIMACS file
    bench      run a corpus or generated instances and write a CSV
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from src.bench.breakdown import emit_breakdown, format_breakdown
from src.bench.records import BenchCsvWriter, BenchRecord
from src.bench.runner import (
    BENCH_MODES,
    BenchRunner,
    corpus_instances,
    pigeonhole_instance,
    random_instances,
    sweep_instances,
)
from src.cnf.dimacs import read_dimacs_file
from src.partitioning.partition import PartitionConfig, format_plan
from src.partitioning.partitioner import partition
from src.services.solver_factory import SolverFactory
from src.solver.solver_base import Verdict, VerdictMismatchError
from src.utils.config import Config
from src.utils.logger import setup_logger

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_ERROR = 1

logger = logging.getLogger(__name__)


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='bcpsim',
        description='DPLL host with a simulated BCP coprocessor',
    )
    parser.add_argument('--config', help='JSON settings file')
    parser.add_argument('--verbose', action='store_true', help='DEBUG output on the console')
    parser.add_argument('--log-dir', help='Also write a rotating log file into this directory')
    subparsers = parser.add_subparsers(dest='command', required=True)

    solve = subparsers.add_parser('solve', help='Solve a DIMACS CNF file')
    solve.add_argument('file')
    solve.add_argument('--mode', choices=('coproc', 'reference', 'both'), default='coproc')
    solve.add_argument('--cps', type=int, help='Number of clause processors')
    solve.add_argument('--vars', type=int, help='Local variable capacity of the coprocessor')
    solve.add_argument('--cycles-per-iter', type=int, help='Modeled cycles per BCP iteration')
    solve.add_argument('--host-txn-cycles', type=int,
                       help='Modeled cycles per host register access')
    solve.add_argument('--stats', metavar='CSV', help='Append a bench record to this CSV')
    solve.add_argument('--trace', action='store_true', help='Print the execution-time breakdown')

    part = subparsers.add_parser('partition', help='Print the partition plan of a DIMACS file')
    part.add_argument('file')
    part.add_argument('-C', dest='max_clauses', type=int, required=True,
                      help='Clauses per partition')
    part.add_argument('-V', dest='max_vars', type=int, required=True,
                      help='Distinct variables per partition')

    bench = subparsers.add_parser('bench', help='Benchmark a corpus or generated instances')
    bench.add_argument('paths', nargs='*', help='DIMACS files or directories')
    bench.add_argument('--gen-random', action='store_true', help='Generate random k-SAT')
    bench.add_argument('--vars', type=int, help='Variables per generated instance')
    bench.add_argument('--clauses', type=int, help='Clauses per generated instance')
    bench.add_argument('--seed', type=int, default=0)
    bench.add_argument('--k', type=int, help='Literals per random clause')
    bench.add_argument('--count', type=int, default=1, help='Random instances per grid point')
    bench.add_argument('--gen-pigeonhole', type=int, metavar='H',
                       help='Add the pigeonhole instance with H holes')
    bench.add_argument('--sweep-clauses', type=_int_list, help='e.g. 224,448,2240')
    bench.add_argument('--sweep-vars', type=_int_list, help='e.g. 63,126,252')
    bench.add_argument('--cps', type=int, help='Number of clause processors')
    bench.add_argument('--local-vars', type=int, help='Local variable capacity')
    bench.add_argument('--mode', choices=BENCH_MODES, default='both')
    bench.add_argument('--workers', type=int, help='Parallel instances')
    bench.add_argument('--csv', required=True, help='Output CSV')
    return parser


def _print_verdict(verdict: Verdict) -> None:
    if verdict.is_sat:
        print('s SATISFIABLE')
        print('v ' + ' '.join(str(lit) for lit in verdict.model.to_literals() + [0]))
    else:
        print('s UNSATISFIABLE')


def cmd_solve(args: argparse.Namespace, config: Config) -> int:
    """Solve one file; returns 10 (SAT) or 20 (UNSAT)."""
    config.set('coproc.num_cps', args.cps)
    config.set('coproc.max_local_vars', args.vars)
    config.set('coproc.cycles_per_bcp_iteration', args.cycles_per_iter)
    config.set('coproc.host_transaction_cycles', args.host_txn_cycles)
    if args.cps is not None:
        config.set('partition.max_clauses', args.cps)
    if args.vars is not None:
        config.set('partition.max_vars', args.vars)

    formula = read_dimacs_file(args.file)
    factory = SolverFactory(config)
    host_solver = None
    host = reference = None
    if args.mode in ('coproc', 'both'):
        host_solver = factory.create_host_solver()
        host = host_solver.solve(formula)
    if args.mode in ('reference', 'both'):
        reference = factory.create_reference_solver().solve(formula)
    if host is not None and reference is not None and host.status is not reference.status:
        raise VerdictMismatchError(
            f"{args.file}: coprocessor path says {host.status.value}, "
            f"reference says {reference.status.value}"
        )

    verdict = host or reference
    _print_verdict(verdict)

    clock_hz = factory.coproc_config.clock_hz
    if args.trace:
        if host_solver is None:
            raise ValueError("--trace needs the coprocessor path (--mode coproc or both)")
        rows = emit_breakdown(host.stats, host_solver.trace, clock_hz)
        for line in format_breakdown(rows).splitlines():
            print(f"c {line}")
    if args.stats:
        record = BenchRecord.build(
            os.path.basename(args.file), formula, clock_hz, host=host,
            partitions=len(host_solver.plan) if host_solver else None, reference=reference,
        )
        with BenchCsvWriter(args.stats, append=True) as writer:
            writer.write(record)
    return EXIT_SAT if verdict.is_sat else EXIT_UNSAT


def cmd_partition(args: argparse.Namespace, config: Config) -> int:
    """Print the plan dump plus a summary."""
    formula = read_dimacs_file(args.file)
    plan = partition(formula, PartitionConfig(args.max_clauses, args.max_vars))
    dump = format_plan(plan)
    if dump:
        print(dump)
    print(f"partitions: {len(plan)}")
    print(f"max vars/partition: {plan.max_vars_per_partition()}")
    print(f"shared variables: {len(plan.shared_variables())}")
    return 0


def cmd_bench(args: argparse.Namespace, config: Config) -> int:
    """Collect instances, run them and write one CSV row each."""
    config.set('coproc.num_cps', args.cps)
    config.set('coproc.max_local_vars', args.local_vars)
    if args.cps is not None:
        config.set('partition.max_clauses', args.cps)
    if args.local_vars is not None:
        config.set('partition.max_vars', args.local_vars)
    config.set('bench.workers', args.workers)
    config.set('bench.k', args.k)
    k = config.get_int('bench.k', 3)

    instances = corpus_instances(args.paths)
    if args.sweep_clauses or args.sweep_vars:
        vars_list = args.sweep_vars or ([args.vars] if args.vars else None)
        clauses_list = args.sweep_clauses or ([args.clauses] if args.clauses else None)
        if not vars_list or not clauses_list:
            raise ValueError("Sweeps need --vars or --sweep-vars and --clauses or --sweep-clauses")
        instances.extend(sweep_instances(vars_list, clauses_list, k, args.seed, args.count))
    elif args.gen_random:
        if args.vars is None or args.clauses is None:
            raise ValueError("--gen-random needs --vars and --clauses")
        instances.extend(random_instances(args.vars, args.clauses, k, args.seed, args.count))
    if args.gen_pigeonhole is not None:
        instances.append(pigeonhole_instance(args.gen_pigeonhole))
    if not instances:
        raise ValueError("No instances to run: give paths or generator flags")

    runner = BenchRunner(SolverFactory(config), args.mode, config.get_int('bench.workers', 1))
    with BenchCsvWriter(args.csv) as writer:
        runner.run(instances, writer)
    return 0


COMMANDS = {
    'solve': cmd_solve,
    'partition': cmd_partition,
    'bench': cmd_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, configure logging and run a subcommand.

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    setup_logger(args.log_dir, console_level=logging.DEBUG if args.verbose else logging.INFO)

    try:
        config = Config(args.config)
        return COMMANDS[args.command](args, config)
    except VerdictMismatchError as e:
        logger.error(f"Verdict mismatch: {e}")
        return EXIT_ERROR
    except (ValueError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_ERROR
    except RuntimeError as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
