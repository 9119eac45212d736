"""
Bench package for the BCP coprocessor simulator.

Instance generators, bench records and CSV output, execution-time
breakdown, the benchmark runner and the command-line front end.
"""

from src.bench.generators import pigeonhole, random_ksat
from src.bench.records import BenchCsvWriter, BenchRecord
from src.bench.breakdown import BreakdownRow, emit_breakdown, format_breakdown
from src.bench.runner import BenchInstance, BenchRunner

__all__ = [
    'pigeonhole',
    'random_ksat',
    'BenchCsvWriter',
    'BenchRecord',
    'BreakdownRow',
    'emit_breakdown',
    'format_breakdown',
    'BenchInstance',
    'BenchRunner',
]
