"""
bcpsim - Main Entry Point

DPLL SAT solving with Boolean constraint propagation offloaded to a
cycle-accounted model of a clause-parallel coprocessor.
"""
import sys
import os

# Add the current directory to Python path so we can import src modules
current_dir = os.path.dirname(os.path.abspath(__file__))
if current_dir not in sys.path:
    sys.path.insert(0, current_dir)

from src.bench.cli import main


if __name__ == '__main__':
    sys.exit(main())
