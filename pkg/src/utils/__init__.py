"""Utility modules for the BCP coprocessor simulator."""

from src.utils.config import Config
from src.utils.logger import setup_logger

__all__ = ['Config', 'setup_logger']
