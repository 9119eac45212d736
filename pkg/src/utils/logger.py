"""Logging configuration for the BCP coprocessor simulator

Provides centralized logging setup with a console handler and, when a log
directory is given, a rotating file handler. The console handler writes to
stderr so solver result lines on stdout stay machine-readable.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logger(log_dir: Optional[str] = None, log_file: str = 'bcpsim.log',
                 level: int = logging.DEBUG, console_level: int = logging.INFO):
    """Configure application-wide logging.

    Sets up logging with up to two handlers:
    - Console handler (stderr): ``console_level`` and above
    - Rotating file handler: DEBUG and above (max 10MB per file, 30 backups),
      only when ``log_dir`` is given

    Args:
        log_dir: Directory for log files; None disables file logging
        log_file: Name of the log file (default: 'bcpsim.log')
        level: Root logger level (default: DEBUG)
        console_level: Console handler level (default: INFO)

    Returns:
        logging.Logger: Configured root logger
    """
    formatter = logging.Formatter(LOG_FORMAT)

    logger = logging.getLogger()
    logger.setLevel(level)

    # Remove existing handlers (makes function idempotent)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_dir is not None:
        os.makedirs(log_dir, exist_ok=True)
        log_path = os.path.join(log_dir, log_file)
        file_handler = RotatingFileHandler(
            log_path,
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=30
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
        logger.info(f"Logging initialized. Log file: {log_path}")

    return logger
