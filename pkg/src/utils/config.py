"""Configuration management for the BCP coprocessor simulator

Provides a type-safe API over a JSON settings file plus in-memory overrides.
Keys are dotted (``coproc.num_cps``, ``partition.max_vars``, ...); nested
JSON objects in the file are flattened to the same dotted form. String
values holding JSON are deserialized automatically.
"""

import json
import logging
from typing import Any, Dict, Optional

from src.coprocessor.config import CoprocConfig
from src.partitioning.partition import PartitionConfig

DEFAULTS: Dict[str, Any] = {
    'coproc.num_cps': 224,
    'coproc.max_local_vars': 63,
    'coproc.clock_hz': 106_660_000,
    'coproc.cycles_per_bcp_iteration': 3,
    'coproc.cycles_per_load_word': 1,
    'coproc.host_transaction_cycles': 10,
    'bench.workers': 1,
    'bench.k': 3,
}


def _flatten(data: Dict[str, Any], prefix: str = '') -> Dict[str, Any]:
    flat = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        else:
            flat[name] = value
    return flat


class Config:
    """Configuration with file persistence and command-line overrides.

    Lookup order: overrides, then the settings file, then the caller's default.
    """

    def __init__(self, path: Optional[str] = None, values: Optional[Dict[str, Any]] = None):
        """Initialize configuration.

        Args:
            path: JSON settings file to load (optional)
            values: Initial in-memory values, dotted or nested

        Raises:
            OSError: Settings file cannot be read
            ValueError: Settings file is not a JSON object
        """
        self.path = path
        self.logger = logging.getLogger(__name__)
        self._file_values: Dict[str, Any] = {}
        self._overrides: Dict[str, Any] = {}
        if path is not None:
            self._file_values = self._load(path)
        if values:
            self._file_values.update(_flatten(values))

    def _load(self, path: str) -> Dict[str, Any]:
        with open(path, 'r', encoding='utf-8') as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as e:
                raise ValueError(f"Settings file {path} is not valid JSON: {e}") from e
        if not isinstance(data, dict):
            raise ValueError(f"Settings file {path} must contain a JSON object")
        self.logger.info(f"Loaded settings from {path}")
        return _flatten(data)

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value with optional default.

        Automatically deserializes JSON strings.

        Args:
            key: Dotted configuration key
            default: Default value if key not found

        Returns:
            Configuration value or default if not found
        """
        if key in self._overrides:
            value = self._overrides[key]
        elif key in self._file_values:
            value = self._file_values[key]
        else:
            return default
        if isinstance(value, str):
            try:
                return json.loads(value)
            except (json.JSONDecodeError, TypeError):
                return value
        return value

    def set(self, key: str, value: Any):
        """Override a value for this process (never written back to the file).

        None values are ignored so unset command-line flags leave the file value.
        """
        if value is None:
            return
        self._overrides[key] = value

    def get_bool(self, key: str, default: bool = False) -> bool:
        value = self.get(key, default)
        if isinstance(value, bool):
            return value
        # Handle string representations of booleans
        return str(value).lower() in ('true', '1', 'yes')

    def get_int(self, key: str, default: int = 0) -> int:
        """Get integer configuration value.

        Args:
            key: Configuration key
            default: Default value if key not found or not an integer

        Returns:
            Integer configuration value
        """
        try:
            return int(self.get(key, default))
        except (ValueError, TypeError):
            self.logger.error(f"Config '{key}' is not an integer, using {default}")
            return default

    def get_float(self, key: str, default: float = 0.0) -> float:
        try:
            return float(self.get(key, default))
        except (ValueError, TypeError):
            self.logger.error(f"Config '{key}' is not a number, using {default}")
            return default

    def get_str(self, key: str, default: str = "") -> str:
        return str(self.get(key, default))

    def coproc_config(self) -> CoprocConfig:
        """Build the coprocessor model configuration.

        Raises:
            ValueError: A value is out of range
        """
        return CoprocConfig(
            num_cps=self.get_int('coproc.num_cps', DEFAULTS['coproc.num_cps']),
            max_local_vars=self.get_int('coproc.max_local_vars',
                                        DEFAULTS['coproc.max_local_vars']),
            clock_hz=self.get_int('coproc.clock_hz', DEFAULTS['coproc.clock_hz']),
            cycles_per_bcp_iteration=self.get_int(
                'coproc.cycles_per_bcp_iteration', DEFAULTS['coproc.cycles_per_bcp_iteration']),
            cycles_per_load_word=self.get_int(
                'coproc.cycles_per_load_word', DEFAULTS['coproc.cycles_per_load_word']),
            host_transaction_cycles=self.get_int(
                'coproc.host_transaction_cycles', DEFAULTS['coproc.host_transaction_cycles']),
        )

    def partition_config(self) -> PartitionConfig:
        """Partition thresholds; default to the coprocessor capacity."""
        coproc = self.coproc_config()
        return PartitionConfig(
            max_clauses=self.get_int('partition.max_clauses', coproc.num_cps),
            max_vars=self.get_int('partition.max_vars', coproc.max_local_vars),
        )
