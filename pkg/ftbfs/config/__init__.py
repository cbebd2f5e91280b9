"""Configuration management for ftbfs."""

from .loader import DEFAULT_CONFIG_PATH, Config, load_config, save_config
from .models import (
    ConfigModel,
    ExperimentDefaults,
    GeneratorDefaults,
    OracleConfig,
    ParallelConfig,
)

__all__ = [
    "Config",
    "ConfigModel",
    "DEFAULT_CONFIG_PATH",
    "ExperimentDefaults",
    "GeneratorDefaults",
    "OracleConfig",
    "ParallelConfig",
    "load_config",
    "save_config",
]
