"""Configuration management utilities.

Process-wide defaults are read from ``GA_*`` environment variables, optionally
loaded from a ``.env`` file. Per-run parameters live in run configuration
documents (see ``genalgo.core.data_models``), not here.
"""

import os
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _env_number(name: str, default: str, kind: type) -> Any:
    raw = os.getenv(name, default)
    try:
        return kind(raw)
    except ValueError:
        raise ValueError(f"{name}={raw!r} is not a valid {kind.__name__}.")


class ConfigurationManager:
    """Manages application configuration settings.

    Attributes:
        config (Dict[str, Any]): Dictionary containing configuration settings.
    """

    def __init__(self) -> None:
        """Initialize the configuration manager and load settings."""
        load_dotenv()

        self.config: dict[str, Any] = {
            # Output and diagnostics
            "out_dir": Path(os.getenv("GA_OUT_DIR", "runs")),
            "log_level": os.getenv("GA_LOG_LEVEL", "INFO").upper(),
            "max_workers": _env_number("GA_MAX_WORKERS", "4", int),
            # String demo defaults
            "seed": _env_number("GA_SEED", "1", int),
            "string_population": _env_number("GA_STRING_POPULATION", "200", int),
            "string_crossover_rate": _env_number("GA_STRING_CROSSOVER_RATE", "0.9", float),
            "string_mutation_rate": _env_number("GA_STRING_MUTATION_RATE", "0.8", float),
            "string_elitism": _env_number("GA_STRING_ELITISM", "2", int),
            "string_max_generations": _env_number("GA_STRING_MAX_GENERATIONS", "2000", int),
            # Default paths
            "templates_dir": Path(__file__).parent.parent / "templates",
        }

        self._validate_config()

    def _validate_config(self) -> None:
        """Validate configuration settings.

        Raises:
            ValueError: If a setting is outside its allowed range.
        """
        if self.config["log_level"] not in LOG_LEVELS:
            raise ValueError(
                f"GA_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, "
                f"got {self.config['log_level']!r}."
            )
        if self.config["max_workers"] < 1:
            raise ValueError("GA_MAX_WORKERS must be at least 1.")

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value.

        Args:
            key: The configuration key to retrieve.
            default: Default value to return if the key doesn't exist.

        Returns:
            The configuration value or the default if not found.
        """
        return self.config.get(key, default)

    def set(self, key: str, value: Any) -> None:
        self.config[key] = value

    def update(self, new_config: dict[str, Any]) -> None:
        self.config.update(new_config)


# Create a singleton instance for global access
config_manager = ConfigurationManager()
