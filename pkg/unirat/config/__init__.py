"""
Centralized configuration for unirat.

Every tunable knob (worker count, sampling seed, truncation cap, output
directory) lives here and can be overridden from the environment or a
``.env`` file.
"""

import json
import os
from dataclasses import asdict, dataclass, field, fields, is_dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from ..utils.errors import UniratError

load_dotenv()

PACKAGE_DIR = Path(__file__).resolve().parent.parent

ENVIRONMENTS = ("development", "production", "testing")


class ConfigError(UniratError):
    pass


def _env_int(key: str, default: Optional[int]) -> Optional[int]:
    value = os.getenv(key)
    if value is None or value.strip() == "":
        return default
    return int(value)


@dataclass
class CountingConfig:
    """Point-counting settings."""

    jobs: int = 0
    default_bound: int = 100
    naive_check_limit: int = 7

    def __post_init__(self):
        """Load values from environment variables."""
        self.jobs = _env_int("UNIRAT_JOBS", self.jobs) or os.cpu_count() or 1
        self.default_bound = _env_int("UNIRAT_BOUND", self.default_bound)


@dataclass
class SamplingConfig:
    """Transversal-slice sampling for multiplicities along curves."""

    seed: int = 1729
    samples: int = 3
    max_attempts: int = 8
    coordinate_range: int = 9

    def __post_init__(self):
        """Load values from environment variables."""
        self.seed = _env_int("UNIRAT_SEED", self.seed)


@dataclass
class ModularConfig:
    """q-expansion and verdict settings."""

    truncation_cap: int = 2**20
    initial_truncation: int = 64
    sigma0_threshold: int = 10


@dataclass
class ReportingConfig:
    """Reporting configuration."""

    output_dir: str = "reports"
    template_dir: str = str(PACKAGE_DIR / "reporting" / "templates")

    def __post_init__(self):
        """Load values from environment variables."""
        self.output_dir = os.getenv("UNIRAT_OUTPUT_DIR", self.output_dir)


@dataclass
class Settings:
    """Main application settings."""

    environment: str = "development"
    debug: bool = False
    log_level: str = "WARNING"

    counting: CountingConfig = field(default_factory=CountingConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    modular: ModularConfig = field(default_factory=ModularConfig)
    reporting: ReportingConfig = field(default_factory=ReportingConfig)

    def __post_init__(self):
        """Load environment-specific settings."""
        self.environment = os.getenv("UNIRAT_ENV", self.environment)
        self.debug = os.getenv("UNIRAT_DEBUG", "false").lower() == "true"
        self.log_level = os.getenv("UNIRAT_LOG_LEVEL", self.log_level)

    @classmethod
    def from_file(cls, config_path: str) -> "Settings":
        """Load settings from a JSON configuration file."""
        try:
            with open(config_path, "r") as f:
                config_data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read configuration {config_path}: {e}") from e
        if not isinstance(config_data, dict):
            raise ConfigError(f"{config_path}: a configuration file is a JSON object")

        instance = cls()
        _apply(instance, config_data)
        return instance

    def to_dict(self) -> Dict[str, Any]:
        return {
            "environment": self.environment,
            "debug": self.debug,
            "log_level": self.log_level,
            "counting": asdict(self.counting),
            "sampling": asdict(self.sampling),
            "modular": asdict(self.modular),
            "reporting": {"output_dir": self.reporting.output_dir},
        }

    def to_file(self, config_path: str):
        """Save the effective settings to a JSON file."""
        with open(config_path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)
            f.write("\n")


def _apply(target: Any, values: Dict[str, Any]):
    """Set known attributes of ``target`` from ``values``, recursing into sub-configs."""
    known = {item.name for item in fields(target)}
    for key, value in values.items():
        if key not in known:
            raise ConfigError(f"unknown setting {key!r}")
        current = getattr(target, key)
        if is_dataclass(current):
            if not isinstance(value, dict):
                raise ConfigError(f"setting {key!r} expects an object")
            _apply(current, value)
        else:
            setattr(target, key, value)


# Global settings instance
settings = Settings()


def get_config_for_environment(env: str) -> Dict[str, Any]:
    """Get configuration overrides for specific environments."""
    configs = {
        "development": {
            "debug": True,
            "log_level": "DEBUG",
        },
        "production": {
            "debug": False,
            "log_level": "WARNING",
        },
        "testing": {
            "debug": True,
            "log_level": "DEBUG",
            "counting": {
                "jobs": 1,
            },
        },
    }
    return configs.get(env, {})


def configure_for_environment(env: str):
    """Configure the global settings for a specific environment."""
    settings.environment = env
    _apply(settings, get_config_for_environment(env))


def load_settings_file(config_path: str):
    """Replace the global settings with those of a configuration file."""
    loaded = Settings.from_file(config_path)
    for item in fields(Settings):
        setattr(settings, item.name, getattr(loaded, item.name))


__all__ = [
    "CountingConfig",
    "SamplingConfig",
    "ModularConfig",
    "ReportingConfig",
    "ConfigError",
    "ENVIRONMENTS",
    "Settings",
    "settings",
    "load_settings_file",
    "get_config_for_environment",
    "configure_for_environment",
]
