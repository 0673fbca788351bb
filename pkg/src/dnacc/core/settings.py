import os
import re
import logging
from pathlib import Path
from typing import Any, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .constants import BUDGET_ENV_VAR, DEFAULT_BUDGETS, DEFAULT_CONFIG_PATH
from .errors import ParseError

logger = logging.getLogger(__name__)

_ENV_PATTERN = re.compile(r'\$\{([^}:]+)(?::-([^}]*))?\}')


class Budgets(BaseModel):
    """Enumeration and search caps. Exceeding one is an error, never a silent truncation."""
    ball_candidates: int = Field(DEFAULT_BUDGETS["ball_candidates"], ge=1)
    channel_outputs: int = Field(DEFAULT_BUDGETS["channel_outputs"], ge=1)
    search_vertices: int = Field(DEFAULT_BUDGETS["search_vertices"], ge=1)
    permanent_dimension: int = Field(DEFAULT_BUDGETS["permanent_dimension"], ge=1)
    greedy_trials: int = Field(DEFAULT_BUDGETS["greedy_trials"], ge=1)
    construction_rows: int = Field(DEFAULT_BUDGETS["construction_rows"], ge=1)
    precision_digits: int = Field(DEFAULT_BUDGETS["precision_digits"], ge=15)


class ConfigLoader:
    """Load and manage application configuration"""

    def __init__(self, config_path=DEFAULT_CONFIG_PATH):
        self.config_path = Path(config_path)
        self._config = None
        load_dotenv()  # Load .env file

    def load(self):
        """Load configuration from YAML file with environment variable substitution"""
        if not self.config_path.exists():
            logger.debug(f"Config file not found: {self.config_path}; using built-in defaults")
            self._config = {}
            return self._config
        try:
            with open(self.config_path, 'r') as f:
                config_str = f.read()

            config_str = self._substitute_env_vars(config_str)

            self._config = yaml.safe_load(config_str) or {}
            logger.debug(f"Configuration loaded from {self.config_path}")
            return self._config

        except yaml.YAMLError as e:
            logger.error(f"Invalid YAML in config file: {e}")
            raise ParseError(f"invalid YAML in {self.config_path}: {e}") from e

    def _substitute_env_vars(self, config_str):
        """Replace ${VAR} / ${VAR:-default} with environment variable values"""

        def replacer(match):
            var_name, default = match.group(1), match.group(2)
            value = os.getenv(var_name)
            if value is not None:
                return value
            return default if default is not None else match.group(0)

        return _ENV_PATTERN.sub(replacer, config_str)

    def get(self, key_path, default=None):
        """Get config value using dot notation (e.g., 'budgets.ball_candidates')"""
        if self._config is None:
            self.load()

        value: Any = self._config
        for key in key_path.split('.'):
            if isinstance(value, dict):
                value = value.get(key)
            else:
                return default

        return value if value is not None else default

    @property
    def config(self):
        """Get full configuration dictionary"""
        if self._config is None:
            self.load()
        return self._config

    def budgets(self) -> Budgets:
        """Budgets from the `budgets` section, with DNACC_BUDGET overriding the enumeration caps."""
        values = dict(self.get('budgets', {}) or {})
        override = os.getenv(BUDGET_ENV_VAR)
        if override:
            try:
                cap = int(override)
            except ValueError as e:
                raise ParseError(f"{BUDGET_ENV_VAR} must be an integer, got {override!r}") from e
            for key in ("ball_candidates", "channel_outputs", "search_vertices"):
                values[key] = cap
        try:
            return Budgets(**values)
        except ValidationError as e:
            raise ParseError(f"invalid budgets in {self.config_path}: {e}") from e


# Singleton instance
_config_loader: Optional[ConfigLoader] = None


def get_config() -> ConfigLoader:
    """Get global config loader instance"""
    global _config_loader
    if _config_loader is None:
        _config_loader = ConfigLoader()
    return _config_loader


def configure(config_path) -> ConfigLoader:
    """Replace the global config loader (CLI --config)."""
    global _config_loader
    _config_loader = ConfigLoader(config_path)
    return _config_loader


def get_budgets() -> Budgets:
    return get_config().budgets()


def resolve_cap(cap: Optional[int], name: str) -> int:
    """Explicit cap wins; otherwise the configured budget named `name`."""
    if cap is not None:
        return cap
    return getattr(get_budgets(), name)
