"""
Configuration management for the block-IP toolkit
Handles environment-based configuration of search budgets, solver knobs and logging
"""

import os
from enum import Enum
from dataclasses import dataclass, replace
from typing import Dict, Optional


class Environment(Enum):
    """Environment types"""

    TEST = "TEST"
    DEV = "DEV"
    PROD = "PROD"


@dataclass
class BudgetConfig:
    """Search budgets; every exhaustive routine stops with BudgetExceededError past these"""

    enumeration_node_budget: int = 10_000_000
    completion_element_budget: int = 100_000
    dp_state_budget: int = 2_000_000
    augmentation_step_budget: int = 10_000
    witness_node_budget: int = 1_000_000
    xi_escalation_cap: int = 64


@dataclass
class SolverConfig:
    """Solver configuration"""

    max_rho_exponent: int = 20
    threads: int = 1


@dataclass
class LoggingConfig:
    """Logging configuration"""

    log_dir: Optional[str] = None
    log_level: str = "INFO"


@dataclass
class AppConfig:
    """Application configuration"""

    environment: Environment
    budgets: BudgetConfig
    solver: SolverConfig
    logging: LoggingConfig


# dataclass field -> environment variable overriding it
BUDGET_OVERRIDES: Dict[str, str] = {
    "enumeration_node_budget": "BLOCKIP_ENUM_NODE_BUDGET",
    "completion_element_budget": "BLOCKIP_COMPLETION_ELEMENT_BUDGET",
    "dp_state_budget": "BLOCKIP_DP_STATE_BUDGET",
    "augmentation_step_budget": "BLOCKIP_AUGMENTATION_STEP_BUDGET",
    "witness_node_budget": "BLOCKIP_WITNESS_NODE_BUDGET",
    "xi_escalation_cap": "BLOCKIP_XI_CAP",
}
SOLVER_OVERRIDES: Dict[str, str] = {
    "max_rho_exponent": "BLOCKIP_MAX_RHO_EXPONENT",
    "threads": "BLOCKIP_THREADS",
}


def _env_int(name: str, default: int) -> int:
    """Read a positive integer override from the environment"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        print(f"Warning: Invalid integer for {name}='{raw}', using {default}")
        return default
    return value if value > 0 else default


def _with_overrides(section, overrides: Dict[str, str]):
    """Copy of a config section with each field read from its environment variable"""
    return replace(
        section,
        **{name: _env_int(var, getattr(section, name)) for name, var in overrides.items()},
    )


class ConfigManager:
    """Manages application configuration based on environment"""

    def __init__(self):
        self._config = self._load_config()

    def _load_config(self) -> AppConfig:
        """Load configuration based on environment variables"""
        env_str = os.getenv("ENVIRONMENT", "DEV").upper()

        try:
            environment = Environment(env_str)
        except ValueError:
            print(f"Warning: Invalid environment '{env_str}', defaulting to DEV")
            environment = Environment.DEV

        budgets = _with_overrides(BudgetConfig(), BUDGET_OVERRIDES)
        solver = _with_overrides(SolverConfig(), SOLVER_OVERRIDES)

        # Logging configuration based on environment
        if environment == Environment.TEST:
            logging_config = LoggingConfig(log_dir=None, log_level="DEBUG")

        elif environment == Environment.DEV:
            logging_config = LoggingConfig(
                log_dir=os.getenv("BLOCKIP_LOG_DIR", "logs"),
                log_level=os.getenv("LOG_LEVEL", "INFO"),
            )

        else:  # PROD
            logging_config = LoggingConfig(
                log_dir=os.getenv("BLOCKIP_LOG_DIR", "/var/log/blockip"),
                log_level=os.getenv("LOG_LEVEL", "WARNING"),
            )

        return AppConfig(
            environment=environment,
            budgets=budgets,
            solver=solver,
            logging=logging_config,
        )

    @property
    def config(self) -> AppConfig:
        """Get current configuration"""
        return self._config

    def is_test_environment(self) -> bool:
        """Check if running in test environment"""
        return self._config.environment == Environment.TEST


# Global configuration instance
config_manager = ConfigManager()
