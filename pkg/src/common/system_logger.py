"""
System Logging for the block-IP toolkit
One logger per component (graver engines, solver, structure pipeline, CLI)
with optional daily files and a JSON context suffix
"""

import json
import logging
import logging.handlers
import sys
import time
from datetime import date
from functools import wraps
from pathlib import Path
from typing import Any, Dict, Optional

from .enums import LogComponent
from ..config.settings import config_manager

# package of the calling module -> component its calls are reported under
MODULE_COMPONENTS = {
    "graver": LogComponent.GRAVER,
    "solver": LogComponent.SOLVER,
    "structure": LogComponent.STRUCTURE,
    "merging": LogComponent.STRUCTURE,
    "steinitz": LogComponent.STRUCTURE,
    "cli": LogComponent.CLI,
}

SLOW_CALL_SECONDS = 1.0
SLOW_ENGINE_SECONDS = 30.0
SLOW_DECOMPOSITION_SECONDS = 10.0


def component_for_module(module_name: str) -> LogComponent:
    """src.graver.enumeration -> GRAVER; unknown packages report under APP"""
    parts = module_name.split(".")
    for part in parts[1:] if parts[0] == "src" else parts:
        if part in MODULE_COMPONENTS:
            return MODULE_COMPONENTS[part]
    return LogComponent.APP


class SystemLogger:
    """Component loggers writing to stderr and, when log_dir is set, to rotating files"""

    def __init__(
        self,
        log_dir: Optional[str] = None,
        app_name: str = "blockip",
        log_level: str = "INFO",
        max_file_size: int = 10 * 1024 * 1024,
        backup_count: int = 30,
    ):
        """
        Args:
            log_dir: Directory for the per-component files; None logs to stderr only
            app_name: Prefix of every logger name
            log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL
            max_file_size: Bytes per file before rotation
            backup_count: Rotated files kept per component
        """
        self.log_dir = Path(log_dir) if log_dir else None
        self.app_name = app_name
        self.log_level = self._parse_level(log_level)
        self.max_file_size = max_file_size
        self.backup_count = backup_count

        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)

        self.loggers: Dict[LogComponent, logging.Logger] = {
            component: self._create_logger(component) for component in LogComponent
        }
        self.debug(
            "System Logger initialized",
            {"log_dir": str(self.log_dir) if self.log_dir else None, "log_level": log_level},
        )

    @staticmethod
    def _parse_level(log_level: str) -> int:
        return getattr(logging, log_level.upper(), logging.INFO)

    @staticmethod
    def _console_level(level: int) -> int:
        # debug detail goes to files only
        return max(logging.INFO, level)

    def _create_logger(self, component: LogComponent) -> logging.Logger:
        logger = logging.getLogger(f"{self.app_name}.{component.value}")
        logger.setLevel(logging.ERROR if component == LogComponent.ERROR else self.log_level)
        logger.handlers.clear()

        if self.log_dir is not None:
            today = date.today().strftime("%Y-%m-%d")
            file_handler = logging.handlers.RotatingFileHandler(
                filename=self.log_dir / f"{component.value}_{today}.log",
                maxBytes=self.max_file_size,
                backupCount=self.backup_count,
                encoding="utf-8",
            )
            file_handler.setFormatter(
                logging.Formatter(
                    "%(asctime)s | %(name)s | %(levelname)s | %(funcName)s:%(lineno)d | %(message)s",
                    datefmt="%Y-%m-%d %H:%M:%S",
                )
            )
            file_handler.setLevel(logging.DEBUG)
            logger.addHandler(file_handler)

        # stdout carries command output
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(
            logging.Formatter("%(asctime)s | %(levelname)s | %(message)s", datefmt="%H:%M:%S")
        )
        console_handler.setLevel(self._console_level(self.log_level))
        logger.addHandler(console_handler)

        logger.propagate = False
        return logger

    def set_level(self, log_level: str):
        """Change the level of every component logger and its console handler"""
        self.log_level = self._parse_level(log_level)
        for component, logger in self.loggers.items():
            if component != LogComponent.ERROR:
                logger.setLevel(self.log_level)
            for handler in logger.handlers:
                if not isinstance(handler, logging.handlers.RotatingFileHandler):
                    handler.setLevel(self._console_level(self.log_level))

    def log(
        self,
        component: LogComponent,
        level: int,
        message: str,
        extra: Optional[Dict[str, Any]] = None,
    ):
        """Log to one component; errors are mirrored to the ERROR component"""
        if extra:
            message = f"{message} | Context: {json.dumps(extra, default=str)}"
        self.loggers[component].log(level, message)
        if level >= logging.ERROR and component != LogComponent.ERROR:
            self.loggers[LogComponent.ERROR].log(
                level, f"{component.value.upper()} Error: {message}"
            )

    def debug(self, message: str, extra: Optional[Dict[str, Any]] = None):
        self.log(LogComponent.APP, logging.DEBUG, message, extra)

    def solver_info(self, message: str, extra: Optional[Dict[str, Any]] = None):
        self.log(LogComponent.SOLVER, logging.INFO, message, extra)

    def cli_info(self, message: str, extra: Optional[Dict[str, Any]] = None):
        self.log(LogComponent.CLI, logging.INFO, message, extra)

    def cli_error(self, message: str, extra: Optional[Dict[str, Any]] = None):
        self.log(LogComponent.CLI, logging.ERROR, message, extra)

    def perf_info(self, message: str, extra: Optional[Dict[str, Any]] = None):
        self.log(LogComponent.PERFORMANCE, logging.INFO, message, extra)

    def log_engine_run(
        self,
        method: str,
        columns: int,
        elements: int,
        elapsed: float,
        extra: Optional[Dict[str, Any]] = None,
    ):
        """One Graver engine run: enumeration or completion"""
        info = {"method": method, "columns": columns, "elements": elements, "elapsed": elapsed}
        info.update(extra or {})
        self.log(LogComponent.GRAVER, logging.INFO, f"Graver {method}: {elements} elements", info)
        if elapsed > SLOW_ENGINE_SECONDS:
            self.perf_info(f"Slow Graver {method}: {elapsed:.3f}s", info)

    def log_augmentation(
        self,
        step: int,
        rho: int,
        objective: int,
        delta: int,
        extra: Optional[Dict[str, Any]] = None,
    ):
        """One accepted augmentation step x <- x + rho*g"""
        info = {"step": step, "rho": rho, "objective": objective, "delta": delta}
        info.update(extra or {})
        self.log(
            LogComponent.SOLVER,
            logging.DEBUG,
            f"Augmentation step {step}: rho={rho} delta={delta}",
            info,
        )

    def log_decomposition(
        self,
        operation: str,
        parts: int,
        xi: int,
        elapsed: float,
        extra: Optional[Dict[str, Any]] = None,
    ):
        info = {"operation": operation, "parts": parts, "xi": xi, "elapsed": elapsed}
        info.update(extra or {})
        self.log(
            LogComponent.STRUCTURE, logging.INFO, f"{operation}: {parts} parts at xi={xi}", info
        )
        if elapsed > SLOW_DECOMPOSITION_SECONDS:
            self.perf_info(f"Slow {operation}: {elapsed:.3f}s", info)


def log_function_calls(logger: "SystemLogger"):
    """Report each call of the wrapped operation under its package's component"""

    def decorator(func):
        component = component_for_module(func.__module__)

        @wraps(func)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            context = {"function": func.__name__, "module": func.__module__}
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                context["elapsed"] = time.perf_counter() - start
                context["error"] = f"{type(e).__name__}: {e}"
                logger.log(component, logging.WARNING, f"{func.__name__} failed", context)
                raise

            context["elapsed"] = time.perf_counter() - start
            context["result_type"] = type(result).__name__
            logger.log(component, logging.DEBUG, f"{func.__name__} completed", context)
            if context["elapsed"] > SLOW_CALL_SECONDS:
                logger.perf_info(f"Slow call: {func.__name__} took {context['elapsed']:.3f}s", context)
            return result

        return wrapper

    return decorator


# Global logger instance
system_logger = SystemLogger(
    log_dir=config_manager.config.logging.log_dir,
    log_level=config_manager.config.logging.log_level,
)