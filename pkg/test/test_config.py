"""
Test suite for environment-driven configuration and the system logger.
"""

import os
import sys
import unittest
from unittest import mock

project_root = os.path.join(os.path.dirname(__file__), "..")
sys.path.insert(0, project_root)

os.environ["ENVIRONMENT"] = "TEST"

import logging

from src.common import system_logger
from src.common.system_logger import component_for_module
from src.common.enums import LogComponent
from src.config.settings import ConfigManager, Environment


class TestConfigManager(unittest.TestCase):
    def test_test_environment_defaults(self):
        manager = ConfigManager()
        self.assertTrue(manager.is_test_environment())
        self.assertIsNone(manager.config.logging.log_dir)
        self.assertEqual(manager.config.budgets.xi_escalation_cap, 64)

    def test_budget_overrides(self):
        env = {
            "ENVIRONMENT": "TEST",
            "BLOCKIP_DP_STATE_BUDGET": "1234",
            "BLOCKIP_THREADS": "4",
            "BLOCKIP_XI_CAP": "not-a-number",
        }
        with mock.patch.dict(os.environ, env):
            config = ConfigManager().config
        self.assertEqual(config.budgets.dp_state_budget, 1234)
        self.assertEqual(config.solver.threads, 4)
        self.assertEqual(config.budgets.xi_escalation_cap, 64)

    def test_unknown_environment_falls_back_to_dev(self):
        with mock.patch.dict(os.environ, {"ENVIRONMENT": "STAGING"}):
            config = ConfigManager().config
        self.assertEqual(config.environment, Environment.DEV)


class TestSystemLogger(unittest.TestCase):
    def tearDown(self):
        system_logger.set_level("DEBUG")

    def test_set_level(self):
        system_logger.set_level("WARNING")
        self.assertEqual(system_logger.loggers[LogComponent.SOLVER].level, logging.WARNING)
        self.assertEqual(system_logger.loggers[LogComponent.ERROR].level, logging.ERROR)

    def test_component_for_module(self):
        self.assertEqual(component_for_module("src.graver.enumeration"), LogComponent.GRAVER)
        self.assertEqual(component_for_module("src.steinitz.collision"), LogComponent.STRUCTURE)
        self.assertEqual(component_for_module("src.instances.certify"), LogComponent.APP)


if __name__ == "__main__":
    unittest.main()
