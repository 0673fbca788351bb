"""
Tests for the YAML config loader, budgets, run configuration and logging setup.

    python -m pytest tests/test_settings.py -v
"""
import logging
import os
import tempfile
import unittest
from pathlib import Path

from pydantic import ValidationError

from dnacc.cli import RunConfig, build_parser
from dnacc.core import settings
from dnacc.core.constants import BUDGET_ENV_VAR, DEFAULT_BUDGETS
from dnacc.core.errors import ParseError
from dnacc.core.logging import setup_logging
from dnacc.core.settings import Budgets, ConfigLoader, resolve_cap


class TestConfigLoader(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)
        os.environ.pop(BUDGET_ENV_VAR, None)

    def tearDown(self):
        os.environ.pop(BUDGET_ENV_VAR, None)
        os.environ.pop("DNACC_TEST_CAP", None)
        settings._config_loader = None
        self._tmp.cleanup()

    def loader(self, text):
        path = self.tmp / "config.yaml"
        path.write_text(text)
        return ConfigLoader(path)

    def test_missing_file_gives_defaults(self):
        loader = ConfigLoader(self.tmp / "absent.yaml")
        self.assertEqual(loader.config, {})
        self.assertEqual(loader.budgets(), Budgets())
        self.assertEqual(loader.budgets().search_vertices, DEFAULT_BUDGETS["search_vertices"])

    def test_dot_notation(self):
        loader = self.loader("logging:\n  level: DEBUG\n")
        self.assertEqual(loader.get("logging.level"), "DEBUG")
        self.assertEqual(loader.get("logging.missing", "x"), "x")
        self.assertEqual(loader.get("logging.level.deeper", 3), 3)

    def test_environment_substitution(self):
        os.environ["DNACC_TEST_CAP"] = "77"
        loader = self.loader("budgets:\n  ball_candidates: ${DNACC_TEST_CAP}\n  search_vertices: ${DNACC_UNSET_CAP:-12}\n")
        budgets = loader.budgets()
        self.assertEqual(budgets.ball_candidates, 77)
        self.assertEqual(budgets.search_vertices, 12)

    def test_budget_environment_override(self):
        os.environ[BUDGET_ENV_VAR] = "5"
        budgets = self.loader("budgets:\n  search_vertices: 100\n  greedy_trials: 9\n").budgets()
        self.assertEqual((budgets.ball_candidates, budgets.channel_outputs, budgets.search_vertices), (5, 5, 5))
        self.assertEqual(budgets.greedy_trials, 9)

    def test_bad_values_are_parse_errors(self):
        with self.assertRaises(ParseError):
            self.loader("budgets: [unclosed\n").load()
        with self.assertRaises(ParseError):
            self.loader("budgets:\n  search_vertices: 0\n").budgets()
        os.environ[BUDGET_ENV_VAR] = "lots"
        with self.assertRaises(ParseError):
            self.loader("{}\n").budgets()

    def test_resolve_cap(self):
        settings._config_loader = ConfigLoader(self.tmp / "absent.yaml")
        self.assertEqual(resolve_cap(3, "search_vertices"), 3)
        self.assertEqual(resolve_cap(None, "search_vertices"), DEFAULT_BUDGETS["search_vertices"])


class TestRunConfig(unittest.TestCase):

    def test_randomized_commands_need_a_seed(self):
        with self.assertRaises(ValidationError):
            RunConfig(command="simulate")
        with self.assertRaises(ValidationError):
            RunConfig(command="construct", options={"method": "search-greedy"})
        self.assertEqual(RunConfig(command="simulate", seed=0).seed, 0)
        self.assertIsNone(RunConfig(command="construct", options={"method": "coset"}).seed)

    def test_seed_range(self):
        with self.assertRaises(ValidationError):
            RunConfig(command="simulate", seed=2 ** 64)
        with self.assertRaises(ValidationError):
            RunConfig(command="simulate", seed=-1)

    def test_opt_defaults(self):
        run = RunConfig(command="bounds", options={"M": 4, "d": None})
        self.assertEqual(run.opt("M"), 4)
        self.assertEqual(run.opt("d", 2), 2)

    def test_parser_places_global_flags_first(self):
        args = build_parser().parse_args(["--seed", "5", "--format", "csv", "bounds", "--sweep", "2"])
        self.assertEqual((args.seed, args.format, args.command, args.sweep), (5, "csv", "bounds", 2))


class TestLogging(unittest.TestCase):

    def test_level_override(self):
        logger = setup_logging(None, "debug")
        self.assertEqual(logger.name, "dnacc")
        self.assertEqual(logger.level, logging.DEBUG)
        setup_logging(None, "INFO")


if __name__ == "__main__":
    unittest.main()
