#!/usr/bin/env python3
"""Test the arguments module."""

import unittest
import os
import sys
import io
from contextlib import redirect_stderr

# Try to create a working PYTHONPATH
EXEC_DIR = os.path.dirname(os.path.realpath(__file__))
ROOT_DIR = os.path.abspath(
    os.path.join(
        os.path.abspath(
            os.path.join(
                os.path.abspath(os.path.join(EXEC_DIR, os.pardir)), os.pardir
            )
        ),
        os.pardir,
    )
)
_EXPECTED = "{0}tests{0}claimcheck_{0}cli".format(os.sep)
if EXEC_DIR.endswith(_EXPECTED) is True:
    # We need to prepend the path in case the repo has been installed
    # elsewhere on the system using PIP. This could corrupt expected results
    sys.path.insert(0, ROOT_DIR)
else:
    print(
        """This script is not installed in the "{0}" directory. Please fix.\
""".format(
            _EXPECTED
        )
    )
    sys.exit(2)


# Create the necessary configuration to load the module
from tests.testlib_ import setup

CONFIG = setup.config()
CONFIG.save()

from claimcheck.cli import arguments


class TestFunctions(unittest.TestCase):
    """Checks all functions and methods."""

    #########################################################################
    # General object setup
    #########################################################################

    # Required
    maxDiff = None

    @classmethod
    def setUpClass(cls):
        """Execute these steps before starting tests."""
        # Load the configuration in case it's been deleted after loading the
        # configuration above. Sometimes this happens when running
        # `python3 -m unittest discover` where another the tearDownClass of
        # another test module prematurely deletes the configuration required
        # for this module
        config = setup.config()
        config.save()

    @classmethod
    def tearDownClass(cls):
        """Execute these steps when all tests are completed."""
        # Cleanup the
        CONFIG.cleanup()

    def _rejects(self, argv):
        """Assert that argparse rejects arguments with status 2."""
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                arguments.parse(argv)
        self.assertEqual(context.exception.code, 2)

    def test_parse(self):
        """Testing function parse."""
        # Test
        args = arguments.parse(["parse", "claims.txt"])
        self.assertEqual(args.command, "parse")
        self.assertEqual(args.claims, "claims.txt")
        self.assertEqual(args.format, "json")
        self.assertIsNone(args.output)

    def test_lint_claim(self):
        """Testing the lint-claim command."""
        # Test
        args = arguments.parse(
            [
                "lint-claim",
                "--context",
                "context.txt",
                "--candidate",
                "candidate.txt",
                "--required",
                "dependent",
                "--strict",
                "--format",
                "tsv",
            ]
        )
        self.assertEqual(args.required, "dependent")
        self.assertTrue(args.strict)
        self.assertEqual(args.format, "tsv")
        self.assertIsNone(args.vagueness_lexicon)
        self._rejects(["lint-claim", "--context", "context.txt"])
        self._rejects(
            [
                "lint-claim",
                "--context",
                "context.txt",
                "--candidate",
                "candidate.txt",
                "--required",
                "sometimes",
            ]
        )

    def test_lint_abstract(self):
        """Testing the lint-abstract command."""
        # Test
        args = arguments.parse(
            ["lint-abstract", "--claims", "c.txt", "--abstract", "a.txt"]
        )
        self.assertIsNone(args.word_limit)
        self.assertFalse(args.strict)
        args = arguments.parse(
            [
                "lint-abstract",
                "--claims",
                "c.txt",
                "--abstract",
                "a.txt",
                "--word-limit",
                "200",
            ]
        )
        self.assertEqual(args.word_limit, 200)

    def test_score(self):
        """Testing the score command."""
        # Test
        args = arguments.parse(
            [
                "score",
                "--metric",
                "semsim",
                "--claims",
                "c.txt",
                "--candidate",
                "a.txt",
                "--embedder",
                "fallback",
            ]
        )
        self.assertEqual(args.metric, "semsim")
        self.assertEqual(args.format, "text")
        self.assertIsNone(args.required)
        self.assertIsNone(args.ngram_max)
        self._rejects(
            [
                "score",
                "--metric",
                "bleu",
                "--claims",
                "c.txt",
                "--candidate",
                "a.txt",
            ]
        )

    def test_terms(self):
        """Testing the terms command."""
        # Test
        args = arguments.parse(["terms", "text.txt", "--top-k", "5"])
        self.assertEqual(args.top_k, 5)
        self.assertEqual(args.format, "tsv")

    def test_evaluate(self):
        """Testing the evaluate command."""
        # Test
        args = arguments.parse(["evaluate", "--annotations", "p.jsonl"])
        self.assertIsNone(args.metric)
        self.assertIsNone(args.jobs)
        self.assertIsNone(args.epsilon)
        args = arguments.parse(
            [
                "evaluate",
                "--annotations",
                "p.jsonl",
                "--metric",
                "semsim",
                "--metric",
                "rule-checker",
                "--epsilon",
                "0.01",
                "--format",
                "md",
            ]
        )
        self.assertEqual(args.metric, ["semsim", "rule-checker"])
        self.assertEqual(args.epsilon, 0.01)
        self.assertEqual(args.format, "md")

    def test_other_commands(self):
        """Testing the generate, filter and summarize commands."""
        # Test
        args = arguments.parse(
            ["generate", "--claims", "c.txt", "--task", "next_claim"]
        )
        self.assertEqual(args.task, "next_claim")
        self.assertIsNone(args.url)
        args = arguments.parse(["filter", "records.jsonl"])
        self.assertEqual(args.format, "jsonl")
        args = arguments.parse(
            ["summarize", "--annotations", "p.jsonl", "--losses-only"]
        )
        self.assertTrue(args.losses_only)
        self.assertIsNone(args.model)

    def test_parse_errors(self):
        """Testing function parse with bad commands."""
        # Test
        self._rejects([])
        self._rejects(["bogus"])
        self._rejects(["parse", "claims.txt", "--format", "md"])


if __name__ == "__main__":
    # Do the unit test
    unittest.main()
