#!/usr/bin/env python3
"""Test the extract module."""

import unittest
import os
import sys
import math
import tempfile

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
_EXPECTED = "{0}tests{0}claimcheck_{0}terms".format(os.sep)
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
from tests.testlib_ import setup, data

CONFIG = setup.config()
CONFIG.save()

from claimcheck.terms import TermCandidate, SOURCE_ABSTRACT, SOURCE_CLAIMS
from claimcheck.terms import extract


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

    def test_load_stopwords(self):
        """Testing function load_stopwords."""
        # Packaged
        result = extract.load_stopwords()
        self.assertIsInstance(result, frozenset)
        self.assertIn("the", result)
        self.assertIn("wherein", result)

        # Custom
        with tempfile.TemporaryDirectory() as directory:
            filepath = os.path.join(directory, "stopwords.txt")
            with open(filepath, "w", encoding="utf-8") as handle:
                handle.write("# Custom\nPencil\n")
            self.assertEqual(
                extract.load_stopwords(filepath), frozenset(["pencil"])
            )

    def test_extract_candidates(self):
        """Testing function extract_candidates."""
        # Test
        result = extract.extract_candidates(data.CLAIM_1)
        self.assertEqual(
            [(_.text, _.frequency, _.length_words) for _ in result],
            [
                ("lighted pencil", 1, 2),
                ("pencil shaft", 2, 2),
                ("light attached", 1, 2),
            ],
        )
        for item in result:
            self.assertEqual(item.score, 0.0)

    def test_extract_candidates_breaks(self):
        """Testing function extract_candidates run boundaries."""
        # Punctuation separates repeats
        result = extract.extract_candidates("pencil, pencil, pencil")
        self.assertEqual(
            result,
            [
                TermCandidate(
                    text="pencil", frequency=3, length_words=1, score=0.0
                )
            ],
        )

        # Stopwords, claim words and digits
        self.assertEqual(extract.extract_candidates("the of and"), [])
        result = extract.extract_candidates("Lamp of claims 1 to 3 Base")
        self.assertEqual([_.text for _ in result], ["lamp", "base"])

        # Hyphenated words stay whole
        result = extract.extract_candidates("a non-slip grip")
        self.assertEqual([_.text for _ in result], ["non-slip grip"])

        # Long runs are chunked
        result = extract.extract_candidates(
            "alpha beta gamma delta epsilon zeta eta theta"
        )
        self.assertEqual(
            [_.text for _ in result],
            ["alpha beta gamma delta epsilon zeta", "eta theta"],
        )
        result = extract.extract_candidates(
            "alpha beta gamma delta", max_words=2
        )
        self.assertEqual(
            [_.text for _ in result], ["alpha beta", "gamma delta"]
        )

    def test_score_candidates(self):
        """Testing function score_candidates."""
        # Initialize key variables
        candidates = [
            TermCandidate("pencil", 1, 1, 0.0),
            TermCandidate("pencil shaft", 1, 2, 0.0),
        ]

        # Test
        result = extract.score_candidates(candidates)
        self.assertEqual([_.text for _ in result], ["pencil shaft", "pencil"])
        self.assertAlmostEqual(result[0].score, 2 * math.log(2) + 0.1)
        self.assertAlmostEqual(result[1].score, math.log(2) + 0.75)

        # Weights
        result = extract.score_candidates(
            candidates, containment_weight=0, contained_weight=0
        )
        self.assertAlmostEqual(result[1].score, math.log(2))

        # Ties are broken by text
        result = extract.score_candidates(
            [
                TermCandidate("beta", 1, 1, 0.0),
                TermCandidate("alpha", 1, 1, 0.0),
            ]
        )
        self.assertEqual([_.text for _ in result], ["alpha", "beta"])
        self.assertEqual(extract.score_candidates([]), [])

    def test_unique_terms(self):
        """Testing function unique_terms."""
        # Test
        result = extract.unique_terms(data.CLAIMS)
        self.assertEqual(result.source, SOURCE_CLAIMS)
        self.assertEqual(
            result.terms,
            frozenset(
                [
                    "lighted pencil",
                    "pencil shaft",
                    "light attached",
                    "light",
                    "removably attached",
                ]
            ),
        )
        for term in result.terms:
            self.assertIn(term, data.CLAIMS.casefold())

        # Doubling the text keeps the terms
        doubled = extract.unique_terms(
            "{}\n{}".format(data.CLAIMS, data.CLAIMS)
        )
        self.assertEqual(doubled.terms, result.terms)

        # Best terms only
        result = extract.unique_terms(
            data.CLAIMS, top_k=1, source=SOURCE_ABSTRACT
        )
        self.assertEqual(result.terms, frozenset(["pencil shaft"]))
        self.assertEqual(result.source, SOURCE_ABSTRACT)
        self.assertEqual(extract.unique_terms("").terms, frozenset())


if __name__ == "__main__":
    # Do the unit test
    unittest.main()
