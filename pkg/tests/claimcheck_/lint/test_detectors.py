#!/usr/bin/env python3
"""Test the detectors module."""

import unittest
import os
import sys
import time
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
_EXPECTED = "{0}tests{0}claimcheck_{0}lint".format(os.sep)
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

from claimcheck import Span
from claimcheck.claims import ClaimKind
from claimcheck.claims import parser
from claimcheck.lint import ErrorType, Severity
from claimcheck.lint import detectors


def _errors(diagnostics):
    """Get the error types of diagnostics."""
    return [_.error for _ in diagnostics]


def _text(claim, diagnostic):
    """Get the text a diagnostic points to."""
    return claim.raw_text[diagnostic.span.start : diagnostic.span.end]


class TestRepetition(unittest.TestCase):
    """Checks the repetition loop detector."""

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

    def test_detect_repetition_loop(self):
        """Testing function detect_repetition_loop."""
        # Test
        result = detectors.detect_repetition_loop("a b c a b c a b c")
        self.assertEqual(result, Span(start=0, end=17))
        self.assertIsNone(detectors.detect_repetition_loop("a b a b a b"))
        self.assertIsNone(detectors.detect_repetition_loop("a b c a b c"))
        self.assertIsNone(detectors.detect_repetition_loop(""))

        # Settings
        result = detectors.detect_repetition_loop(
            "a b a b", min_length=2, min_repeats=2
        )
        self.assertEqual(result, Span(start=0, end=7))

    def test_detect_repetition_loop_long(self):
        """Testing function detect_repetition_loop on thousands of tokens."""
        # Initialize key variables
        words = data.abstract(5000)
        text = "{} {}".format(words, " ".join(["x y z"] * 3))

        # No repeats
        started = time.time()
        self.assertIsNone(detectors.detect_repetition_loop(words))
        self.assertLess(time.time() - started, 10)

        # Loop at the end
        result = detectors.detect_repetition_loop(text)
        self.assertEqual(text[result.start : result.end], "x y z x y z x y z")

    def test_detect_repetition_loop_hallucination(self):
        """Testing function detect_repetition_loop on a generated abstract."""
        # Test
        text = data.HALLUCINATED_ABSTRACT
        result = detectors.detect_repetition_loop(text)
        self.assertEqual(
            text[result.start : result.end],
            " ".join([data.REPEATED_PHRASE] * 4),
        )

    def test_check_repetition(self):
        """Testing function check_repetition."""
        # Test
        result = detectors.check_repetition(data.HALLUCINATED_ABSTRACT)
        self.assertEqual(_errors(result), [ErrorType.GRAMMATICAL_INACCURACY])
        self.assertEqual(result[0].detector, detectors.REPETITION_LOOP)
        result = detectors.check_repetition(
            data.HALLUCINATED_ABSTRACT, error=ErrorType.GRAMMATICAL_ERRORS
        )
        self.assertEqual(_errors(result), [ErrorType.GRAMMATICAL_ERRORS])
        self.assertEqual(detectors.check_repetition(data.CLAIMS), [])


class TestClaimDetectors(unittest.TestCase):
    """Checks the next-claim detectors."""

    #########################################################################
    # General object setup
    #########################################################################

    # Required
    maxDiff = None

    context = parser.segment_claims(data.CLAIMS)

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

    def test_check_punctuation(self):
        """Testing function check_punctuation."""
        # Well punctuated
        for raw in [data.CLAIM_1, data.CLAIM_2, data.DEPENDENT_CLAIM_3]:
            claim = parser.parse_claim(raw)
            self.assertEqual(detectors.check_punctuation(claim), [])
        claim = parser.parse_claim("1. A pen made of wood, e.g. Oak.")
        self.assertEqual(detectors.check_punctuation(claim), [])

        # No terminal period
        claim = parser.parse_claim("1. A device comprising a lever")
        result = detectors.check_punctuation(claim)
        self.assertEqual(
            _errors(result), [ErrorType.PUNCTUATION_DISCREPANCY]
        )

        # Two terminal periods
        claim = parser.parse_claim("1. A pen..")
        self.assertEqual(len(detectors.check_punctuation(claim)), 1)

        # Sentence break inside the claim
        claim = parser.parse_claim("1. A device. It also has a lever.")
        result = detectors.check_punctuation(claim)
        self.assertEqual(len(result), 1)
        self.assertEqual(result[0].span, Span(start=11, end=12))

    def test_check_numbering(self):
        """Testing function check_numbering."""
        # Test every candidate number against context sizes
        for size in range(1, 6):
            context = parser.segment_claims(
                "".join("{}. A pen.\n".format(_) for _ in range(1, size + 1))
            )
            for number in range(1, 11):
                candidate = parser.parse_claim("{}. The pen.".format(number))
                result = detectors.check_numbering(context, candidate)
                self.assertEqual(bool(result), number != size + 1)
                if bool(result) is True:
                    self.assertEqual(
                        _errors(result), [ErrorType.CLAIM_NUMBERING_ERROR]
                    )
                    self.assertEqual(
                        _text(candidate, result[0]), str(number)
                    )

    def test_check_dependency(self):
        """Testing function check_dependency."""
        # Initialize key variables
        dependent = parser.parse_claim("3. The pen of claim 1.")
        independent = parser.parse_claim(
            "3. A pen comprising a nib; and a cap."
        )

        # Compliance
        for candidate, required, expected in [
            (dependent, ClaimKind.DEPENDENT, []),
            (dependent, None, []),
            (
                dependent,
                ClaimKind.INDEPENDENT,
                [ErrorType.NON_COMPLIANT_DEPENDENCY],
            ),
            (independent, None, []),
            (independent, ClaimKind.INDEPENDENT, []),
            (
                independent,
                ClaimKind.DEPENDENT,
                [ErrorType.NON_COMPLIANT_DEPENDENCY],
            ),
        ]:
            result = detectors.check_dependency(
                self.context, candidate, required
            )
            self.assertEqual(_errors(result), expected)

        # Clarity
        for raw, expected in [
            ("3. The pen of claim 1 or 2.", []),
            ("3. The pen of claim 7.", [ErrorType.DEPENDENCY_CLARITY_ERROR]),
            ("3. The pen of claim 3.", [ErrorType.DEPENDENCY_CLARITY_ERROR]),
            (
                "3. The pen of claims 1 and 2.",
                [ErrorType.DEPENDENCY_CLARITY_ERROR],
            ),
        ]:
            candidate = parser.parse_claim(raw)
            result = detectors.check_dependency(
                self.context, candidate, ClaimKind.DEPENDENT
            )
            self.assertEqual(_errors(result), expected)
            for item in result:
                self.assertEqual(
                    item.detector, detectors.DEPENDENCY_CLARITY
                )

    def test_check_distinctiveness(self):
        """Testing function check_distinctiveness."""
        # Repeats
        for text in [
            data.CLAIM_1,
            data.CLAIM_2,
            "3.  a LIGHTED pencil, comprising: a pencil shaft; and a light "
            "attached to the pencil shaft",
        ]:
            result = detectors.check_distinctiveness(self.context, text)
            self.assertEqual(
                _errors(result), [ErrorType.NON_DISTINCTIVE_REPETITION]
            )

        # Distinct
        result = detectors.check_distinctiveness(
            self.context, data.DEPENDENT_CLAIM_3
        )
        self.assertEqual(result, [])

    def test_distinctive_key(self):
        """Testing function distinctive_key."""
        # Test
        self.assertEqual(
            detectors.distinctive_key("12.  A   Pen. "), "a pen"
        )

    def test_check_antecedent_basis(self):
        """Testing function check_antecedent_basis."""
        # Supported references
        chain = list(self.context.claims)
        self.assertEqual(detectors.check_antecedent_basis(chain), [])

        chain = [
            parser.parse_claim(
                "1. A widget comprising a lever, the lever being curved."
            )
        ]
        self.assertEqual(detectors.check_antecedent_basis(chain), [])

        root = parser.parse_claim(
            "1. A rack comprising a plurality of hooks; and a base."
        )
        for raw in [
            "2. The rack of claim 1, wherein the hook is steel.",
            "2. The rack of claim 1, wherein said base is steel.",
        ]:
            chain = [root, parser.parse_claim(raw)]
            self.assertEqual(detectors.check_antecedent_basis(chain), [])

        # Missing antecedent
        claim = parser.parse_claim(
            "2. The rack of claim 1, wherein the flange is red."
        )
        result = detectors.check_antecedent_basis([root, claim])
        self.assertEqual(
            _errors(result), [ErrorType.ANTECEDENT_REFERENCE_ERROR]
        )
        self.assertEqual(_text(claim, result[0]), "the flange")

        # Empty chains
        self.assertEqual(detectors.check_antecedent_basis([]), [])

    def test_check_transitional_phrase(self):
        """Testing function check_transitional_phrase."""
        # Test
        for raw, expected in [
            (data.CLAIM_1, []),
            (data.CLAIM_2, []),
            ("1. A device having a lever; and a cam.", []),
            (
                "1. A kit wherein: a box; and a lid.",
                [ErrorType.TRANSITIONAL_PHRASE_ERROR],
            ),
            (
                "1. A device made with a lever and a cam.",
                [ErrorType.TRANSITIONAL_PHRASE_ERROR],
            ),
        ]:
            claim = parser.parse_claim(raw)
            result = detectors.check_transitional_phrase(claim)
            self.assertEqual(_errors(result), expected)

    def test_check_claim_body(self):
        """Testing function check_claim_body."""
        # Test
        for raw, expected in [
            (data.CLAIM_1, []),
            (data.CLAIM_2, []),
            (
                "1. A device comprising a lever.",
                [ErrorType.CLAIM_BODY_DISCONNECTION],
            ),
            (
                "1. A device having a lever.",
                [ErrorType.CLAIM_BODY_DISCONNECTION],
            ),
            (
                "1. A kit wherein: a box.",
                [ErrorType.TRANSITIONAL_PHRASE_ERROR],
            ),
        ]:
            claim = parser.parse_claim(raw)
            result = detectors.check_claim_body(claim)
            self.assertEqual(_errors(result), expected)

    def test_check_vagueness(self):
        """Testing function check_vagueness."""
        # Packaged lexicon
        claim = parser.parse_claim("1. A surface that is substantially flat.")
        result = detectors.check_vagueness(claim)
        self.assertEqual(_errors(result), [ErrorType.VAGUENESS])
        self.assertEqual(result[0].severity, Severity.ADVISORY)
        self.assertEqual(_text(claim, result[0]), "substantially")

        # Whole words only
        claim = parser.parse_claim("1. A large-scale press.")
        self.assertEqual(detectors.check_vagueness(claim), [])
        claim = parser.parse_claim(data.CLAIM_1)
        self.assertEqual(detectors.check_vagueness(claim), [])

        # Custom lexicon
        claim = parser.parse_claim("1. A Flexible rod.")
        result = detectors.check_vagueness(claim, lexicon=["flexible"])
        self.assertEqual(_text(claim, result[0]), "Flexible")
        self.assertEqual(detectors.check_vagueness(claim, lexicon=[]), [])

    def test_load_lexicon(self):
        """Testing function load_lexicon."""
        # Packaged
        self.assertIn("substantially", detectors.load_lexicon())

        # Custom
        with tempfile.TemporaryDirectory() as directory:
            filepath = os.path.join(directory, "lexicon.txt")
            with open(filepath, "w", encoding="utf-8") as handle:
                handle.write("# Terms\nFlexible\n")
            self.assertEqual(detectors.load_lexicon(filepath), ("flexible",))

    def test_check_terminology(self):
        """Testing function check_terminology."""
        # "said" prevails
        claim = parser.parse_claim(
            "2. The device of claim 1, wherein said lever engages the cam "
            "and said cam is red."
        )
        result = detectors.check_terminology(claim)
        self.assertEqual(
            _errors(result), [ErrorType.TERMINOLOGICAL_INCONSISTENCY]
        )
        self.assertEqual(result[0].severity, Severity.ADVISORY)
        self.assertEqual(_text(claim, result[0]), "the cam")

        # Ties flag "said"
        claim = parser.parse_claim(
            "2. The device of claim 1, wherein said lever engages the cam."
        )
        result = detectors.check_terminology(claim)
        self.assertEqual(len(result), 1)
        self.assertTrue(_text(claim, result[0]).startswith("said lever"))

        # One form only
        claim = parser.parse_claim(data.CLAIM_2)
        self.assertEqual(detectors.check_terminology(claim), [])

    def test_check_preamble(self):
        """Testing function check_preamble."""
        # Initialize key variables
        root = parser.parse_claim(data.CLAIM_1)

        # Test
        claim = parser.parse_claim(data.CLAIM_2)
        self.assertEqual(detectors.check_preamble(root, claim), [])
        self.assertEqual(detectors.check_preamble(root, root), [])
        claim = parser.parse_claim(
            "2. The lamp of claim 1, wherein the light is red."
        )
        result = detectors.check_preamble(root, claim)
        self.assertEqual(
            _errors(result), [ErrorType.PREAMBLE_INCONSISTENCY]
        )
        self.assertEqual(result[0].severity, Severity.ADVISORY)
        self.assertEqual(_text(claim, result[0]), "The lamp")


class TestAbstractDetectors(unittest.TestCase):
    """Checks the abstract detectors."""

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

    def test_word_count(self):
        """Testing function word_count."""
        # Test
        self.assertEqual(detectors.word_count(data.abstract(150)), 150)
        self.assertEqual(detectors.word_count("  a\n b  "), 2)
        self.assertEqual(detectors.word_count(""), 0)

    def test_check_word_count(self):
        """Testing function check_word_count."""
        # Boundary
        self.assertEqual(detectors.check_word_count(data.abstract(150)), [])
        result = detectors.check_word_count(data.abstract(151))
        self.assertEqual(_errors(result), [ErrorType.OVERLY_WORDY])
        self.assertEqual(result[0].detector, detectors.WORD_COUNT)

        # Limit
        result = detectors.check_word_count(data.abstract(11), limit=10)
        self.assertEqual(len(result), 1)

    def test_copy_ratio(self):
        """Testing function copy_ratio."""
        # Test
        self.assertEqual(
            detectors.copy_ratio(data.CLAIM_1, data.CLAIM_1[3:]), 1.0
        )
        self.assertEqual(detectors.copy_ratio(data.CLAIM_1, ""), 0.0)
        self.assertEqual(
            detectors.copy_ratio(data.CLAIM_1, "Alpha beta. Gamma"), 0.0
        )
        self.assertAlmostEqual(
            detectors.copy_ratio("1. a b c d", "a b x y"), 0.5
        )

    def test_check_verbatim_copy(self):
        """Testing function check_verbatim_copy."""
        # Initialize key variables
        claims = parser.segment_claims(data.CLAIMS).claims

        # Test
        result = detectors.check_verbatim_copy(claims, data.CLAIM_1[3:])
        self.assertEqual(_errors(result), [ErrorType.INEFFECTIVE_SUMMARIZATION])
        self.assertIn("claim 1", result[0].message)
        result = detectors.check_verbatim_copy(
            claims, "A pencil carries a small lamp."
        )
        self.assertEqual(result, [])


if __name__ == "__main__":
    # Do the unit test
    unittest.main()
