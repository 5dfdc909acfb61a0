#!/usr/bin/env python3
"""Test the rest module."""

import unittest
import os
import sys

from mock import Mock, patch
import requests

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
_EXPECTED = "{0}tests{0}claimcheck_{0}core".format(os.sep)
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

from claimcheck.core import rest

_URL = "http://encoder.example.org/embed"


def _reply(status_code, payload=None):
    """Create a fake HTTP reply."""
    result = Mock()
    result.status_code = status_code
    if isinstance(payload, Exception):
        result.json.side_effect = payload
    else:
        result.json.return_value = payload
    return result


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

    def test_post(self):
        """Testing function post."""
        # Initialize key variables
        session = Mock()
        session.post.return_value = _reply(200, {"embeddings": [[1.0]]})

        # Test
        result = rest.post(
            _URL, {"texts": ["a"]}, timeout=5, session=session
        )
        self.assertEqual(result, rest.Post(True, {"embeddings": [[1.0]]}))
        session.post.assert_called_once_with(
            _URL, json={"texts": ["a"]}, timeout=5, headers=None
        )

    @patch("claimcheck.core.rest.time")
    def test_post_status(self, mock_time):
        """Testing function post with a failing status code."""
        # Initialize key variables
        session = Mock()
        session.post.return_value = _reply(500)

        # Test
        result = rest.post(_URL, {}, retries=2, session=session)
        self.assertFalse(result.success)
        self.assertEqual(
            result.response, "Error 500 for post to {}.".format(_URL)
        )
        self.assertEqual(session.post.call_count, 2)
        self.assertEqual(mock_time.sleep.call_count, 1)

    @patch("claimcheck.core.rest.time")
    def test_post_retry(self, mock_time):
        """Testing function post recovering after a failure."""
        # Initialize key variables
        session = Mock()
        session.post.side_effect = [
            requests.exceptions.ConnectionError("refused"),
            _reply(200, {"ok": True}),
        ]

        # Test
        result = rest.post(_URL, {}, retries=3, session=session)
        self.assertEqual(result, rest.Post(True, {"ok": True}))
        self.assertEqual(session.post.call_count, 2)

    @patch("claimcheck.core.rest.time")
    def test_post_exception(self, mock_time):
        """Testing function post when the service can't be reached."""
        # Initialize key variables
        session = Mock()
        session.post.side_effect = requests.exceptions.ConnectionError(
            "refused"
        )

        # Test
        result = rest.post(_URL, {}, retries=1, session=session)
        self.assertFalse(result.success)
        self.assertTrue(
            result.response.startswith("Error posting to {}".format(_URL))
        )
        self.assertEqual(mock_time.sleep.call_count, 0)

    @patch("claimcheck.core.rest.time")
    def test_post_invalid_json(self, mock_time):
        """Testing function post with a reply that isn't JSON."""
        # Initialize key variables
        session = Mock()
        session.post.return_value = _reply(200, ValueError("bad"))

        # Test
        result = rest.post(_URL, {}, retries=1, session=session)
        self.assertFalse(result.success)
        self.assertEqual(
            result.response, "Invalid JSON returned from {}".format(_URL)
        )


if __name__ == "__main__":
    # Do the unit test
    unittest.main()
