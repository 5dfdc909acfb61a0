"""Functions for posting JSON to HTTP services."""

# Standard imports
import time
from collections import namedtuple

# PIP imports
import requests

# Import repository libraries
from claimcheck.core import log

Post = namedtuple("Post", "success response")


def post(url, data, timeout=30, retries=3, session=None, headers=None):
    """Post JSON to a URL and decode the JSON reply.

    Args:
        url: URL for posting
        data: Data to post
        timeout: Timeout in seconds for each attempt
        retries: Number of attempts before giving up
        session: requests.Session to reuse, a new one is made if None
        headers: Extra HTTP headers

    Returns:
        result: Post named tuple. response is the decoded JSON on success
            and a description of the last failure otherwise

    """
    # Initialize key variables
    success = False
    response = None
    attempts = max(1, int(retries))

    # Log
    log_message = "Attempting to post data to {}.".format(url)
    log.log2debug(1012, log_message)

    # Post data, retrying on failure
    for attempt in range(1, attempts + 1):
        try:
            if session is None:
                with requests.Session() as _session:
                    result = _session.post(
                        url, json=data, timeout=timeout, headers=headers
                    )
            else:
                result = session.post(
                    url, json=data, timeout=timeout, headers=headers
                )
        except requests.exceptions.RequestException as error:
            response = "Error posting to {}: {}".format(url, error)
            log.log2warning(1013, response)
            _backoff(attempt, attempts)
            continue

        # Define success
        if result.status_code == 200:
            try:
                response = result.json()
            except ValueError:
                response = "Invalid JSON returned from {}".format(url)
                log.log2warning(1014, response)
                _backoff(attempt, attempts)
                continue
            success = True

            # Log
            log_message = "Successfully posted data to {}.".format(url)
            log.log2debug(1015, log_message)
            break
        else:
            response = "Error {} for post to {}.".format(
                result.status_code, url
            )
            log.log2warning(1016, response)
            _backoff(attempt, attempts)

    # Return
    result = Post(success=success, response=response)
    return result


def _backoff(attempt, attempts):
    """Sleep before the next attempt.

    Args:
        attempt: Number of the attempt that just failed
        attempts: Total attempts allowed

    Returns:
        None

    """
    if attempt < attempts:
        time.sleep(min(0.5 * attempt, 2))
