"""Chat-completion client that drafts candidate outputs for pairing."""

# Application imports
from claimcheck import EMBEDDER_TIMEOUT, EMBEDDER_RETRIES
from claimcheck.core import log
from claimcheck.core import rest
from claimcheck.core.errors import HarnessError
from claimcheck.claims import ClaimKind
from claimcheck.corpus import Task

ABSTRACT_PROMPT = (
    "Please draft a patent abstract from the provided claims. The abstract "
    "should concisely summarize the technical disclosure, enabling any "
    "reader to quickly understand the subject matter.\n"
    "Claims: {claims}\n"
    "Abstract:"
)

DEPENDENT_PROMPT = (
    "Please assist me in drafting the next DEPENDENT claim based on the "
    "provided patent claims below. This claim should be written in a "
    "dependent format, precisely specifying its dependency on one or more "
    "preceding claims. It should be legally sound, in line with patent "
    "claim drafting conventions, and use the existing claims as a basis "
    "for your draft. Ensure that the claim you draft is clearly and "
    "explicitly dependent on a previous claim.\n"
    "Claims: {claims}"
)

INDEPENDENT_PROMPT = (
    "Please assist me in drafting the next INDEPENDENT claim in the "
    "series, directly following the provided patent claims below. This "
    "independent claim should be precise, legally sound, and in line with "
    "patent claim drafting conventions. Please continue the numbering "
    "scheme from the previous claims and ensure that this claim builds "
    "upon the previous claims logically.\n"
    "Claims: {claims}"
)


def build_prompt(task, claims, required_kind=None):
    """Fill the instruction template for a task.

    Args:
        task: Task
        claims: Raw input claim text
        required_kind: ClaimKind for the next-claim task

    Returns:
        result: Prompt string

    """
    # Select the template
    if task is Task.CLAIMS2ABSTRACT:
        template = ABSTRACT_PROMPT
    elif required_kind is ClaimKind.DEPENDENT:
        template = DEPENDENT_PROMPT
    elif required_kind is ClaimKind.INDEPENDENT:
        template = INDEPENDENT_PROMPT
    else:
        raise HarnessError(
            "The next-claim task needs the required claim kind"
        )

    # Return
    result = template.format(claims=claims.strip())
    return result


def generate(
    url,
    task,
    claims,
    required_kind=None,
    model=None,
    api_key=None,
    timeout=EMBEDDER_TIMEOUT,
    retries=EMBEDDER_RETRIES,
):
    """Draft one output with a chat-completion service.

    Args:
        url: Chat-completion URL
        task: Task
        claims: Raw input claim text
        required_kind: ClaimKind for the next-claim task
        model: Model name sent to the service
        api_key: Bearer token, None to send no authorization
        timeout: Timeout in seconds per request
        retries: Attempts per request

    Returns:
        result: Generated text

    """
    # Initialize key variables
    payload = {
        "messages": [
            {
                "role": "user",
                "content": build_prompt(task, claims, required_kind),
            }
        ],
        "temperature": 0,
        "stream": False,
    }
    if model is not None:
        payload["model"] = model
    headers = None
    if bool(api_key) is True:
        headers = {"Authorization": "Bearer {}".format(api_key)}

    # Post
    reply = rest.post(
        url, payload, timeout=timeout, retries=retries, headers=headers
    )
    if reply.success is False:
        log_message = "Generation service failed: {}".format(reply.response)
        log.log2warning(1030, log_message)
        raise HarnessError(log_message)

    # Return
    try:
        result = reply.response["choices"][0]["message"]["content"]
    except (KeyError, IndexError, TypeError):
        raise HarnessError("Generation service returned no message content")
    if isinstance(result, str) is False or bool(result.strip()) is False:
        raise HarnessError("Generation service returned an empty message")
    return result.strip()
