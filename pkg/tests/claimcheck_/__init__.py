"""Define the tests.claimcheck_ package.

Args:
    None

Returns:
    None

"""
