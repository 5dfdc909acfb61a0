"""Define the tests.claimcheck_.claims package.

Args:
    None

Returns:
    None

"""
