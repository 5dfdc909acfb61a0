"""Define the tests.claimcheck_.core package.

Args:
    None

Returns:
    None

"""
