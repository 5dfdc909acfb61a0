"""Define the tests.claimcheck_.lint package.

Args:
    None

Returns:
    None

"""
