"""Define the tests.claimcheck_.scorer package.

Args:
    None

Returns:
    None

"""
