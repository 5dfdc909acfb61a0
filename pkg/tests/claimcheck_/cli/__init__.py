"""Define the tests.claimcheck_.cli package.

Args:
    None

Returns:
    None

"""
