"""Define the tests.claimcheck_.corpus package.

Args:
    None

Returns:
    None

"""
