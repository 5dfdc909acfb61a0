"""Define the tests.claimcheck_.terms package.

Args:
    None

Returns:
    None

"""
