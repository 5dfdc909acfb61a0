"""Define the tests.claimcheck_.harness package.

Args:
    None

Returns:
    None

"""
