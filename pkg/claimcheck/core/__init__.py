"""Define the claimcheck.core package.

Args:
    None

Returns:
    None

"""
