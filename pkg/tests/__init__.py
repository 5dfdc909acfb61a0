"""Define the tests package.

Args:
    None

Returns:
    None

"""
