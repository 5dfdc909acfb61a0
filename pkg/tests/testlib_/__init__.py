"""Define the tests.testlib_ package.

Args:
    None

Returns:
    None

"""
