"""Command line interface for claimcheck."""
