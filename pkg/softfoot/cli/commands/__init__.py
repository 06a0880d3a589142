"""CLI command handlers.

Each command module stays thin and delegates to the library packages.
"""
