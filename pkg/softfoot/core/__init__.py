"""Core primitives: results, exit codes, config and boundary helpers."""
