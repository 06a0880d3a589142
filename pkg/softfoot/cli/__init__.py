"""CLI layer: option parsing and file output.

Computation lives in softfoot/statics, softfoot/planar and softfoot/harness.
"""
