"""SoftFoot statics lab."""

__version__ = "0.1.0"
