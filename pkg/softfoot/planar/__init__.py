"""Closed-form planar foot models: rigid sole, lumped compliant sole and adaptive arch."""
