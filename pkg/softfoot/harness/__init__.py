"""In-silico stance experiments: terrain sweeps, support length, compliance maps and CSV export."""
