"""Numeric core for psi-Hilfer fractional integrodifferential initial-value problems."""
