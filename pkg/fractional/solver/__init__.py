"""Picard iteration for psi-Hilfer integrodifferential problems."""
