"""Uniqueness certificate, Gronwall bounds and continuous-dependence envelopes."""
