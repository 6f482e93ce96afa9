"""Floating-point growth estimates along tentacle curves."""
