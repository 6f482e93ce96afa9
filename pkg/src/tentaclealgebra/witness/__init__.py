"""Exact search for polynomials of bounded growth."""
