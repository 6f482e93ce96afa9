"""Exact arithmetic: rationals, xi-polynomials, Puiseux series, sparse polynomials."""
