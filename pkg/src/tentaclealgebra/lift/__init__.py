"""Graded lift of B(S) to bounded polynomials one dimension up."""
