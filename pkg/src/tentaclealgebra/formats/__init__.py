"""Polynomial grammar, JSON input schema and reports."""
