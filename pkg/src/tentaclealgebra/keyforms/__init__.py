"""Key forms: construction, recovery and classification."""
