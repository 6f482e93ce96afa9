"""Standard tentacles: B_d monomial bases and Hilbert bases."""
