"""Newton-Puiseux expansions at infinity."""
