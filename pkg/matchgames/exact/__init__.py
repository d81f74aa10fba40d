"""Exact rational linear programming and the programs built on it."""
