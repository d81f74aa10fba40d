"""Correlations, exact classical values and the explicit perfect correlations."""
