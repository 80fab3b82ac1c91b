"""Exact signature, Blanchfield and satellite-operator computations for knots."""

__version__ = "0.1.0"
