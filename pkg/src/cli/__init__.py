"""Batch command line front end for the propagator toolkit."""

__version__ = "1.0.0"
