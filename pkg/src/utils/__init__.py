"""Utility modules for configuration, logging, errors and shared data types."""
