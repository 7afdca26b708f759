"""Propagator toolkit for step and delta potentials: lattice walks, closed forms and path decomposition."""

__author__ = "Propagator Toolkit Development Team"
