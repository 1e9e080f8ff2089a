"""Exact Lovasz theta and Schrijver bounds for generalized Johnson graphs."""

__version__ = "0.1.0"
